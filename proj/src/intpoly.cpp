#include "islands/intpoly.hpp"

#include "islands/error.hpp"

namespace islands {

namespace {
const mpz_class kZero = 0;
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(const mpz_class& c) {
    IntPoly p;
    if (c != 0) p.coeffs_.push_back(c);
    return p;
}

IntPoly IntPoly::monomial(const mpz_class& c, int k) {
    if (k < 0) throw Error("monomial degree must be nonnegative");
    IntPoly p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<size_t>(k) + 1, kZero);
        p.coeffs_.back() = c;
    }
    return p;
}

IntPoly IntPoly::one_plus_x_pow(int k) {
    if (k < 0) throw Error("(1+x)^k requires k >= 0");
    std::vector<mpz_class> c(static_cast<size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) c[static_cast<size_t>(i)] = binomial(k, i);
    return IntPoly(std::move(c));
}

const mpz_class& IntPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<mpz_class> c(std::max(coeffs_.size(), o.coeffs_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < coeffs_.size()) c[i] += coeffs_[i];
        if (i < o.coeffs_.size()) c[i] += o.coeffs_[i];
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
    std::vector<mpz_class> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
    IntPoly p;
    p.coeffs_ = std::move(c);
    return p;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<mpz_class> c(coeffs_.size() + o.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::scaled(const mpz_class& s) const {
    std::vector<mpz_class> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] * s;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::shifted(int k) const {
    if (k < 0) throw Error("shift exponent must be nonnegative");
    if (is_zero()) return IntPoly();
    std::vector<mpz_class> c(coeffs_.size() + static_cast<size_t>(k));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i + static_cast<size_t>(k)] = coeffs_[i];
    return IntPoly(std::move(c));
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
        const mpz_class& c = coeffs_[static_cast<size_t>(i)];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        std::string m = mag.get_str();
        if (i == 0) {
            out += m;
        } else {
            if (mag != 1) out += m + " ";
            out += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

mpz_class binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

std::vector<mpz_class> shifted_basis_decompose(const IntPoly& p, int n) {
    if (n < 1) throw Error("shifted basis needs n >= 1");
    if (p.degree() > n - 1)
        throw Error("degree " + std::to_string(p.degree()) + " too large for basis (1+x)^0..(1+x)^" +
                    std::to_string(n - 1));
    // Repeated synthetic division by (x+1): the remainder of step k is a_k.
    std::vector<mpz_class> work = p.coeffs();
    std::vector<mpz_class> a(static_cast<size_t>(n), mpz_class(0));
    for (int k = 0; k < n && !work.empty(); ++k) {
        // divide work by (x+1): quotient q, remainder r = value at -1
        std::vector<mpz_class> q(work.size() > 1 ? work.size() - 1 : 0);
        mpz_class r = 0;
        for (size_t i = work.size(); i-- > 0;) {
            mpz_class cur = work[i] + r;
            if (i == 0) {
                a[static_cast<size_t>(k)] = cur;
            } else {
                q[i - 1] = cur;
                r = -cur;  // x = -1 accumulation for the next lower coefficient
            }
        }
        work = std::move(q);
        while (!work.empty() && work.back() == 0) work.pop_back();
    }
    return a;
}

IntPoly shifted_basis_recompose(const std::vector<mpz_class>& a) {
    IntPoly p;
    for (size_t k = 0; k < a.size(); ++k)
        p = p + IntPoly::one_plus_x_pow(static_cast<int>(k)).scaled(a[k]);
    return p;
}

}  // namespace islands
