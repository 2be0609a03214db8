#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace islands {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// Always normalized: no trailing zero coefficients; the zero polynomial is
/// the empty coefficient vector (degree() == -1).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(const mpz_class& c);
    /// c * x^k
    static IntPoly monomial(const mpz_class& c, int k);
    /// (1+x)^k expanded, k >= 0.
    static IntPoly one_plus_x_pow(int k);

    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^i (zero beyond the degree).
    const mpz_class& coeff(int i) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly scaled(const mpz_class& c) const;
    /// Multiply by x^k.
    IntPoly shifted(int k) const;

    mpz_class eval(const mpz_class& x) const;

    bool operator==(const IntPoly& o) const = default;

    /// "c0 + c1 x + c2 x^2 ..." with zero terms omitted; "0" for zero.
    std::string str() const;

private:
    void normalize();
    std::vector<mpz_class> coeffs_;
};

/// Exact binomial coefficient; zero when k < 0 or k > n, and zero for n < 0.
mpz_class binomial(int n, int k);

/// Coefficients a_0..a_{n-1} with p = sum a_k (1+x)^k. Requires deg p <= n-1;
/// the coefficients are the unique exact integers obtained by substituting
/// y = 1+x.
std::vector<mpz_class> shifted_basis_decompose(const IntPoly& p, int n);

/// Inverse of shifted_basis_decompose.
IntPoly shifted_basis_recompose(const std::vector<mpz_class>& a);

}  // namespace islands
