#include "islands/closed_forms.hpp"

#include <map>

#include "islands/error.hpp"

namespace islands {

int islands_on_line(GroundSubset a, int n) {
    int runs = 0;
    bool prev = false;
    for (int i = 0; i < n; ++i) {
        bool cur = (a >> i) & 1u;
        if (cur && !prev) ++runs;
        prev = cur;
    }
    return runs;
}

int islands_on_circle(GroundSubset a, int n) {
    if (n < 1) return 0;
    GroundSubset full = (n >= 64) ? ~GroundSubset{0} : (GroundSubset{1} << n) - 1;
    a &= full;
    if (a == full) return a ? 1 : 0;
    int runs = 0;
    for (int i = 0; i < n; ++i) {
        bool cur = (a >> i) & 1u;
        bool prev = (a >> ((i + n - 1) % n)) & 1u;
        if (cur && !prev) ++runs;
    }
    return runs;
}

namespace {

void check_range(int n, int m, bool allow_full) {
    if (m < 1 || n < 1 || m > n || (!allow_full && m == n))
        throw Error("arguments out of range: n=" + std::to_string(n) + ", m=" + std::to_string(m));
}

mpz_class brute_total(int n, int m, bool circle) {
    if (n > 30) throw Error("brute-force island totals limited to n <= 30");
    mpz_class total = 0;
    GroundSubset end = GroundSubset{1} << n;
    for (GroundSubset a = 0; a < end; ++a) {
        if (__builtin_popcountll(a) != m) continue;
        total += circle ? islands_on_circle(a, n) : islands_on_line(a, n);
    }
    return total;
}

mpz_class line_recurrence(int n, int m, std::map<std::pair<int, int>, mpz_class>& memo) {
    if (m < 1 || m > n) return 0;
    if (m == n) return 1;
    if (m == 1) return n;
    auto it = memo.find({n, m});
    if (it != memo.end()) return it->second;
    mpz_class r = line_recurrence(n - 1, m, memo) + line_recurrence(n - 1, m - 1, memo) +
                  binomial(n - 2, m - 1);
    memo.emplace(std::make_pair(n, m), r);
    return r;
}

}  // namespace

mpz_class line_island_total(int n, int m, BMode mode) {
    check_range(n, m, true);
    switch (mode) {
        case BMode::Brute:
            return brute_total(n, m, false);
        case BMode::Closed:
            return mpz_class(n - m + 1) * binomial(n - 1, m - 1);
        case BMode::Recurrence: {
            std::map<std::pair<int, int>, mpz_class> memo;
            return line_recurrence(n, m, memo);
        }
    }
    throw Error("unknown mode");
}

mpz_class circle_island_total(int n, int m, DMode mode) {
    check_range(n, m, mode == DMode::Brute);
    switch (mode) {
        case DMode::Brute:
            return brute_total(n, m, true);
        case DMode::ViaB:
            return line_island_total(n, m, BMode::Closed) - binomial(n - 2, m - 2);
        case DMode::Closed:
            return mpz_class(n) * binomial(n - 2, m - 1);
        case DMode::Alternating: {
            mpz_class total = 0;
            for (int j = 0; j < m; ++j) {
                mpz_class term = mpz_class(m - j) * binomial(n, m - j);
                total += (j % 2 == 0) ? term : -term;
            }
            return total;
        }
    }
    throw Error("unknown mode");
}

IntPoly closed_beta(ClosedBetaKind kind, int n) {
    switch (kind) {
        case ClosedBetaKind::Tree:
            if (n < 2) throw Error("tree form needs n >= 2");
            return IntPoly::one_plus_x_pow(n - 2).scaled(n - 1) + IntPoly::one_plus_x_pow(n - 1);
        case ClosedBetaKind::CycleSeparating:
            if (n < 3) throw Error("cycle form needs n >= 3");
            return IntPoly::one_plus_x_pow(n - 2).scaled(n) + IntPoly::monomial(2, n - 1);
        case ClosedBetaKind::CycleNonSeparating:
            if (n < 3) throw Error("cycle form needs n >= 3");
            return IntPoly::one_plus_x_pow(n - 2).scaled(n) + IntPoly::monomial(1, n - 1);
        case ClosedBetaKind::Discrete:
            if (n < 1) throw Error("discrete form needs n >= 1");
            return IntPoly::one_plus_x_pow(n - 1).scaled(n);
        case ClosedBetaKind::AppendixWedge:
            if (n < 1) throw Error("appendix-wedge form needs r >= 1");
            return IntPoly{n + 1, n};
    }
    throw Error("unknown kind");
}

Multigraph path_graph(int n) {
    if (n < 1) throw Error("path needs n >= 1");
    Multigraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Multigraph cycle_graph(int n) {
    if (n < 3) throw Error("cycle needs n >= 3");
    Multigraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Multigraph complete_graph(int n) {
    if (n < 1) throw Error("complete graph needs n >= 1");
    Multigraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Multigraph discrete_graph(int n) {
    if (n < 0) throw Error("vertex count must be nonnegative");
    return Multigraph(n);
}

}  // namespace islands
