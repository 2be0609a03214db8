#pragma once

#include "islands/embedded_graph.hpp"
#include "islands/intpoly.hpp"

namespace islands {

/// The counts D_1..D_n (or the colored variants), D_i being the sum of f over
/// all induced subgraphs on i vertices (resp. over saturated color classes
/// using i colors). d[i-1] holds D_i.
struct CountVector {
    std::vector<unsigned long long> d;

    int length() const { return static_cast<int>(d.size()); }
    bool operator==(const CountVector& o) const = default;
};

/// Practical ceiling for full subset enumeration unless the caller forces it.
inline constexpr int kDefaultEnumerationLimit = 24;

/// D_i for i = 1..n over all vertex subsets of the marked graph, including
/// i = n. Enumeration is by increasing subset encoding, accumulated per
/// popcount bucket; with threads > 1 the encoding range is split into
/// contiguous chunks whose partial counts combine by entrywise addition.
CountVector island_counts(const EmbeddedGraph& eg, int threads = 1);

struct BetaPolynomials {
    IntPoly bar;    // sum of D_i x^{i-1} for i = 1..n-1
    IntPoly total;  // bar + D_n x^{n-1}
};

/// Both island boundary polynomials from one count vector. total(-1) is the
/// total island count.
BetaPolynomials beta_polynomials(const EmbeddedGraph& eg, int threads = 1);
BetaPolynomials beta_polynomials(const CountVector& counts);

IntPoly beta_total(const EmbeddedGraph& eg, int threads = 1);

/// Colored counts: enumeration over the 2^c - 1 nonempty color subsets; the
/// class member for a color subset S is the induced subgraph on every marked
/// vertex whose color lies in S.
CountVector colored_counts(const EmbeddedGraph& eg, const Coloring& col);

/// Colored island boundary polynomial: sum of the colored D_i x^{i-1} for
/// i = 1..c (the i = c term included).
IntPoly beta_colored(const EmbeddedGraph& eg, const Coloring& col);

}  // namespace islands
