#pragma once

#include "islands/intpoly.hpp"
#include "islands/multigraph.hpp"

namespace islands {

/// Subsets of the ground set {1..n} are encoded with bit i-1 for element i.
using GroundSubset = std::uint64_t;

/// Number of maximal runs of A within the linear order 1..n.
int islands_on_line(GroundSubset a, int n);

/// Number of maximal runs of A on the cycle 1..n (indices mod n); the full
/// circle counts as one island. Empty set gives 0.
int islands_on_circle(GroundSubset a, int n);

enum class BMode { Brute, Closed, Recurrence };

/// Total line-island count over all m-subsets of {1..n}, 1 <= m <= n.
/// Brute enumerates subsets; Closed is (n-m+1) C(n-1, m-1); Recurrence
/// uses B(n,m) = B(n-1,m) + B(n-1,m-1) + C(n-2, m-1).
mpz_class line_island_total(int n, int m, BMode mode = BMode::Closed);

enum class DMode { Brute, ViaB, Closed, Alternating };

/// Total circle-island count over all m-subsets of {1..n}. Closed forms need
/// 1 <= m < n; Brute also accepts m = n. ViaB is B(n,m) - C(n-2, m-2),
/// Closed is n C(n-2, m-1), Alternating is the signed binomial sum.
mpz_class circle_island_total(int n, int m, DMode mode = DMode::Closed);

enum class ClosedBetaKind { Tree, CycleSeparating, CycleNonSeparating, Discrete, AppendixWedge };

/// Closed island boundary polynomials:
///   Tree(n), n >= 2:            (n-1)(1+x)^{n-2} + (1+x)^{n-1}
///   CycleSeparating(n), n >= 3: n(1+x)^{n-2} + 2x^{n-1}
///   CycleNonSeparating(n):      n(1+x)^{n-2} + x^{n-1}
///   Discrete(n), n >= 1:        n(1+x)^{n-1}
///   AppendixWedge(r), r >= 1:   r x + (r+1), the polynomial of a one-vertex
///                               wedge of r-1 circles with a pendant edge
///                               (r = complement components of the wedge).
IntPoly closed_beta(ClosedBetaKind kind, int n);

/// Builders for the standard graphs the closed forms describe.
Multigraph path_graph(int n);
Multigraph cycle_graph(int n);
Multigraph complete_graph(int n);
Multigraph discrete_graph(int n);

}  // namespace islands
