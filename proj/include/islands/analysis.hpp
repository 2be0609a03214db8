#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "islands/engine.hpp"
#include "islands/transforms.hpp"

namespace islands {

// Identity checkers. Each builds every operand polynomial by independent
// enumeration and returns LHS - RHS, so a failing identity leaves a
// diagnosable witness instead of a bare boolean. Hypothesis violations
// (wrong operand shapes, shared colors, ...) throw.

/// beta(union) - sum over parts of (1+x)^{n - n_j} beta(part).
IntPoly residual_disjoint(const std::vector<EmbeddedGraph>& parts,
                          InsertionSpec ins = {});

/// beta(graph with pendant edge at v) - [(1+x) beta + (1+x)^{n-1}].
IntPoly residual_appendix(const EmbeddedGraph& eg, int v, InsertionSpec ins = {});

/// beta(bridge) - [beta(disjoint union) - x (1+x)^{n1+n2-2}].
IntPoly residual_bridge(const EmbeddedGraph& a, const EmbeddedGraph& b, int attach_a, int attach_b,
                        InsertionSpec ins = {});

/// beta(wedge) - [(1+x)^{n1-1} beta_b + (1+x)^{n2-1} beta_a - (1+x)^{n1+n2-2}].
IntPoly residual_wedge(const EmbeddedGraph& a, const EmbeddedGraph& b, int attach_a, int attach_b,
                       InsertionSpec ins = {});

/// beta - [x beta(contracted) + beta(-v) + beta(-w) - (1+x) beta(-v-w)]
/// for a marked non-loop edge joining v and w.
IntPoly residual_contract(const EmbeddedGraph& eg, int edge);

/// beta(subdivided) - [x beta + beta(-e) + (1+x)^{n-2}]; the constant term is
/// (1+x)^{n-1} when e is a self-loop (the pendant vertex left by deleting the
/// interior vertex is isolated rather than attached).
IntPoly residual_split(const EmbeddedGraph& eg, int edge);

/// Colored merge identity:
/// beta - [x beta(c merged into c2) + beta(drop c) + beta(drop c2) - (1+x) beta(drop both)].
IntPoly residual_color_merge(const EmbeddedGraph& eg, const Coloring& col, int c, int c2);

/// Colored disjoint/appendix/bridge variants; the two operands' color spaces
/// are taken as disjoint (ids are relabeled side by side).
IntPoly residual_colored_disjoint(const EmbeddedGraph& a, const Coloring& ca,
                                  const EmbeddedGraph& b, const Coloring& cb,
                                  InsertionSpec ins = {});
IntPoly residual_colored_appendix(const EmbeddedGraph& eg, const Coloring& col, int v,
                                  InsertionSpec ins = {});
IntPoly residual_colored_bridge(const EmbeddedGraph& a, const Coloring& ca, const EmbeddedGraph& b,
                                const Coloring& cb, int attach_a, int attach_b,
                                InsertionSpec ins = {});

/// Two-channel junction rearrangement (planar). Builds both junction graphs
/// over four marked endpoints and returns
/// [beta(I) - beta(II)] - ([beta(I-m) + beta(I-n)] - [beta(II-p) + beta(II-q)]).
IntPoly residual_pants(const EmbeddedGraph& eg, int v1, int v2, int v3, int v4);

/// The two junction graphs over the marked base graph: the first pairs
/// {v1,v2} at one new vertex and {v3,v4} at the other; the second pairs
/// {v1,v3} and {v2,v4}. Planar mode.
std::pair<EmbeddedGraph, EmbeddedGraph> junction_graphs(const EmbeddedGraph& eg, int v1, int v2,
                                                        int v3, int v4);

/// xi_j counts induced subgraphs on j vertices containing v1 and v2 whose
/// face count drops by exactly 1 when e is removed; returns sum xi_j x^{j-1}.
/// When v1 and v2 stay co-islanded without e (a parallel edge or self-loop),
/// beta(eg) = beta(eg - e) + xi.
IntPoly xi_poly(const EmbeddedGraph& eg, int v1, int v2, int edge);

/// s_k = number of vertex subsets of size k containing both i and j with i, j
/// in the same island of the induced subgraph. Indexed by k (entries 0..n).
std::vector<unsigned long long> s_counts(const Multigraph& g, int i, int j);

/// 2x^2 sum_k (s_k^{13} + s_k^{24} - s_k^{12} - s_k^{34}) x^{k-2}, the closed
/// form for the difference between the two junction polynomials:
/// pants_diff == beta(second junction) - beta(first junction).
IntPoly pants_diff(const Multigraph& g, int v1, int v2, int v3, int v4);

// --- detection ---------------------------------------------------------------

enum class DetectKind { Tree, DecoratedTree, Cycle, None };

/// Syntactic classification of a polynomial against the closed shapes on n
/// vertices. Applicability of the conclusions (planar / connected hypotheses)
/// is the caller's context; this reports only the exact-shape match.
struct DetectResult {
    DetectKind kind = DetectKind::None;
    mpz_class a, b;             // two-term coefficients when meaningful
    mpz_class loops, parallels;  // decoration counts for DecoratedTree
    int cycle_face_term = 0;     // 1 or 2 for Cycle
    std::vector<mpz_class> basis;  // full decomposition over (1+x)^k, the witness
};

DetectResult detect(const IntPoly& p, int n);

// --- alternating subgraph sums -----------------------------------------------

struct EulerEmergence {
    mpz_class lhs;  // (-1)^n beta(-1) + sum_{j=3}^{n-1} sum_{|s|=j} (-1)^j beta_s(-1)
    mpz_class rhs;  // chi - 2 f
};

/// Needs n >= 3. Refuses marked multigraphs (self-loops or parallel marked
/// edges) unless allow_multigraph, since the vertex- and edge-level terms of
/// the alternating sum collapse only for simple graphs.
EulerEmergence euler_emergence(const EmbeddedGraph& eg, bool allow_multigraph = false);

/// beta - [f x^{n-1} + alternating sum over proper induced subgraphs of their
/// betas]; identically zero by rearrangement, so the residual is a self-test.
IntPoly beta_recursion_residual(const EmbeddedGraph& eg);

/// Scaling from a total island count to the multipartite information value:
/// -omega * beta_at_minus1.
mpq_class tee_information(const mpz_class& beta_at_minus1, const mpq_class& omega);

// --- single-dispatch instance form --------------------------------------------

enum class IdentityKind {
    Disjoint,
    Appendix,
    Bridge,
    Wedge,
    Contract,
    Split,
    ColorMerge,
    ColoredDisjoint,
    ColoredAppendix,
    ColoredBridge,
    Pants,
};

/// Operand bundle for check_identity; fields are read per kind.
struct IdentityInstance {
    IdentityKind kind;
    std::vector<EmbeddedGraph> graphs;
    std::vector<Coloring> colorings;
    int edge = -1;
    int v1 = -1, v2 = -1, v3 = -1, v4 = -1;
    InsertionSpec ins{};
};

IntPoly check_identity(const IdentityInstance& inst);

}  // namespace islands
