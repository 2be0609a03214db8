#pragma once

#include <optional>
#include <string>
#include <vector>

#include "islands/embedded_graph.hpp"

namespace islands {

/// Rotation positions for splicing new darts into existing cyclic orders.
/// Positions index into the current rotation (0..length inclusive) and apply
/// sequentially: when the two darts land at the same vertex, `second` indexes
/// the rotation as it stands after the first insertion. Extensions of an
/// embedding are generally not isotopic, so the choice matters; planar mode
/// ignores it.
struct InsertionSpec {
    int first = 0;
    int second = 0;
};

/// New marked self-loop at v. In surface mode the loop's two darts are
/// spliced into v's rotation; faces and genus are retraced.
EmbeddedGraph add_self_loop(const EmbeddedGraph& eg, int v, InsertionSpec ins = {});

/// New marked edge between distinct marked vertices, already adjacent
/// (similar adjacency) or not (plain short-circuit edge).
EmbeddedGraph add_parallel_edge(const EmbeddedGraph& eg, int v1, int v2, InsertionSpec ins = {});

struct AppendixResult {
    EmbeddedGraph graph;
    int new_vertex;
    int new_edge;
};

/// New pendant (appendix) vertex attached at v by a marked edge. In surface
/// mode the attaching dart is spliced at ins.first of v's rotation.
AppendixResult add_appendix(const EmbeddedGraph& eg, int v, InsertionSpec ins = {});

struct SubdivideResult {
    EmbeddedGraph graph;
    int new_vertex;  // degree-2 marked vertex in the interior of the edge
    int kept_edge;   // keeps the subdivided edge's id, now ending at new_vertex
    int new_edge;    // second half, appended id
};

/// Insert a vertex in the interior of a marked edge (self-loops allowed).
/// Isotopy class does not depend on the position along the edge.
SubdivideResult subdivide(const EmbeddedGraph& eg, int edge);

struct ContractResult {
    EmbeddedGraph graph;
    int merged_vertex;               // new id of the surviving endpoint
    std::vector<int> vertex_relabel;  // old host vertex -> new host vertex
    std::vector<int> edge_relabel;    // old host edge -> new host edge (-1 for the contracted one)
};

/// Collapse a marked non-loop edge. The merged vertex keeps the second
/// endpoint's identity and indices are compacted. In surface mode the two
/// rotations are spliced at the removed darts, preserving both cyclic orders,
/// so the ambient surface is unchanged.
ContractResult contract(const EmbeddedGraph& eg, int edge);

enum class CombineKind { Disjoint, Bridge, Wedge };

struct CombineResult {
    EmbeddedGraph graph;
    std::vector<int> vertex_map_a, vertex_map_b;  // operand vertex -> combined host vertex
    std::vector<int> edge_map_a, edge_map_b;
    int connector_edge = -1;  // bridge edge id; -1 for planar disjoint and after wedge
};

/// Place two embedded graphs side by side (Disjoint), join them by a new
/// marked edge (Bridge), or identify the attach vertices (Wedge, implemented
/// as bridge followed by contraction). Surface mode joins the two host maps
/// through one connecting edge spliced at the attach vertices' rotations
/// (positions from `ins`); for Disjoint that edge is scaffold only and stays
/// unmarked. attach_a/attach_b default to vertex 0 of each side.
CombineResult combine(CombineKind kind, const EmbeddedGraph& a, const EmbeddedGraph& b,
                      int attach_a = 0, int attach_b = 0, InsertionSpec ins = {});

/// Recolor every c-colored vertex with c2 and re-densify color ids. The
/// graph itself is unchanged. Names, when present, follow the surviving ids.
Coloring merge_colors(const Coloring& col, int c, int c2);

/// Restriction of a coloring to the marked vertices of a reduced graph,
/// re-densified.
Coloring restrict_coloring(const Coloring& col, const EmbeddedGraph& reduced);

/// Coloring carried through a contraction: the merged vertex keeps the second
/// endpoint's color; ids are re-densified if the removed vertex held the last
/// use of its color.
Coloring remap_coloring_after_contract(const Coloring& col, const ContractResult& res,
                                       int old_v, int old_w);

// --- operation scripts ------------------------------------------------------

struct ScriptOp {
    enum class Kind { Loop, Par, Subdiv, Contract, Bridge, Wedge };
    Kind kind;
    int a = 0, b = 0;
    InsertionSpec ins{};
};

/// One operation per line, `#` comments:
///   loop v [pos pos] | par v w [pos pos] | subdiv e | contract e |
///   bridge v w [pos pos] | wedge v w [pos pos]
/// `bridge`/`wedge` join two islands of the marked graph and require their
/// endpoints in different islands.
std::vector<ScriptOp> parse_script(const std::string& text);

struct TransformState {
    EmbeddedGraph graph;
    std::optional<Coloring> coloring;
};

/// Applies script operations in order. New vertices from `subdiv` receive a
/// fresh color when a coloring is present.
TransformState apply_script(TransformState state, const std::vector<ScriptOp>& ops);

// --- tree-cycle generation ---------------------------------------------------

/// One admissible operation: either a self-loop at v subdivided `subdivisions`
/// times, or a similar adjacency between the adjacent vertices v and w
/// subdivided `subdivisions` times. Each subdivision splits the newest edge.
struct AdmissibleOp {
    bool similar = false;  // false: self-loop op, true: similar-adjacency op
    int v = 0, w = 0;
    int subdivisions = 0;
};

/// Planar graph grown from a seed tree (v >= 3) by a finite sequence of
/// admissible operations.
EmbeddedGraph tree_cycle_graph(const Multigraph& tree, const std::vector<AdmissibleOp>& script);

}  // namespace islands
