#pragma once

#include <optional>
#include <string>
#include <vector>

#include "islands/multigraph.hpp"
#include "islands/rotation_map.hpp"

namespace islands {

/// A graph under study. Either a plain multigraph in planar mode (faces come
/// from the Euler formula per island and are embedding-independent), or a
/// marked subgraph of a cellular host map in surface mode. Unmarked host
/// vertices and edges are scaffolding: they shape the surface but are not
/// part of the graph whose subgraphs get enumerated.
///
/// Marked vertices are assigned dense enumeration slots 0..n-1 in increasing
/// host-vertex order; all subset arguments below are slot masks.
///
/// Immutable after construction; transforms build new values.
class EmbeddedGraph {
public:
    /// Empty planar graph.
    EmbeddedGraph() : graph_(0) {}

    static EmbeddedGraph planar(Multigraph g);
    static EmbeddedGraph planar(Multigraph g, std::vector<char> vertex_marks,
                                std::vector<char> edge_marks);
    static EmbeddedGraph surface(RotationMap m);
    static EmbeddedGraph surface(RotationMap m, std::vector<char> vertex_marks,
                                 std::vector<char> edge_marks);

    bool surface_mode() const { return map_.has_value(); }
    const Multigraph& host() const { return graph_; }
    const RotationMap& map() const;

    bool vertex_marked(int host_vertex) const { return vmark_[static_cast<size_t>(host_vertex)] != 0; }
    bool edge_marked(int host_edge) const { return emark_[static_cast<size_t>(host_edge)] != 0; }
    const std::vector<char>& vertex_marks() const { return vmark_; }
    const std::vector<char>& edge_marks() const { return emark_; }

    /// Number of marked vertices (the n of the enumeration).
    int marked_count() const { return static_cast<int>(slot_vertex_.size()); }
    int slot_of(int host_vertex) const;
    int vertex_of_slot(int slot) const { return slot_vertex_[static_cast<size_t>(slot)]; }
    VertexSubset full_slot_mask() const;

    /// Marked edge ids (host ids) in increasing order.
    const std::vector<int>& marked_edges() const { return marked_edge_ids_; }

    /// The marked graph as a standalone multigraph on slots.
    Multigraph marked_graph() const;

    /// Islands of the induced subgraph of the marked graph on the given slots.
    std::vector<VertexSubset> island_masks(VertexSubset slots) const;

    /// f of the induced subgraph on the given slots: the sum over its islands
    /// of the number of components of the surface minus that island alone.
    /// Planar mode uses e - v + 2 per island; the empty subset gives 0.
    int face_count(VertexSubset slots) const;

    /// Faces of the whole marked graph; in planar mode uses the per-island
    /// Euler fast path.
    int marked_face_count() const { return face_count(full_slot_mask()); }
    int genus() const { return surface_mode() ? map_->genus() : 0; }

    /// Copy with marks restricted to the given slots (incident marked edges
    /// of dropped vertices are unmarked too). Host unchanged.
    EmbeddedGraph restricted(VertexSubset slots) const;
    EmbeddedGraph without_vertex(int host_vertex) const;
    EmbeddedGraph without_edge(int host_edge) const;

    bool operator==(const EmbeddedGraph& o) const;

private:
    void build_view();

    Multigraph graph_;
    std::optional<RotationMap> map_;
    std::vector<char> vmark_, emark_;

    // enumeration view
    std::vector<int> slot_vertex_;
    std::vector<int> slot_of_vertex_;
    std::vector<VertexSubset> slot_adj_;
    struct MarkedEdge {
        int slot_u, slot_v, host_id;
    };
    std::vector<MarkedEdge> marked_slot_edges_;
    std::vector<int> marked_edge_ids_;

    friend class FaceScratch;
};

/// Per-worker scratch buffers for surface-mode face counting, so concurrent
/// enumeration does not share mutable state.
class FaceScratch {
public:
    explicit FaceScratch(const EmbeddedGraph& eg);
    int face_count(VertexSubset slots);

private:
    const EmbeddedGraph& eg_;
    std::vector<char> vin_, ein_;
};

/// Surjective assignment of the marked vertices to dense color ids 0..c-1.
/// Unmarked host vertices carry -1. `names`, when nonempty, gives one
/// display name per color id.
struct Coloring {
    std::vector<int> color_of;  // host vertex -> color id (-1 when unmarked)
    int color_count = 0;
    std::vector<std::string> names;

    /// Throws unless the coloring is total on marked vertices and uses every
    /// id in 0..color_count-1.
    void validate(const EmbeddedGraph& eg) const;

    static Coloring injective(const EmbeddedGraph& eg);
    static Coloring constant(const EmbeddedGraph& eg);
};

}  // namespace islands
