#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "islands/error.hpp"

namespace islands {

/// Word-packed vertex subset. Vertex indices are dense 0..n-1 with n <= kMaxVertices,
/// so a subset of vertices fits in one machine word.
using VertexSubset = std::uint64_t;

/// Hard encoding limit for subset enumeration.
inline constexpr int kMaxVertices = 63;

inline VertexSubset subset_bit(int v) { return VertexSubset{1} << v; }
inline bool subset_contains(VertexSubset s, int v) { return (s >> v) & 1u; }
inline int subset_size(VertexSubset s) { return __builtin_popcountll(s); }

/// Finite undirected multigraph. Self-loops and parallel edges are allowed;
/// edges stay distinguishable by id even when their endpoint pairs coincide.
/// Vertex indices are dense 0..n-1, edge ids dense 0..e-1 (the id is the
/// position in the edge sequence).
class Multigraph {
public:
    explicit Multigraph(int vertex_count = 0);

    /// Appends an edge and returns its id. u == v declares a self-loop.
    int add_edge(int u, int v);

    /// Appends an isolated vertex and returns its index.
    int add_vertex() { return vertex_count_++; }

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::pair<int, int> endpoints(int edge) const;
    bool is_self_loop(int edge) const;

    /// Edge ids incident to v, self-loops listed once.
    std::vector<int> incident_edges(int v) const;

    int degree(int v) const;  // self-loops count twice
    bool connected() const;

    bool operator==(const Multigraph& other) const = default;

private:
    void check_vertex(int v) const;

    int vertex_count_;
    std::vector<std::pair<int, int>> edges_;
};

/// Induced subgraph together with the maps back to the parent's ids.
struct InducedSubgraph {
    Multigraph graph;
    std::vector<int> vertex_of;  // new vertex index -> parent vertex
    std::vector<int> edge_of;    // new edge id -> parent edge id
};

/// Subgraph induced by s: all edges of g with both endpoints in s,
/// self-loops at members included. Vertices are reindexed densely in
/// increasing parent order; edge_of records the surviving parent ids.
InducedSubgraph induced(const Multigraph& g, VertexSubset s);

/// Connected-component (island) decomposition. Every vertex lands in exactly
/// one island; isolated vertices form singleton islands; every edge is
/// assigned to the island holding its endpoints.
struct IslandDecomposition {
    std::vector<VertexSubset> vertex_sets;
    std::vector<std::vector<int>> edge_sets;

    size_t size() const { return vertex_sets.size(); }
};

IslandDecomposition island_decomposition(const Multigraph& g);

}  // namespace islands
