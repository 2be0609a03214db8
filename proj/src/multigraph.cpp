#include "islands/multigraph.hpp"

#include "islands/union_find.hpp"

namespace islands {

Multigraph::Multigraph(int vertex_count) : vertex_count_(vertex_count) {
    if (vertex_count < 0) throw Error("vertex count must be nonnegative");
}

void Multigraph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count_)
        throw Error("invalid vertex index " + std::to_string(v) + " (graph has " +
                    std::to_string(vertex_count_) + " vertices)");
}

int Multigraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    edges_.emplace_back(u, v);
    return static_cast<int>(edges_.size()) - 1;
}

std::pair<int, int> Multigraph::endpoints(int edge) const {
    if (edge < 0 || edge >= edge_count())
        throw Error("invalid edge id " + std::to_string(edge));
    return edges_[static_cast<size_t>(edge)];
}

bool Multigraph::is_self_loop(int edge) const {
    auto [u, v] = endpoints(edge);
    return u == v;
}

std::vector<int> Multigraph::incident_edges(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int e = 0; e < edge_count(); ++e) {
        auto [a, b] = edges_[static_cast<size_t>(e)];
        if (a == v || b == v) out.push_back(e);
    }
    return out;
}

int Multigraph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (const auto& [a, b] : edges_) {
        if (a == v) ++d;
        if (b == v) ++d;
    }
    return d;
}

bool Multigraph::connected() const {
    if (vertex_count_ <= 1) return true;
    UnionFind uf(vertex_count_);
    for (const auto& [a, b] : edges_) uf.unite(a, b);
    return uf.num_classes() == 1;
}

InducedSubgraph induced(const Multigraph& g, VertexSubset s) {
    if (g.vertex_count() > kMaxVertices)
        throw Error("graph exceeds the subset encoding limit of " + std::to_string(kMaxVertices));
    if (g.vertex_count() < kMaxVertices && (s >> g.vertex_count()) != 0)
        throw Error("subset contains an invalid vertex index");

    InducedSubgraph out{Multigraph(subset_size(s)), {}, {}};
    std::vector<int> slot(static_cast<size_t>(g.vertex_count()), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (subset_contains(s, v)) {
            slot[static_cast<size_t>(v)] = static_cast<int>(out.vertex_of.size());
            out.vertex_of.push_back(v);
        }
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        if (subset_contains(s, u) && subset_contains(s, v)) {
            out.graph.add_edge(slot[static_cast<size_t>(u)], slot[static_cast<size_t>(v)]);
            out.edge_of.push_back(e);
        }
    }
    return out;
}

IslandDecomposition island_decomposition(const Multigraph& g) {
    if (g.vertex_count() > kMaxVertices)
        throw Error("graph exceeds the subset encoding limit of " + std::to_string(kMaxVertices));
    UnionFind uf(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        uf.unite(u, v);
    }
    std::vector<int> island_of_root(static_cast<size_t>(g.vertex_count()), -1);
    IslandDecomposition dec;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int r = uf.find(v);
        if (island_of_root[static_cast<size_t>(r)] < 0) {
            island_of_root[static_cast<size_t>(r)] = static_cast<int>(dec.vertex_sets.size());
            dec.vertex_sets.push_back(0);
            dec.edge_sets.emplace_back();
        }
        dec.vertex_sets[static_cast<size_t>(island_of_root[static_cast<size_t>(r)])] |= subset_bit(v);
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        int r = uf.find(g.endpoints(e).first);
        dec.edge_sets[static_cast<size_t>(island_of_root[static_cast<size_t>(r)])].push_back(e);
    }
    return dec;
}

}  // namespace islands
