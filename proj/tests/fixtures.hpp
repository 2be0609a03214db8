#pragma once

#include <random>
#include <set>
#include <vector>

#include "islands/closed_forms.hpp"
#include "islands/embedded_graph.hpp"
#include "islands/transforms.hpp"

namespace fixtures {

using namespace islands;
using Rng = std::mt19937_64;

inline int pick(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// --- planar random graphs -----------------------------------------------------

/// Random tree by uniform attachment.
inline Multigraph random_tree(Rng& rng, int n) {
    Multigraph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(pick(rng, 0, v - 1), v);
    return g;
}

/// Random connected multigraph: a random tree plus `extra` random edges,
/// optionally allowing self-loops and parallel edges.
inline Multigraph random_connected(Rng& rng, int n, int extra, bool loops_ok = true,
                                   bool parallel_ok = true) {
    Multigraph g = random_tree(rng, n);
    std::set<std::pair<int, int>> present;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        present.insert(std::minmax(u, v));
    }
    int added = 0, attempts = 0;
    while (added < extra && attempts++ < 50 * extra + 50) {
        int u = pick(rng, 0, n - 1);
        int v = pick(rng, 0, n - 1);
        if (u == v && !loops_ok) continue;
        auto key = std::minmax(u, v);
        if (u != v && !parallel_ok && present.count(key)) continue;
        present.insert(key);
        g.add_edge(u, v);
        ++added;
    }
    return g;
}

/// Random connected simple graph (no loops, no parallel edges).
inline Multigraph random_simple_connected(Rng& rng, int n, int extra) {
    return random_connected(rng, n, extra, false, false);
}

// --- canonical surface hosts ---------------------------------------------------

/// One vertex, two loops a, b with rotation (a+, b+, a-, b-): the standard
/// one-face torus map.
inline RotationMap torus_map() {
    Multigraph g(1);
    g.add_edge(0, 0);
    g.add_edge(0, 0);
    return RotationMap(std::move(g), {{0, 2, 1, 3}});
}

/// Torus host holding C_n as a non-separating cycle: the cycle plus one
/// scaffold loop at vertex 0 running along the other handle direction.
/// Marked subgraph: the cycle alone.
inline EmbeddedGraph torus_cycle(int n) {
    Multigraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    int loop = g.add_edge(0, 0);
    std::vector<std::vector<int>> rot(static_cast<size_t>(n));
    rot[0] = {0, 2 * loop, 2 * (n - 1) + 1, 2 * loop + 1};
    for (int v = 1; v < n; ++v) rot[static_cast<size_t>(v)] = {2 * (v - 1) + 1, 2 * v};
    std::vector<char> vm(static_cast<size_t>(n), 1);
    std::vector<char> em(static_cast<size_t>(n) + 1, 1);
    em.back() = 0;
    return EmbeddedGraph::surface(RotationMap(std::move(g), std::move(rot)), std::move(vm),
                                  std::move(em));
}

/// A plane drawing of K_4 as a rotation map (f = 4).
inline RotationMap planar_k4_map() {
    Multigraph g(4);
    g.add_edge(0, 1);  // darts 0,1
    g.add_edge(0, 2);  // 2,3
    g.add_edge(0, 3);  // 4,5
    g.add_edge(1, 2);  // 6,7
    g.add_edge(2, 3);  // 8,9
    g.add_edge(3, 1);  // 10,11
    return RotationMap(std::move(g), {{0, 2, 4}, {6, 1, 11}, {8, 3, 7}, {10, 5, 9}});
}

/// Plane drawing of C_n (any rotations: every vertex has degree 2).
inline RotationMap planar_cycle_map(int n) {
    Multigraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    std::vector<std::vector<int>> rot(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) rot[static_cast<size_t>(v)] = {2 * ((v + n - 1) % n) + 1, 2 * v};
    return RotationMap(std::move(g), std::move(rot));
}

// --- embedding-aware splice helpers ---------------------------------------------

/// Insertion positions that make a new self-loop at v bound a disk in a face
/// corner (both darts adjacent in the rotation).
inline InsertionSpec corner_loop_spec(const EmbeddedGraph& eg, Rng& rng, int v) {
    int len = eg.surface_mode()
                  ? static_cast<int>(eg.map().rotation(v).size())
                  : 0;
    int p = len ? pick(rng, 0, len) : 0;
    return {p, p};
}

/// Insertion positions that make a new edge parallel to the marked non-loop
/// edge e bound a bigon with it.
inline InsertionSpec bigon_spec(const EmbeddedGraph& eg, int e) {
    auto [v1, v2] = eg.host().endpoints(e);
    if (!eg.surface_mode()) return {};
    const auto& rot1 = eg.map().rotation(v1);
    const auto& rot2 = eg.map().rotation(v2);
    int da = 2 * e, db = 2 * e + 1;
    int p1 = 0, p2 = 0;
    for (size_t i = 0; i < rot1.size(); ++i)
        if (rot1[i] == da) p1 = static_cast<int>(i) + 1;
    for (size_t i = 0; i < rot2.size(); ++i)
        if (rot2[i] == db) p2 = static_cast<int>(i);
    return {p1, p2};
}

/// Random marked subgraph grown on a torus scaffold: starts from a marked
/// non-separating cycle and applies pendant edges, face-corner loops, bigon
/// parallels and subdivisions until `target` marked vertices are reached.
inline EmbeddedGraph random_torus_instance(Rng& rng, int target) {
    EmbeddedGraph eg = torus_cycle(pick(rng, 3, std::max(3, target - 1)));
    int guard = 0;
    while (eg.marked_count() < target && guard++ < 100) {
        switch (pick(rng, 0, 3)) {
            case 0: {
                int v = eg.vertex_of_slot(pick(rng, 0, eg.marked_count() - 1));
                int len = static_cast<int>(eg.map().rotation(v).size());
                eg = add_appendix(eg, v, {pick(rng, 0, len), 0}).graph;
                break;
            }
            case 1: {
                const auto& me = eg.marked_edges();
                eg = subdivide(eg, me[static_cast<size_t>(pick(rng, 0, static_cast<int>(me.size()) - 1))]).graph;
                break;
            }
            case 2: {
                int v = eg.vertex_of_slot(pick(rng, 0, eg.marked_count() - 1));
                eg = add_self_loop(eg, v, corner_loop_spec(eg, rng, v));
                break;
            }
            default: {
                std::vector<int> candidates;
                for (int e : eg.marked_edges())
                    if (!eg.host().is_self_loop(e)) candidates.push_back(e);
                if (candidates.empty()) break;
                int e = candidates[static_cast<size_t>(pick(rng, 0, static_cast<int>(candidates.size()) - 1))];
                auto [v1, v2] = eg.host().endpoints(e);
                eg = add_parallel_edge(eg, v1, v2, bigon_spec(eg, e));
                break;
            }
        }
    }
    return eg;
}

/// Random genus-0 rotation map with multi-edges: grown from one vertex by
/// genus-preserving moves.
inline EmbeddedGraph random_planar_map_instance(Rng& rng, int target) {
    Multigraph seed(1);
    EmbeddedGraph eg = EmbeddedGraph::surface(RotationMap(std::move(seed), {{}}));
    int guard = 0;
    while ((eg.marked_count() < target || eg.host().edge_count() == 0) && guard++ < 100) {
        switch (pick(rng, 0, 3)) {
            case 0: {
                int v = eg.vertex_of_slot(pick(rng, 0, eg.marked_count() - 1));
                int len = static_cast<int>(eg.map().rotation(v).size());
                eg = add_appendix(eg, v, {pick(rng, 0, len), 0}).graph;
                break;
            }
            case 1: {
                if (eg.marked_edges().empty()) break;
                const auto& me = eg.marked_edges();
                eg = subdivide(eg, me[static_cast<size_t>(pick(rng, 0, static_cast<int>(me.size()) - 1))]).graph;
                break;
            }
            case 2: {
                int v = eg.vertex_of_slot(pick(rng, 0, eg.marked_count() - 1));
                eg = add_self_loop(eg, v, corner_loop_spec(eg, rng, v));
                break;
            }
            default: {
                std::vector<int> candidates;
                for (int e : eg.marked_edges())
                    if (!eg.host().is_self_loop(e)) candidates.push_back(e);
                if (candidates.empty()) break;
                int e = candidates[static_cast<size_t>(pick(rng, 0, static_cast<int>(candidates.size()) - 1))];
                auto [v1, v2] = eg.host().endpoints(e);
                eg = add_parallel_edge(eg, v1, v2, bigon_spec(eg, e));
                break;
            }
        }
    }
    return eg;
}

/// Random surjective coloring of the marked vertices with `colors` colors
/// (the first `colors` slots pin one vertex per color).
inline Coloring random_coloring(Rng& rng, const EmbeddedGraph& eg, int colors) {
    Coloring col;
    col.color_of.assign(static_cast<size_t>(eg.host().vertex_count()), -1);
    for (int s = 0; s < eg.marked_count(); ++s)
        col.color_of[static_cast<size_t>(eg.vertex_of_slot(s))] =
            (s < colors) ? s : pick(rng, 0, colors - 1);
    col.color_count = colors;
    return col;
}

/// Proper coloring of a tree (adjacent vertices differ), densified so every
/// color id in 0..c-1 is used.
inline Coloring proper_tree_coloring(Rng& rng, const EmbeddedGraph& tree, int palette) {
    const Multigraph& g = tree.host();
    std::vector<int> color(static_cast<size_t>(g.vertex_count()), -1);
    color[0] = pick(rng, 0, palette - 1);
    // vertices were attached in order, so each v > 0 has exactly one earlier neighbor
    for (int v = 1; v < g.vertex_count(); ++v) {
        int parent = -1;
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [a, b] = g.endpoints(e);
            if (a == v && b < v) parent = b;
            if (b == v && a < v) parent = a;
        }
        int c = pick(rng, 0, palette - 2);
        if (c >= color[static_cast<size_t>(parent)]) ++c;
        color[static_cast<size_t>(v)] = c;
    }
    std::vector<int> dense(static_cast<size_t>(palette), -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int& c = color[static_cast<size_t>(v)];
        if (dense[static_cast<size_t>(c)] < 0) dense[static_cast<size_t>(c)] = next++;
        c = dense[static_cast<size_t>(c)];
    }
    Coloring col;
    col.color_of = std::move(color);
    col.color_count = next;
    return col;
}

}  // namespace fixtures
