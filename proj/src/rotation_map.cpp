#include "islands/rotation_map.hpp"

#include <algorithm>

#include "islands/union_find.hpp"

namespace islands {

RotationMap::RotationMap(Multigraph graph, std::vector<std::vector<int>> rotations)
    : graph_(std::move(graph)), rotations_(std::move(rotations)) {
    // canonical form: each cyclic order starts at its smallest dart, so equal
    // maps compare equal and rendered documents are deterministic
    for (auto& rot : rotations_) {
        if (rot.empty()) continue;
        auto min_it = std::min_element(rot.begin(), rot.end());
        std::rotate(rot.begin(), min_it, rot.end());
    }
    validate();
    trace_faces();
}

int RotationMap::dart_vertex(int dart) const {
    auto [u, v] = graph_.endpoints(edge_of_dart(dart));
    return (dart & 1) ? v : u;
}

void RotationMap::validate() {
    const int nv = graph_.vertex_count();
    const int nd = dart_count();
    if (nv == 0) throw Error("rotation map needs at least one vertex");
    if (static_cast<int>(rotations_.size()) != nv)
        throw Error("rotation list count does not match vertex count");
    if (!graph_.connected()) throw Error("host graph must be connected");

    std::vector<char> seen(static_cast<size_t>(nd), 0);
    dart_pos_.assign(static_cast<size_t>(nd), -1);
    for (int v = 0; v < nv; ++v) {
        const auto& rot = rotations_[static_cast<size_t>(v)];
        for (size_t i = 0; i < rot.size(); ++i) {
            int d = rot[i];
            if (d < 0 || d >= nd) throw Error("unknown dart " + std::to_string(d));
            if (seen[static_cast<size_t>(d)])
                throw Error("dart " + std::to_string(d) + " placed more than once");
            if (dart_vertex(d) != v)
                throw Error("dart " + std::to_string(d) + " listed at vertex " + std::to_string(v) +
                            " but belongs to vertex " + std::to_string(dart_vertex(d)));
            seen[static_cast<size_t>(d)] = 1;
            dart_pos_[static_cast<size_t>(d)] = static_cast<int>(i);
        }
    }
    for (int d = 0; d < nd; ++d)
        if (!seen[static_cast<size_t>(d)]) throw Error("dart " + std::to_string(d) + " missing from rotations");
}

void RotationMap::trace_faces() {
    const int nd = dart_count();
    auto successor = [&](int d) {
        int t = twin(d);
        const auto& rot = rotations_[static_cast<size_t>(dart_vertex(t))];
        size_t i = static_cast<size_t>(dart_pos_[static_cast<size_t>(t)]);
        return rot[(i + 1) % rot.size()];
    };

    faces_.face_of_dart.assign(static_cast<size_t>(nd), -1);
    faces_.face_count = 0;
    for (int d = 0; d < nd; ++d) {
        if (faces_.face_of_dart[static_cast<size_t>(d)] >= 0) continue;
        int id = faces_.face_count++;
        for (int cur = d; faces_.face_of_dart[static_cast<size_t>(cur)] < 0; cur = successor(cur))
            faces_.face_of_dart[static_cast<size_t>(cur)] = id;
    }
    // A one-vertex edgeless host is the sphere with a single face and no darts.
    if (nd == 0) faces_.face_count = 1;

    faces_.faces_at_vertex.assign(static_cast<size_t>(graph_.vertex_count()), {});
    for (int d = 0; d < nd; ++d) {
        faces_.faces_at_vertex[static_cast<size_t>(dart_vertex(d))].push_back(
            faces_.face_of_dart[static_cast<size_t>(d)]);
    }
    for (auto& fs : faces_.faces_at_vertex) {
        std::sort(fs.begin(), fs.end());
        fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
        if (fs.empty()) fs.push_back(0);  // isolated vertex of the one-vertex host
    }

    int euler = graph_.vertex_count() - graph_.edge_count() + faces_.face_count;
    if ((2 - euler) % 2 != 0 || euler > 2)
        throw Error("rotation system does not define an oriented surface");
    genus_ = (2 - euler) / 2;
}

int RotationMap::complement_components(const std::vector<char>& vertex_in_island,
                                       const std::vector<char>& edge_in_island) const {
    UnionFind uf(faces_.face_count);
    for (int e = 0; e < graph_.edge_count(); ++e) {
        if (edge_in_island[static_cast<size_t>(e)]) continue;
        uf.unite(faces_.face_of_dart[static_cast<size_t>(2 * e)],
                 faces_.face_of_dart[static_cast<size_t>(2 * e + 1)]);
    }
    for (int v = 0; v < graph_.vertex_count(); ++v) {
        if (vertex_in_island[static_cast<size_t>(v)]) continue;
        const auto& fs = faces_.faces_at_vertex[static_cast<size_t>(v)];
        for (size_t i = 1; i < fs.size(); ++i) uf.unite(fs[0], fs[i]);
    }
    return uf.num_classes();
}

int RotationMap::complement_components(VertexSubset island_vertices,
                                       const std::vector<int>& island_edges) const {
    std::vector<char> vin(static_cast<size_t>(graph_.vertex_count()), 0);
    std::vector<char> ein(static_cast<size_t>(graph_.edge_count()), 0);
    for (int v = 0; v < graph_.vertex_count(); ++v)
        if (subset_contains(island_vertices, v)) vin[static_cast<size_t>(v)] = 1;
    UnionFind conn(graph_.vertex_count());
    for (int e : island_edges) {
        auto [u, v] = graph_.endpoints(e);
        if (!vin[static_cast<size_t>(u)] || !vin[static_cast<size_t>(v)])
            throw Error("island edge " + std::to_string(e) + " leaves the island vertex set");
        ein[static_cast<size_t>(e)] = 1;
        conn.unite(u, v);
    }
    // connectivity of the island
    int root = -1;
    for (int v = 0; v < graph_.vertex_count(); ++v) {
        if (!vin[static_cast<size_t>(v)]) continue;
        if (root < 0) root = conn.find(v);
        else if (conn.find(v) != root) throw Error("island is not connected");
    }
    if (root < 0) throw Error("island is empty");
    return complement_components(vin, ein);
}

}  // namespace islands
