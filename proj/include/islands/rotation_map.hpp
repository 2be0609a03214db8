#pragma once

#include <vector>

#include "islands/multigraph.hpp"

namespace islands {

/// Face orbits of a rotation map. Faces partition the darts under the
/// traversal successor; face ids are dense 0..f-1 in order of discovery
/// from the lowest dart, so they are deterministic for a given map.
struct FaceStructure {
    int face_count = 0;
    std::vector<int> face_of_dart;               // dart -> face id
    std::vector<std::vector<int>> faces_at_vertex;  // vertex -> sorted distinct incident face ids
};

/// Oriented combinatorial map: a connected host multigraph with a cyclic
/// counterclockwise dart order at every vertex. Each edge e contributes the
/// darts 2e (at endpoints(e).first) and 2e+1 (at endpoints(e).second); a
/// self-loop contributes both darts to the same vertex at two distinct
/// rotation positions. The twin involution is dart ^ 1.
///
/// Faces are traced on construction with the convention
///   next(d) = rotation successor of twin(d) at twin(d)'s vertex,
/// and the genus comes from v - e + f = 2 - 2g. The map is cellular by
/// construction, which is what makes complement counting by face merging
/// exact.
class RotationMap {
public:
    RotationMap(Multigraph graph, std::vector<std::vector<int>> rotations);

    const Multigraph& graph() const { return graph_; }
    const std::vector<std::vector<int>>& rotations() const { return rotations_; }
    const std::vector<int>& rotation(int v) const { return rotations_[static_cast<size_t>(v)]; }

    static int twin(int dart) { return dart ^ 1; }
    static int edge_of_dart(int dart) { return dart >> 1; }
    int dart_vertex(int dart) const;
    int dart_count() const { return 2 * graph_.edge_count(); }

    const FaceStructure& faces() const { return faces_; }
    int face_count() const { return faces_.face_count; }
    int genus() const { return genus_; }

    /// Number of connected components of the surface minus one island alone.
    /// The island is a connected subgraph of the host, given by membership
    /// flags over host vertices and host edges. Union-find over host faces:
    /// every edge outside the island merges the faces on its two sides, and
    /// every vertex outside the island merges all faces incident to it.
    int complement_components(const std::vector<char>& vertex_in_island,
                              const std::vector<char>& edge_in_island) const;

    /// Convenience wrapper taking a vertex subset and explicit edge ids.
    /// Checks that the island is connected.
    int complement_components(VertexSubset island_vertices, const std::vector<int>& island_edges) const;

    bool operator==(const RotationMap& o) const {
        return graph_ == o.graph_ && rotations_ == o.rotations_;
    }

private:
    void validate();
    void trace_faces();

    Multigraph graph_;
    std::vector<std::vector<int>> rotations_;
    std::vector<int> dart_pos_;  // dart -> index within its vertex rotation
    FaceStructure faces_;
    int genus_ = 0;
};

}  // namespace islands
