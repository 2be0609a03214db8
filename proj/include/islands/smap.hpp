#pragma once

#include <optional>
#include <string>
#include <vector>

#include "islands/embedded_graph.hpp"

namespace islands {

/// Parsed form of the `.smap` text format. One directive per line, `#` starts
/// a comment:
///
///   mode planar|surface          (optional, default planar; at most once)
///   vertices N                   (required, before any other directive below)
///   edge <id> <u> <v>            (edge ids must come out dense 0..e-1)
///   rot <v> <dart>...            (dart = <edge-id>a | <edge-id>b, counter-
///                                 clockwise; required for every vertex iff
///                                 surface mode; edges must be declared first)
///   mark vertices <v>...         (default: all vertices marked)
///   mark edges <id>...           (default: every edge with both endpoints
///                                 marked)
///   color <v> <name>             (all marked vertices or none)
struct MapDocument {
    bool surface = false;
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;        // indexed by edge id
    std::vector<std::vector<int>> rotations;        // darts; surface mode only
    std::optional<std::vector<int>> marked_vertices;
    std::optional<std::vector<int>> marked_edges;
    std::vector<std::pair<int, std::string>> colors;  // (vertex, color name)
};

/// Parses and validates; all structural violations report line and column.
MapDocument parse_smap(const std::string& text);

/// Canonical text form; parse_smap(render_smap(d)) rebuilds the same graph.
std::string render_smap(const MapDocument& doc);

struct BuiltDocument {
    EmbeddedGraph graph;
    std::optional<Coloring> coloring;
};

/// Builds the embedded graph (and coloring when color lines are present).
BuiltDocument build_document(const MapDocument& doc);

/// Document for an embedded graph, e.g. to emit transform results.
MapDocument document_from(const EmbeddedGraph& eg, const std::optional<Coloring>& col);

}  // namespace islands
