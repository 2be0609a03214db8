#include <doctest.h>

#include "fixtures.hpp"
#include "islands/engine.hpp"
#include "islands/smap.hpp"

using namespace islands;
using namespace fixtures;

namespace {

const char* kPlanarC4 =
    "mode planar\n"
    "vertices 4\n"
    "edge 0 0 1\n"
    "edge 1 1 2\n"
    "edge 2 2 3\n"
    "edge 3 3 0\n";

const char* kTorus =
    "mode surface\n"
    "vertices 1\n"
    "edge 0 0 0\n"
    "edge 1 0 0\n"
    "rot 0 0a 1a 0b 1b\n";

}  // namespace

TEST_CASE("parsing worked documents") {
    SUBCASE("planar C_4") {
        BuiltDocument doc = build_document(parse_smap(kPlanarC4));
        CHECK(beta_total(doc.graph) == IntPoly{4, 8, 4, 2});
        CHECK(!doc.coloring.has_value());
    }
    SUBCASE("one-vertex two-loop torus") {
        BuiltDocument doc = build_document(parse_smap(kTorus));
        CHECK(doc.graph.genus() == 1);
        CHECK(doc.graph.map().face_count() == 1);
    }
    SUBCASE("comments and blank lines are ignored") {
        std::string text = std::string("# header\n\n") + kPlanarC4 + "# trailing\n";
        CHECK_NOTHROW(build_document(parse_smap(text)));
    }
    SUBCASE("marks and colors") {
        std::string text =
            "mode planar\nvertices 3\nedge 0 0 1\nedge 1 1 2\n"
            "mark vertices 0 1\ncolor 0 red\ncolor 1 blue\n";
        BuiltDocument doc = build_document(parse_smap(text));
        CHECK(doc.graph.marked_count() == 2);
        CHECK(doc.graph.marked_edges() == std::vector<int>{0});  // induced default
        REQUIRE(doc.coloring.has_value());
        CHECK(doc.coloring->color_count == 2);
        CHECK(doc.coloring->names == std::vector<std::string>{"red", "blue"});
    }
}

TEST_CASE("parse errors carry locations") {
    auto location = [](const std::string& text) {
        try {
            parse_smap(text);
        } catch (const ParseError& e) {
            return std::pair<int, int>{e.line(), e.column()};
        }
        return std::pair<int, int>{-1, -1};
    };

    SUBCASE("unknown directive") {
        auto [line, col] = location("vertices 2\nfrobnicate 1\n");
        CHECK(line == 2);
        CHECK(col == 1);
    }
    SUBCASE("dart listed twice") {
        std::string text = "mode surface\nvertices 2\nedge 0 0 1\nrot 0 0a 0a\nrot 1 0b\n";
        CHECK_THROWS_WITH_AS(parse_smap(text), doctest::Contains("listed twice"), ParseError);
        auto [line, col] = location(text);
        CHECK(line == 4);
        CHECK(col == 10);
    }
    SUBCASE("dart at the wrong vertex") {
        std::string text = "mode surface\nvertices 2\nedge 0 0 1\nrot 0 0b\nrot 1 0a\n";
        CHECK_THROWS_WITH_AS(parse_smap(text), doctest::Contains("belongs to vertex"), ParseError);
    }
    SUBCASE("missing dart") {
        std::string text = "mode surface\nvertices 2\nedge 0 0 1\nrot 0 0a\nrot 1\n";
        CHECK_THROWS_WITH_AS(parse_smap(text), doctest::Contains("missing from rotations"),
                             ParseError);
    }
    SUBCASE("sparse edge ids") {
        CHECK_THROWS_WITH_AS(parse_smap("vertices 3\nedge 0 0 1\nedge 2 1 2\n"),
                             doctest::Contains("dense"), ParseError);
    }
    SUBCASE("rot in planar mode") {
        CHECK_THROWS_WITH_AS(parse_smap("vertices 2\nedge 0 0 1\nrot 0 0a\nrot 1 0b\n"),
                             doctest::Contains("surface mode"), ParseError);
    }
    SUBCASE("marked edge with unmarked endpoint") {
        std::string text = "vertices 3\nedge 0 0 1\nmark vertices 0\nmark edges 0\n";
        CHECK_THROWS_WITH_AS(build_document(parse_smap(text)), doctest::Contains("unmarked"),
                             Error);
    }
    SUBCASE("partial coloring") {
        std::string text = "vertices 2\nedge 0 0 1\ncolor 0 red\n";
        CHECK_THROWS_AS(build_document(parse_smap(text)), Error);
    }
}

TEST_CASE("render and reparse rebuilds the same graph") {
    Rng rng(8086);
    SUBCASE("random planar documents") {
        for (int it = 0; it < 20; ++it) {
            Multigraph g = random_connected(rng, pick(rng, 1, 7), pick(rng, 0, 5));
            EmbeddedGraph eg = EmbeddedGraph::planar(g);
            BuiltDocument round = build_document(parse_smap(render_smap(document_from(eg, {}))));
            CHECK(round.graph == eg);
        }
    }
    SUBCASE("random surface documents") {
        for (int it = 0; it < 20; ++it) {
            EmbeddedGraph eg = random_torus_instance(rng, pick(rng, 3, 6));
            BuiltDocument round = build_document(parse_smap(render_smap(document_from(eg, {}))));
            CHECK(round.graph == eg);
        }
    }
    SUBCASE("coloring survives the round trip") {
        EmbeddedGraph eg = EmbeddedGraph::planar(path_graph(3));
        Coloring col;
        col.color_of = {0, 1, 0};
        col.color_count = 2;
        col.names = {"x", "y"};
        BuiltDocument round = build_document(parse_smap(render_smap(document_from(eg, col))));
        REQUIRE(round.coloring.has_value());
        CHECK(round.coloring->color_of == col.color_of);
        CHECK(round.coloring->names == col.names);
        CHECK(beta_colored(round.graph, *round.coloring) == beta_colored(eg, col));
    }
    SUBCASE("partial marks survive the round trip") {
        EmbeddedGraph eg = torus_cycle(4);
        BuiltDocument round = build_document(parse_smap(render_smap(document_from(eg, {}))));
        CHECK(round.graph == eg);
        CHECK(round.graph.marked_edges() == eg.marked_edges());
    }
}
