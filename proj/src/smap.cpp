#include "islands/smap.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace islands {

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == '#') break;
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#')
            ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

int parse_int(const Token& t, int lineno, const char* what) {
    try {
        size_t pos = 0;
        int v = std::stoi(t.text, &pos);
        if (pos != t.text.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError(lineno, t.column, std::string("expected ") + what + ", got '" + t.text + "'");
    }
}

}  // namespace

MapDocument parse_smap(const std::string& text) {
    MapDocument doc;
    bool saw_mode = false, saw_vertices = false, saw_rot = false;
    std::map<int, std::pair<int, int>> edges_by_id;
    std::vector<char> dart_seen;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<Token> tok = tokenize(line);
        if (tok.empty()) continue;
        const std::string& dir = tok[0].text;
        auto need = [&](size_t count, const char* what) {
            if (tok.size() < count + 1)
                throw ParseError(lineno, static_cast<int>(line.size()) + 1,
                                 std::string("missing ") + what);
        };
        auto no_extra = [&](size_t count) {
            if (tok.size() > count + 1)
                throw ParseError(lineno, tok[count + 1].column, "trailing input '" + tok[count + 1].text + "'");
        };
        auto require_vertices_first = [&] {
            if (!saw_vertices)
                throw ParseError(lineno, tok[0].column, "'vertices' must come before '" + dir + "'");
        };

        if (dir == "mode") {
            if (saw_mode) throw ParseError(lineno, tok[0].column, "duplicate 'mode' directive");
            if (saw_vertices)
                throw ParseError(lineno, tok[0].column, "'mode' must come before 'vertices'");
            need(1, "mode name");
            no_extra(1);
            if (tok[1].text == "planar") doc.surface = false;
            else if (tok[1].text == "surface") doc.surface = true;
            else throw ParseError(lineno, tok[1].column, "mode must be 'planar' or 'surface'");
            saw_mode = true;
        } else if (dir == "vertices") {
            if (saw_vertices) throw ParseError(lineno, tok[0].column, "duplicate 'vertices' directive");
            need(1, "vertex count");
            no_extra(1);
            doc.vertex_count = parse_int(tok[1], lineno, "a vertex count");
            if (doc.vertex_count < 0) throw ParseError(lineno, tok[1].column, "vertex count must be nonnegative");
            saw_vertices = true;
        } else if (dir == "edge") {
            require_vertices_first();
            if (saw_rot)
                throw ParseError(lineno, tok[0].column, "declare all edges before rotations");
            need(3, "edge id and endpoints");
            no_extra(3);
            int id = parse_int(tok[1], lineno, "an edge id");
            int u = parse_int(tok[2], lineno, "a vertex");
            int v = parse_int(tok[3], lineno, "a vertex");
            if (id < 0) throw ParseError(lineno, tok[1].column, "edge id must be nonnegative");
            if (u < 0 || u >= doc.vertex_count) throw ParseError(lineno, tok[2].column, "vertex out of range");
            if (v < 0 || v >= doc.vertex_count) throw ParseError(lineno, tok[3].column, "vertex out of range");
            if (edges_by_id.count(id))
                throw ParseError(lineno, tok[1].column, "duplicate edge id " + std::to_string(id));
            edges_by_id[id] = {u, v};
        } else if (dir == "rot") {
            require_vertices_first();
            if (!saw_rot) {
                // edge ids must be dense before any dart can be resolved
                for (int id = 0; id < static_cast<int>(edges_by_id.size()); ++id)
                    if (!edges_by_id.count(id))
                        throw ParseError(lineno, tok[0].column,
                                         "edge ids are not dense: missing id " + std::to_string(id));
                doc.edges.resize(edges_by_id.size());
                for (const auto& [id, uv] : edges_by_id) doc.edges[static_cast<size_t>(id)] = uv;
                doc.rotations.assign(static_cast<size_t>(doc.vertex_count), {});
                dart_seen.assign(2 * edges_by_id.size(), 0);
                saw_rot = true;
            }
            need(1, "a vertex");
            int v = parse_int(tok[1], lineno, "a vertex");
            if (v < 0 || v >= doc.vertex_count) throw ParseError(lineno, tok[1].column, "vertex out of range");
            if (!doc.rotations[static_cast<size_t>(v)].empty())
                throw ParseError(lineno, tok[1].column, "duplicate rotation for vertex " + std::to_string(v));
            std::vector<int> rot;
            for (size_t k = 2; k < tok.size(); ++k) {
                const std::string& s = tok[k].text;
                char side = s.empty() ? '?' : s.back();
                if ((side != 'a' && side != 'b') || s.size() < 2)
                    throw ParseError(lineno, tok[k].column, "dart must look like '<edge-id>a' or '<edge-id>b'");
                int id;
                try {
                    size_t pos = 0;
                    id = std::stoi(s.substr(0, s.size() - 1), &pos);
                    if (pos != s.size() - 1) throw std::invalid_argument("");
                } catch (const std::exception&) {
                    throw ParseError(lineno, tok[k].column, "bad dart '" + s + "'");
                }
                if (id < 0 || id >= static_cast<int>(doc.edges.size()))
                    throw ParseError(lineno, tok[k].column, "dart references undeclared edge " + std::to_string(id));
                int dart = 2 * id + (side == 'b' ? 1 : 0);
                int home = (side == 'b') ? doc.edges[static_cast<size_t>(id)].second
                                         : doc.edges[static_cast<size_t>(id)].first;
                if (home != v)
                    throw ParseError(lineno, tok[k].column,
                                     "dart " + s + " belongs to vertex " + std::to_string(home));
                if (dart_seen[static_cast<size_t>(dart)])
                    throw ParseError(lineno, tok[k].column, "dart " + s + " listed twice");
                dart_seen[static_cast<size_t>(dart)] = 1;
                rot.push_back(dart);
            }
            doc.rotations[static_cast<size_t>(v)] = std::move(rot);
        } else if (dir == "mark") {
            require_vertices_first();
            need(1, "'vertices' or 'edges'");
            const std::string& what = tok[1].text;
            std::vector<int>* target;
            int limit;
            if (what == "vertices") {
                if (!doc.marked_vertices) doc.marked_vertices.emplace();
                target = &*doc.marked_vertices;
                limit = doc.vertex_count;
            } else if (what == "edges") {
                if (!doc.marked_edges) doc.marked_edges.emplace();
                target = &*doc.marked_edges;
                limit = static_cast<int>(edges_by_id.size());
            } else {
                throw ParseError(lineno, tok[1].column, "mark what? ('vertices' or 'edges')");
            }
            for (size_t k = 2; k < tok.size(); ++k) {
                int id = parse_int(tok[k], lineno, "an id");
                if (id < 0 || id >= limit) throw ParseError(lineno, tok[k].column, "id out of range");
                if (what == "edges" && !edges_by_id.count(id))
                    throw ParseError(lineno, tok[k].column, "undeclared edge " + std::to_string(id));
                target->push_back(id);
            }
        } else if (dir == "color") {
            require_vertices_first();
            need(2, "a vertex and a color name");
            no_extra(2);
            int v = parse_int(tok[1], lineno, "a vertex");
            if (v < 0 || v >= doc.vertex_count) throw ParseError(lineno, tok[1].column, "vertex out of range");
            for (const auto& [pv, _] : doc.colors)
                if (pv == v)
                    throw ParseError(lineno, tok[1].column,
                                     "vertex " + std::to_string(v) + " colored twice");
            doc.colors.emplace_back(v, tok[2].text);
        } else {
            throw ParseError(lineno, tok[0].column, "unknown directive '" + dir + "'");
        }
    }

    if (!saw_vertices) throw ParseError(lineno + 1, 1, "missing 'vertices' directive");
    if (!saw_rot) {
        for (int id = 0; id < static_cast<int>(edges_by_id.size()); ++id)
            if (!edges_by_id.count(id))
                throw ParseError(lineno + 1, 1, "edge ids are not dense: missing id " + std::to_string(id));
        doc.edges.resize(edges_by_id.size());
        for (const auto& [id, uv] : edges_by_id) doc.edges[static_cast<size_t>(id)] = uv;
    }
    if (doc.surface) {
        if (!saw_rot) {
            if (!doc.edges.empty())
                throw ParseError(lineno + 1, 1, "surface mode requires 'rot' directives");
            doc.rotations.assign(static_cast<size_t>(doc.vertex_count), {});
        }
        for (size_t d = 0; d < dart_seen.size(); ++d)
            if (!dart_seen[d])
                throw ParseError(lineno + 1, 1,
                                 "dart " + std::to_string(d / 2) + (d % 2 ? "b" : "a") +
                                     " missing from rotations");
    } else if (saw_rot) {
        throw ParseError(lineno + 1, 1, "'rot' directives are only valid in surface mode");
    }
    return doc;
}

std::string render_smap(const MapDocument& doc) {
    std::ostringstream out;
    out << "mode " << (doc.surface ? "surface" : "planar") << "\n";
    out << "vertices " << doc.vertex_count << "\n";
    for (size_t e = 0; e < doc.edges.size(); ++e)
        out << "edge " << e << " " << doc.edges[e].first << " " << doc.edges[e].second << "\n";
    if (doc.surface) {
        for (int v = 0; v < doc.vertex_count; ++v) {
            out << "rot " << v;
            for (int d : doc.rotations[static_cast<size_t>(v)])
                out << " " << (d / 2) << (d % 2 ? 'b' : 'a');
            out << "\n";
        }
    }
    if (doc.marked_vertices) {
        out << "mark vertices";
        for (int v : *doc.marked_vertices) out << " " << v;
        out << "\n";
    }
    if (doc.marked_edges) {
        out << "mark edges";
        for (int e : *doc.marked_edges) out << " " << e;
        out << "\n";
    }
    for (const auto& [v, name] : doc.colors) out << "color " << v << " " << name << "\n";
    return out.str();
}

BuiltDocument build_document(const MapDocument& doc) {
    Multigraph g(doc.vertex_count);
    for (const auto& [u, v] : doc.edges) g.add_edge(u, v);

    std::vector<char> vmark(static_cast<size_t>(doc.vertex_count), doc.marked_vertices ? 0 : 1);
    if (doc.marked_vertices)
        for (int v : *doc.marked_vertices) vmark[static_cast<size_t>(v)] = 1;
    std::vector<char> emark(doc.edges.size(), 0);
    if (doc.marked_edges) {
        for (int e : *doc.marked_edges) emark[static_cast<size_t>(e)] = 1;
    } else {
        for (size_t e = 0; e < doc.edges.size(); ++e)
            emark[e] = vmark[static_cast<size_t>(doc.edges[e].first)] &&
                       vmark[static_cast<size_t>(doc.edges[e].second)];
    }
    for (size_t e = 0; e < doc.edges.size(); ++e)
        if (emark[e] && !(vmark[static_cast<size_t>(doc.edges[e].first)] &&
                          vmark[static_cast<size_t>(doc.edges[e].second)]))
            throw Error("marked edge " + std::to_string(e) + " has an unmarked endpoint");

    BuiltDocument out{doc.surface
                          ? EmbeddedGraph::surface(RotationMap(std::move(g), doc.rotations),
                                                   std::move(vmark), std::move(emark))
                          : EmbeddedGraph::planar(std::move(g), std::move(vmark), std::move(emark)),
                      std::nullopt};

    if (!doc.colors.empty()) {
        Coloring col;
        col.color_of.assign(static_cast<size_t>(doc.vertex_count), -1);
        std::vector<std::string> names;
        for (const auto& [v, name] : doc.colors) {
            auto it = std::find(names.begin(), names.end(), name);
            int id = static_cast<int>(it - names.begin());
            if (it == names.end()) names.push_back(name);
            if (!out.graph.vertex_marked(v))
                throw Error("color given for unmarked vertex " + std::to_string(v));
            col.color_of[static_cast<size_t>(v)] = id;
        }
        col.color_count = static_cast<int>(names.size());
        col.names = std::move(names);
        col.validate(out.graph);
        out.coloring = std::move(col);
    }
    return out;
}

MapDocument document_from(const EmbeddedGraph& eg, const std::optional<Coloring>& col) {
    MapDocument doc;
    doc.surface = eg.surface_mode();
    doc.vertex_count = eg.host().vertex_count();
    for (int e = 0; e < eg.host().edge_count(); ++e) doc.edges.push_back(eg.host().endpoints(e));
    if (doc.surface) doc.rotations = eg.map().rotations();

    bool all_v = std::all_of(eg.vertex_marks().begin(), eg.vertex_marks().end(),
                             [](char c) { return c != 0; });
    if (!all_v) {
        doc.marked_vertices.emplace();
        for (int v = 0; v < doc.vertex_count; ++v)
            if (eg.vertex_marked(v)) doc.marked_vertices->push_back(v);
    }
    // induced default: every edge with both endpoints marked
    bool induced_default = true;
    for (int e = 0; e < eg.host().edge_count(); ++e) {
        auto [u, v] = eg.host().endpoints(e);
        bool induced_mark = eg.vertex_marked(u) && eg.vertex_marked(v);
        if (eg.edge_marked(e) != induced_mark) induced_default = false;
    }
    if (!induced_default) {
        doc.marked_edges.emplace();
        for (int e = 0; e < eg.host().edge_count(); ++e)
            if (eg.edge_marked(e)) doc.marked_edges->push_back(e);
    }
    if (col) {
        for (int v = 0; v < doc.vertex_count; ++v) {
            int c = col->color_of[static_cast<size_t>(v)];
            if (c < 0) continue;
            std::string name = col->names.empty() ? "c" + std::to_string(c)
                                                  : col->names[static_cast<size_t>(c)];
            doc.colors.emplace_back(v, name);
        }
    }
    return doc;
}

}  // namespace islands
