#include "islands/transforms.hpp"

#include <algorithm>
#include <sstream>

namespace islands {

namespace {

struct HostParts {
    Multigraph graph;
    std::vector<std::vector<int>> rotations;  // empty in planar mode
    std::vector<char> vmark, emark;
    bool surface;
};

HostParts take_apart(const EmbeddedGraph& eg) {
    HostParts p{eg.host(), {}, eg.vertex_marks(), eg.edge_marks(), eg.surface_mode()};
    if (p.surface) p.rotations = eg.map().rotations();
    return p;
}

EmbeddedGraph put_together(HostParts p) {
    if (p.surface)
        return EmbeddedGraph::surface(RotationMap(std::move(p.graph), std::move(p.rotations)),
                                      std::move(p.vmark), std::move(p.emark));
    return EmbeddedGraph::planar(std::move(p.graph), std::move(p.vmark), std::move(p.emark));
}

void insert_dart(std::vector<int>& rotation, int dart, int pos) {
    if (pos < 0 || pos > static_cast<int>(rotation.size()))
        throw Error("invalid rotation position " + std::to_string(pos) + " (rotation has " +
                    std::to_string(rotation.size()) + " darts)");
    rotation.insert(rotation.begin() + pos, dart);
}

void require_marked_vertex(const EmbeddedGraph& eg, int v) {
    if (v < 0 || v >= eg.host().vertex_count() || !eg.vertex_marked(v))
        throw Error("vertex " + std::to_string(v) + " is not a marked vertex");
}

void require_marked_edge(const EmbeddedGraph& eg, int e) {
    if (e < 0 || e >= eg.host().edge_count() || !eg.edge_marked(e))
        throw Error("edge " + std::to_string(e) + " is not a marked edge");
}

}  // namespace

EmbeddedGraph add_self_loop(const EmbeddedGraph& eg, int v, InsertionSpec ins) {
    require_marked_vertex(eg, v);
    HostParts p = take_apart(eg);
    int e = p.graph.add_edge(v, v);
    p.emark.push_back(1);
    if (p.surface) {
        auto& rot = p.rotations[static_cast<size_t>(v)];
        insert_dart(rot, 2 * e, ins.first);
        insert_dart(rot, 2 * e + 1, ins.second);
    }
    return put_together(std::move(p));
}

EmbeddedGraph add_parallel_edge(const EmbeddedGraph& eg, int v1, int v2, InsertionSpec ins) {
    if (v1 == v2) throw Error("endpoints coincide; add a self-loop instead");
    require_marked_vertex(eg, v1);
    require_marked_vertex(eg, v2);
    HostParts p = take_apart(eg);
    int e = p.graph.add_edge(v1, v2);
    p.emark.push_back(1);
    if (p.surface) {
        insert_dart(p.rotations[static_cast<size_t>(v1)], 2 * e, ins.first);
        insert_dart(p.rotations[static_cast<size_t>(v2)], 2 * e + 1, ins.second);
    }
    return put_together(std::move(p));
}

AppendixResult add_appendix(const EmbeddedGraph& eg, int v, InsertionSpec ins) {
    require_marked_vertex(eg, v);
    HostParts p = take_apart(eg);
    int x = p.graph.add_vertex();
    int e = p.graph.add_edge(v, x);
    p.vmark.push_back(1);
    p.emark.push_back(1);
    if (p.surface) {
        insert_dart(p.rotations[static_cast<size_t>(v)], 2 * e, ins.first);
        p.rotations.push_back({2 * e + 1});
    }
    AppendixResult out{put_together(std::move(p)), x, e};
    return out;
}

SubdivideResult subdivide(const EmbeddedGraph& eg, int edge) {
    require_marked_edge(eg, edge);
    auto [u, w] = eg.host().endpoints(edge);
    HostParts p = take_apart(eg);

    const int x = p.graph.vertex_count();
    Multigraph g(x + 1);
    int second_half = -1;
    for (int e = 0; e < p.graph.edge_count(); ++e) {
        auto [a, b] = p.graph.endpoints(e);
        if (e == edge) g.add_edge(a, x);  // first half keeps the id, ends at x
        else g.add_edge(a, b);
    }
    second_half = g.add_edge(x, w);
    p.vmark.push_back(1);
    p.emark.push_back(1);

    if (p.surface) {
        // dart 2*edge stays at u; the old dart 2*edge+1 slot at w now holds the
        // second half's far dart; x gets the two interior darts.
        int old_b = 2 * edge + 1;
        auto& rot_w = p.rotations[static_cast<size_t>(w)];
        *std::find(rot_w.begin(), rot_w.end(), old_b) = 2 * second_half + 1;
        p.rotations.push_back({old_b, 2 * second_half});
    }
    p.graph = std::move(g);
    return SubdivideResult{put_together(std::move(p)), x, edge, second_half};
}

ContractResult contract(const EmbeddedGraph& eg, int edge) {
    require_marked_edge(eg, edge);
    auto [v, w] = eg.host().endpoints(edge);
    if (v == w) throw Error("cannot contract a self-loop");
    HostParts p = take_apart(eg);

    const int nv = p.graph.vertex_count();
    const int ne = p.graph.edge_count();
    std::vector<int> vmap(static_cast<size_t>(nv));
    for (int t = 0; t < nv; ++t) vmap[static_cast<size_t>(t)] = t - (t > v ? 1 : 0);
    vmap[static_cast<size_t>(v)] = vmap[static_cast<size_t>(w)];
    std::vector<int> emap(static_cast<size_t>(ne));
    for (int e = 0; e < ne; ++e) emap[static_cast<size_t>(e)] = e - (e > edge ? 1 : 0);
    emap[static_cast<size_t>(edge)] = -1;

    Multigraph g(nv - 1);
    std::vector<char> vm, em;
    vm.reserve(static_cast<size_t>(nv) - 1);
    for (int t = 0; t < nv; ++t)
        if (t != v) vm.push_back(p.vmark[static_cast<size_t>(t)]);
    for (int e = 0; e < ne; ++e) {
        if (e == edge) continue;
        auto [a, b] = p.graph.endpoints(e);
        g.add_edge(vmap[static_cast<size_t>(a)], vmap[static_cast<size_t>(b)]);
        em.push_back(p.emark[static_cast<size_t>(e)]);
    }

    std::vector<std::vector<int>> rots;
    if (p.surface) {
        int dart_v = (eg.host().endpoints(edge).first == v) ? 2 * edge : 2 * edge + 1;
        int dart_w = RotationMap::twin(dart_v);
        auto spliced_from = [&](const std::vector<int>& rot, int removed) {
            auto it = std::find(rot.begin(), rot.end(), removed);
            std::vector<int> out;
            out.reserve(rot.size() - 1);
            for (auto i = it + 1; i != rot.end(); ++i) out.push_back(*i);
            for (auto i = rot.begin(); i != it; ++i) out.push_back(*i);
            return out;
        };
        std::vector<int> merged = spliced_from(p.rotations[static_cast<size_t>(v)], dart_v);
        std::vector<int> tail = spliced_from(p.rotations[static_cast<size_t>(w)], dart_w);
        merged.insert(merged.end(), tail.begin(), tail.end());

        auto remap_dart = [&](int d) { return 2 * emap[static_cast<size_t>(d >> 1)] + (d & 1); };
        rots.reserve(static_cast<size_t>(nv) - 1);
        for (int t = 0; t < nv; ++t) {
            if (t == v) continue;
            const std::vector<int>& src = (t == w) ? merged : p.rotations[static_cast<size_t>(t)];
            std::vector<int> r;
            r.reserve(src.size());
            for (int d : src) r.push_back(remap_dart(d));
            rots.push_back(std::move(r));
        }
    }

    HostParts np{std::move(g), std::move(rots), std::move(vm), std::move(em), p.surface};
    return ContractResult{put_together(std::move(np)), vmap[static_cast<size_t>(w)], std::move(vmap),
                          std::move(emap)};
}

CombineResult combine(CombineKind kind, const EmbeddedGraph& a, const EmbeddedGraph& b,
                      int attach_a, int attach_b, InsertionSpec ins) {
    if (a.surface_mode() != b.surface_mode())
        throw Error("cannot combine graphs of different modes");
    const bool surface = a.surface_mode();
    const int n1 = a.host().vertex_count();
    const int e1 = a.host().edge_count();
    const bool needs_attach = kind != CombineKind::Disjoint || surface;
    if (needs_attach) {
        if (attach_a < 0 || attach_a >= n1 || attach_b < 0 || attach_b >= b.host().vertex_count())
            throw Error("invalid attach vertex");
        if (kind != CombineKind::Disjoint) {
            require_marked_vertex(a, attach_a);
            require_marked_vertex(b, attach_b);
        }
    }

    CombineResult out;
    Multigraph g(n1 + b.host().vertex_count());
    std::vector<char> vm, em;
    out.vertex_map_a.resize(static_cast<size_t>(n1));
    out.vertex_map_b.resize(static_cast<size_t>(b.host().vertex_count()));
    for (int v = 0; v < n1; ++v) out.vertex_map_a[static_cast<size_t>(v)] = v;
    for (int v = 0; v < b.host().vertex_count(); ++v) out.vertex_map_b[static_cast<size_t>(v)] = n1 + v;
    for (int e = 0; e < e1; ++e) {
        auto [x, y] = a.host().endpoints(e);
        out.edge_map_a.push_back(g.add_edge(x, y));
        em.push_back(a.edge_marks()[static_cast<size_t>(e)]);
    }
    for (int e = 0; e < b.host().edge_count(); ++e) {
        auto [x, y] = b.host().endpoints(e);
        out.edge_map_b.push_back(g.add_edge(n1 + x, n1 + y));
        em.push_back(b.edge_marks()[static_cast<size_t>(e)]);
    }
    vm = a.vertex_marks();
    vm.insert(vm.end(), b.vertex_marks().begin(), b.vertex_marks().end());

    std::vector<std::vector<int>> rots;
    if (surface) {
        rots = a.map().rotations();
        for (const auto& rot : b.map().rotations()) {
            std::vector<int> r;
            r.reserve(rot.size());
            for (int d : rot) r.push_back(2 * ((d >> 1) + e1) + (d & 1));
            rots.push_back(std::move(r));
        }
    }

    // Surface mode always needs the connecting edge to keep the host
    // connected and cellular; it stays unmarked for Disjoint.
    int connector = -1;
    if (surface || kind != CombineKind::Disjoint) {
        connector = g.add_edge(attach_a, n1 + attach_b);
        em.push_back(kind == CombineKind::Disjoint ? 0 : 1);
        if (surface) {
            insert_dart(rots[static_cast<size_t>(attach_a)], 2 * connector, ins.first);
            insert_dart(rots[static_cast<size_t>(n1 + attach_b)], 2 * connector + 1, ins.second);
        }
    }

    HostParts parts{std::move(g), std::move(rots), std::move(vm), std::move(em), surface};
    out.graph = put_together(std::move(parts));
    out.connector_edge = connector;

    if (kind == CombineKind::Wedge) {
        ContractResult c = contract(out.graph, connector);
        out.graph = std::move(c.graph);
        for (auto& v : out.vertex_map_a) v = c.vertex_relabel[static_cast<size_t>(v)];
        for (auto& v : out.vertex_map_b) v = c.vertex_relabel[static_cast<size_t>(v)];
        for (auto& e : out.edge_map_a) e = c.edge_relabel[static_cast<size_t>(e)];
        for (auto& e : out.edge_map_b) e = c.edge_relabel[static_cast<size_t>(e)];
        out.connector_edge = -1;
    }
    return out;
}

Coloring merge_colors(const Coloring& col, int c, int c2) {
    if (c == c2) throw Error("merging a color with itself");
    auto present = [&](int x) {
        return x >= 0 && x < col.color_count &&
               std::any_of(col.color_of.begin(), col.color_of.end(), [&](int y) { return y == x; });
    };
    if (!present(c) || !present(c2)) throw Error("color absent from the coloring");

    Coloring out;
    out.color_of = col.color_of;
    for (auto& x : out.color_of)
        if (x == c) x = c2;
    std::vector<int> dense(static_cast<size_t>(col.color_count), -1);
    int next = 0;
    for (int old = 0; old < col.color_count; ++old) {
        if (old == c) continue;
        dense[static_cast<size_t>(old)] = next++;
    }
    out.color_count = next;
    for (auto& x : out.color_of)
        if (x >= 0) x = dense[static_cast<size_t>(x)];
    if (!col.names.empty()) {
        out.names.resize(static_cast<size_t>(next));
        for (int old = 0; old < col.color_count; ++old)
            if (dense[static_cast<size_t>(old)] >= 0)
                out.names[static_cast<size_t>(dense[static_cast<size_t>(old)])] =
                    col.names[static_cast<size_t>(old)];
    }
    return out;
}

Coloring restrict_coloring(const Coloring& col, const EmbeddedGraph& reduced) {
    Coloring out;
    out.color_of.assign(col.color_of.size(), -1);
    std::vector<int> dense(static_cast<size_t>(col.color_count), -1);
    int next = 0;
    for (int v = 0; v < reduced.host().vertex_count(); ++v) {
        if (!reduced.vertex_marked(v)) continue;
        int c = col.color_of[static_cast<size_t>(v)];
        if (c < 0) throw Error("marked vertex " + std::to_string(v) + " is uncolored");
        if (dense[static_cast<size_t>(c)] < 0) dense[static_cast<size_t>(c)] = next++;
        out.color_of[static_cast<size_t>(v)] = dense[static_cast<size_t>(c)];
    }
    out.color_count = next;
    if (!col.names.empty()) {
        out.names.resize(static_cast<size_t>(next));
        for (int old = 0; old < col.color_count; ++old)
            if (dense[static_cast<size_t>(old)] >= 0)
                out.names[static_cast<size_t>(dense[static_cast<size_t>(old)])] =
                    col.names[static_cast<size_t>(old)];
    }
    return out;
}

Coloring remap_coloring_after_contract(const Coloring& col, const ContractResult& res, int old_v,
                                       int old_w) {
    (void)old_w;
    Coloring moved;
    moved.color_of.assign(static_cast<size_t>(res.graph.host().vertex_count()), -1);
    moved.color_count = col.color_count;
    moved.names = col.names;
    for (int t = 0; t < static_cast<int>(res.vertex_relabel.size()); ++t) {
        if (t == old_v) continue;  // merged vertex keeps the second endpoint's color
        moved.color_of[static_cast<size_t>(res.vertex_relabel[static_cast<size_t>(t)])] =
            col.color_of[static_cast<size_t>(t)];
    }
    // densify in case the removed vertex held the last use of its color
    std::vector<char> used(static_cast<size_t>(moved.color_count), 0);
    for (int c : moved.color_of)
        if (c >= 0) used[static_cast<size_t>(c)] = 1;
    std::vector<int> dense(static_cast<size_t>(moved.color_count), -1);
    int next = 0;
    for (int c = 0; c < moved.color_count; ++c)
        if (used[static_cast<size_t>(c)]) dense[static_cast<size_t>(c)] = next++;
    if (next != moved.color_count) {
        for (auto& c : moved.color_of)
            if (c >= 0) c = dense[static_cast<size_t>(c)];
        if (!moved.names.empty()) {
            std::vector<std::string> names(static_cast<size_t>(next));
            for (int c = 0; c < moved.color_count; ++c)
                if (dense[static_cast<size_t>(c)] >= 0)
                    names[static_cast<size_t>(dense[static_cast<size_t>(c)])] =
                        moved.names[static_cast<size_t>(c)];
            moved.names = std::move(names);
        }
        moved.color_count = next;
    }
    return moved;
}

std::vector<ScriptOp> parse_script(const std::string& text) {
    std::vector<ScriptOp> ops;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        ScriptOp op;
        auto read_int = [&](int& out, const char* what) {
            if (!(ls >> out)) throw ParseError(lineno, 1, std::string("expected ") + what);
        };
        auto read_optional_ins = [&] {
            int p1;
            if (ls >> p1) {
                int p2;
                if (!(ls >> p2)) throw ParseError(lineno, 1, "expected a second rotation position");
                op.ins = {p1, p2};
            }
        };
        if (word == "loop") {
            op.kind = ScriptOp::Kind::Loop;
            read_int(op.a, "a vertex");
            read_optional_ins();
        } else if (word == "par") {
            op.kind = ScriptOp::Kind::Par;
            read_int(op.a, "a vertex");
            read_int(op.b, "a vertex");
            read_optional_ins();
        } else if (word == "subdiv") {
            op.kind = ScriptOp::Kind::Subdiv;
            read_int(op.a, "an edge id");
        } else if (word == "contract") {
            op.kind = ScriptOp::Kind::Contract;
            read_int(op.a, "an edge id");
        } else if (word == "bridge") {
            op.kind = ScriptOp::Kind::Bridge;
            read_int(op.a, "a vertex");
            read_int(op.b, "a vertex");
            read_optional_ins();
        } else if (word == "wedge") {
            op.kind = ScriptOp::Kind::Wedge;
            read_int(op.a, "a vertex");
            read_int(op.b, "a vertex");
            read_optional_ins();
        } else {
            throw ParseError(lineno, 1, "unknown operation '" + word + "'");
        }
        std::string extra;
        if (ls >> extra) throw ParseError(lineno, 1, "trailing input '" + extra + "'");
        ops.push_back(op);
    }
    return ops;
}

namespace {

std::string fresh_color_name(const std::vector<std::string>& names, int vertex) {
    std::string base = "v" + std::to_string(vertex);
    std::string name = base;
    int k = 2;
    while (std::find(names.begin(), names.end(), name) != names.end())
        name = base + "_" + std::to_string(k++);
    return name;
}

void require_different_islands(const EmbeddedGraph& eg, int a, int b) {
    int sa = eg.slot_of(a), sb = eg.slot_of(b);
    for (VertexSubset island : eg.island_masks(eg.full_slot_mask()))
        if (subset_contains(island, sa) && subset_contains(island, sb))
            throw Error("vertices " + std::to_string(a) + " and " + std::to_string(b) +
                        " lie in the same island; use `par`");
}

}  // namespace

TransformState apply_script(TransformState state, const std::vector<ScriptOp>& ops) {
    for (const ScriptOp& op : ops) {
        switch (op.kind) {
            case ScriptOp::Kind::Loop:
                state.graph = add_self_loop(state.graph, op.a, op.ins);
                break;
            case ScriptOp::Kind::Par:
                state.graph = add_parallel_edge(state.graph, op.a, op.b, op.ins);
                break;
            case ScriptOp::Kind::Subdiv: {
                SubdivideResult r = subdivide(state.graph, op.a);
                if (state.coloring) {
                    Coloring& col = *state.coloring;
                    col.color_of.push_back(col.color_count);
                    if (!col.names.empty())
                        col.names.push_back(fresh_color_name(col.names, r.new_vertex));
                    ++col.color_count;
                }
                state.graph = std::move(r.graph);
                break;
            }
            case ScriptOp::Kind::Contract: {
                auto [v, w] = state.graph.host().endpoints(op.a);
                ContractResult r = contract(state.graph, op.a);
                if (state.coloring)
                    state.coloring = remap_coloring_after_contract(*state.coloring, r, v, w);
                state.graph = std::move(r.graph);
                break;
            }
            case ScriptOp::Kind::Bridge:
                require_different_islands(state.graph, op.a, op.b);
                state.graph = add_parallel_edge(state.graph, op.a, op.b, op.ins);
                break;
            case ScriptOp::Kind::Wedge: {
                require_different_islands(state.graph, op.a, op.b);
                EmbeddedGraph bridged = add_parallel_edge(state.graph, op.a, op.b, op.ins);
                int e = bridged.host().edge_count() - 1;
                ContractResult r = contract(bridged, e);
                if (state.coloring) {
                    // the bridge edge is fresh, so the pre-bridge coloring still applies
                    state.coloring = remap_coloring_after_contract(*state.coloring, r, op.a, op.b);
                }
                state.graph = std::move(r.graph);
                break;
            }
        }
    }
    return state;
}

EmbeddedGraph tree_cycle_graph(const Multigraph& tree, const std::vector<AdmissibleOp>& script) {
    if (tree.vertex_count() < 3) throw Error("seed tree needs at least 3 vertices");
    if (!tree.connected() || tree.edge_count() != tree.vertex_count() - 1)
        throw Error("seed graph is not a tree");
    EmbeddedGraph eg = EmbeddedGraph::planar(tree);
    for (const AdmissibleOp& op : script) {
        int cur;
        if (op.similar) {
            bool adjacent = false;
            for (int e = 0; e < eg.host().edge_count() && !adjacent; ++e) {
                auto [x, y] = eg.host().endpoints(e);
                adjacent = (x == op.v && y == op.w) || (x == op.w && y == op.v);
            }
            if (!adjacent)
                throw Error("similar adjacency needs existing adjacency between " +
                            std::to_string(op.v) + " and " + std::to_string(op.w));
            eg = add_parallel_edge(eg, op.v, op.w);
            cur = eg.host().edge_count() - 1;
        } else {
            eg = add_self_loop(eg, op.v);
            cur = eg.host().edge_count() - 1;
        }
        for (int k = 0; k < op.subdivisions; ++k) {
            SubdivideResult r = subdivide(eg, cur);
            cur = r.new_edge;
            eg = std::move(r.graph);
        }
    }
    return eg;
}

}  // namespace islands
