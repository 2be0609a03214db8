#include "islands/analysis.hpp"

#include <algorithm>

namespace islands {

namespace {

IntPoly opx(int k) { return IntPoly::one_plus_x_pow(k); }
const IntPoly kX = IntPoly::monomial(1, 1);

Coloring shifted_coloring(const Coloring& ca, const Coloring& cb, const CombineResult& res,
                          const EmbeddedGraph& a, const EmbeddedGraph& b) {
    Coloring out;
    out.color_of.assign(static_cast<size_t>(res.graph.host().vertex_count()), -1);
    out.color_count = ca.color_count + cb.color_count;
    for (int v = 0; v < a.host().vertex_count(); ++v) {
        int c = ca.color_of[static_cast<size_t>(v)];
        if (c >= 0) out.color_of[static_cast<size_t>(res.vertex_map_a[static_cast<size_t>(v)])] = c;
    }
    for (int v = 0; v < b.host().vertex_count(); ++v) {
        int c = cb.color_of[static_cast<size_t>(v)];
        if (c >= 0)
            out.color_of[static_cast<size_t>(res.vertex_map_b[static_cast<size_t>(v)])] =
                c + ca.color_count;
    }
    return out;
}

}  // namespace

IntPoly residual_disjoint(const std::vector<EmbeddedGraph>& parts, InsertionSpec ins) {
    if (parts.size() < 2) throw Error("disjoint identity needs at least two parts");
    EmbeddedGraph combined = parts[0];
    for (size_t i = 1; i < parts.size(); ++i)
        combined = combine(CombineKind::Disjoint, combined, parts[i], 0, 0, ins).graph;
    int n = combined.marked_count();
    IntPoly rhs;
    for (const EmbeddedGraph& part : parts)
        rhs = rhs + opx(n - part.marked_count()) * beta_total(part);
    return beta_total(combined) - rhs;
}

IntPoly residual_appendix(const EmbeddedGraph& eg, int v, InsertionSpec ins) {
    int n = eg.marked_count();
    if (n < 1) throw Error("appendix identity needs a nonempty graph");
    AppendixResult app = add_appendix(eg, v, ins);
    return beta_total(app.graph) - (opx(1) * beta_total(eg) + opx(n - 1));
}

IntPoly residual_bridge(const EmbeddedGraph& a, const EmbeddedGraph& b, int attach_a, int attach_b,
                        InsertionSpec ins) {
    int n1 = a.marked_count(), n2 = b.marked_count();
    if (n1 < 1 || n2 < 1) throw Error("bridge identity needs nonempty operands");
    EmbeddedGraph bridged = combine(CombineKind::Bridge, a, b, attach_a, attach_b, ins).graph;
    EmbeddedGraph disjoint = combine(CombineKind::Disjoint, a, b, attach_a, attach_b, ins).graph;
    return beta_total(bridged) - (beta_total(disjoint) - kX * opx(n1 + n2 - 2));
}

IntPoly residual_wedge(const EmbeddedGraph& a, const EmbeddedGraph& b, int attach_a, int attach_b,
                       InsertionSpec ins) {
    int n1 = a.marked_count(), n2 = b.marked_count();
    if (n1 < 1 || n2 < 1) throw Error("wedge identity needs nonempty operands");
    EmbeddedGraph wedged = combine(CombineKind::Wedge, a, b, attach_a, attach_b, ins).graph;
    IntPoly rhs = opx(n1 - 1) * beta_total(b) + opx(n2 - 1) * beta_total(a) - opx(n1 + n2 - 2);
    return beta_total(wedged) - rhs;
}

IntPoly residual_contract(const EmbeddedGraph& eg, int edge) {
    auto [v, w] = eg.host().endpoints(edge);
    ContractResult con = contract(eg, edge);  // validates: marked, not a loop
    IntPoly rhs = kX * beta_total(con.graph) + beta_total(eg.without_vertex(v)) +
                  beta_total(eg.without_vertex(w)) -
                  opx(1) * beta_total(eg.without_vertex(v).without_vertex(w));
    return beta_total(eg) - rhs;
}

IntPoly residual_split(const EmbeddedGraph& eg, int edge) {
    int n = eg.marked_count();
    SubdivideResult sub = subdivide(eg, edge);
    int constant_pow = eg.host().is_self_loop(edge) ? n - 1 : n - 2;
    IntPoly rhs = kX * beta_total(eg) + beta_total(eg.without_edge(edge)) + opx(constant_pow);
    return beta_total(sub.graph) - rhs;
}

IntPoly residual_color_merge(const EmbeddedGraph& eg, const Coloring& col, int c, int c2) {
    col.validate(eg);
    Coloring merged = merge_colors(col, c, c2);

    auto drop = [&](std::initializer_list<int> colors) {
        VertexSubset keep = eg.full_slot_mask();
        for (int s = 0; s < eg.marked_count(); ++s) {
            int cc = col.color_of[static_cast<size_t>(eg.vertex_of_slot(s))];
            if (std::find(colors.begin(), colors.end(), cc) != colors.end())
                keep &= ~subset_bit(s);
        }
        EmbeddedGraph reduced = eg.restricted(keep);
        Coloring rc = restrict_coloring(col, reduced);
        return reduced.marked_count() == 0 ? IntPoly() : beta_colored(reduced, rc);
    };

    IntPoly rhs = kX * beta_colored(eg, merged) + drop({c}) + drop({c2}) - opx(1) * drop({c, c2});
    return beta_colored(eg, col) - rhs;
}

IntPoly residual_colored_disjoint(const EmbeddedGraph& a, const Coloring& ca,
                                  const EmbeddedGraph& b, const Coloring& cb, InsertionSpec ins) {
    ca.validate(a);
    cb.validate(b);
    CombineResult res = combine(CombineKind::Disjoint, a, b, 0, 0, ins);
    Coloring combined = shifted_coloring(ca, cb, res, a, b);
    IntPoly rhs = opx(cb.color_count) * beta_colored(a, ca) + opx(ca.color_count) * beta_colored(b, cb);
    return beta_colored(res.graph, combined) - rhs;
}

IntPoly residual_colored_appendix(const EmbeddedGraph& eg, const Coloring& col, int v,
                                  InsertionSpec ins) {
    col.validate(eg);
    if (col.color_count < 1) throw Error("colored appendix needs a colored graph");
    AppendixResult app = add_appendix(eg, v, ins);
    Coloring extended = col;
    extended.color_of.push_back(col.color_count);  // pendant vertex gets a fresh color
    extended.color_count = col.color_count + 1;
    if (!extended.names.empty()) extended.names.push_back("pendant");
    IntPoly rhs = opx(1) * beta_colored(eg, col) + opx(col.color_count - 1);
    return beta_colored(app.graph, extended) - rhs;
}

IntPoly residual_colored_bridge(const EmbeddedGraph& a, const Coloring& ca, const EmbeddedGraph& b,
                                const Coloring& cb, int attach_a, int attach_b, InsertionSpec ins) {
    ca.validate(a);
    cb.validate(b);
    CombineResult bridged = combine(CombineKind::Bridge, a, b, attach_a, attach_b, ins);
    CombineResult disjoint = combine(CombineKind::Disjoint, a, b, attach_a, attach_b, ins);
    Coloring col_b = shifted_coloring(ca, cb, bridged, a, b);
    Coloring col_d = shifted_coloring(ca, cb, disjoint, a, b);
    IntPoly rhs = beta_colored(disjoint.graph, col_d) -
                  kX * opx(ca.color_count + cb.color_count - 2);
    return beta_colored(bridged.graph, col_b) - rhs;
}

std::pair<EmbeddedGraph, EmbeddedGraph> junction_graphs(const EmbeddedGraph& eg, int v1, int v2,
                                                        int v3, int v4) {
    if (eg.surface_mode()) throw Error("junction construction is planar-mode only");
    int vs[4] = {v1, v2, v3, v4};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (vs[i] == vs[j]) throw Error("junction endpoints must be distinct");

    auto build = [&](int a1, int a2, int b1, int b2) {
        Multigraph g = eg.host();
        std::vector<char> vm = eg.vertex_marks(), em = eg.edge_marks();
        int m = g.add_vertex();
        int w = g.add_vertex();
        vm.push_back(1);
        vm.push_back(1);
        for (int k = 0; k < 5; ++k) em.push_back(1);
        g.add_edge(a1, m);
        g.add_edge(a2, m);
        g.add_edge(m, w);
        g.add_edge(w, b1);
        g.add_edge(w, b2);
        return EmbeddedGraph::planar(std::move(g), std::move(vm), std::move(em));
    };
    return {build(v1, v2, v3, v4), build(v1, v3, v2, v4)};
}

IntPoly residual_pants(const EmbeddedGraph& eg, int v1, int v2, int v3, int v4) {
    auto [first, second] = junction_graphs(eg, v1, v2, v3, v4);
    int m = first.host().vertex_count() - 2;
    int w = first.host().vertex_count() - 1;
    IntPoly lhs = beta_total(first) - beta_total(second);
    IntPoly rhs = (beta_total(first.without_vertex(m)) + beta_total(first.without_vertex(w))) -
                  (beta_total(second.without_vertex(m)) + beta_total(second.without_vertex(w)));
    return lhs - rhs;
}

IntPoly xi_poly(const EmbeddedGraph& eg, int v1, int v2, int edge) {
    auto [a, b] = eg.host().endpoints(edge);
    if (!((a == v1 && b == v2) || (a == v2 && b == v1)))
        throw Error("edge " + std::to_string(edge) + " does not join the given vertices");
    if (!eg.edge_marked(edge)) throw Error("edge " + std::to_string(edge) + " is not marked");
    EmbeddedGraph without = eg.without_edge(edge);
    int s1 = eg.slot_of(v1), s2 = eg.slot_of(v2);
    VertexSubset need = subset_bit(s1) | subset_bit(s2);

    const int n = eg.marked_count();
    std::vector<mpz_class> coeffs(static_cast<size_t>(n));
    FaceScratch with_scratch(eg), without_scratch(without);
    const VertexSubset end = VertexSubset{1} << n;
    for (VertexSubset s = 1; s < end; ++s) {
        if ((s & need) != need) continue;
        if (with_scratch.face_count(s) == without_scratch.face_count(s) + 1)
            coeffs[static_cast<size_t>(subset_size(s)) - 1] += 1;
    }
    return IntPoly(std::move(coeffs));
}

std::vector<unsigned long long> s_counts(const Multigraph& g, int i, int j) {
    if (i == j) throw Error("s-counts need distinct vertices");
    const int n = g.vertex_count();
    if (i < 0 || i >= n || j < 0 || j >= n) throw Error("s-counts vertex out of range");
    if (n > kMaxVertices) throw Error("graph too large for subset enumeration");
    EmbeddedGraph eg = EmbeddedGraph::planar(g);
    std::vector<unsigned long long> out(static_cast<size_t>(n) + 1, 0);
    VertexSubset need = subset_bit(i) | subset_bit(j);
    const VertexSubset end = VertexSubset{1} << n;
    for (VertexSubset s = need; s < end; ++s) {
        if ((s & need) != need) continue;
        for (VertexSubset island : eg.island_masks(s)) {
            if ((island & need) == need) {
                ++out[static_cast<size_t>(subset_size(s))];
                break;
            }
        }
    }
    return out;
}

IntPoly pants_diff(const Multigraph& g, int v1, int v2, int v3, int v4) {
    int vs[4] = {v1, v2, v3, v4};
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (vs[a] == vs[b]) throw Error("endpoints must be distinct");
    auto s13 = s_counts(g, v1, v3);
    auto s24 = s_counts(g, v2, v4);
    auto s12 = s_counts(g, v1, v2);
    auto s34 = s_counts(g, v3, v4);
    std::vector<mpz_class> coeffs(s13.size());
    for (size_t k = 2; k < s13.size(); ++k) {
        mpz_class sum = mpz_class(static_cast<unsigned long>(s13[k])) + mpz_class(static_cast<unsigned long>(s24[k])) -
                        mpz_class(static_cast<unsigned long>(s12[k])) - mpz_class(static_cast<unsigned long>(s34[k]));
        coeffs[k] = 2 * sum;
    }
    return IntPoly(std::move(coeffs));
}

DetectResult detect(const IntPoly& p, int n) {
    DetectResult res;
    res.basis = shifted_basis_decompose(p, n);

    auto two_term_only = [&] {
        for (int k = 0; k + 2 < n; ++k)
            if (res.basis[static_cast<size_t>(k)] != 0) return false;
        return true;
    };

    if (n >= 2 && two_term_only() && res.basis[static_cast<size_t>(n - 1)] == 1 &&
        res.basis[static_cast<size_t>(n - 2)] == n - 1) {
        res.kind = DetectKind::Tree;
        res.a = 1;
        res.b = n - 1;
        return res;
    }
    if (n >= 3 && two_term_only()) {
        mpz_class a = res.basis[static_cast<size_t>(n - 1)];
        mpz_class b = res.basis[static_cast<size_t>(n - 2)];
        mpz_class loops = a + b - n;
        mpz_class parallels = n - b - 1;
        if (a >= 1 && loops >= 0 && parallels >= 0) {
            res.kind = DetectKind::DecoratedTree;
            res.a = a;
            res.b = b;
            res.loops = loops;
            res.parallels = parallels;
            return res;
        }
    }
    if (n >= 3) {
        for (int c = 1; c <= 2; ++c) {
            IntPoly cycle_shape =
                IntPoly::one_plus_x_pow(n - 2).scaled(n) + IntPoly::monomial(c, n - 1);
            if (p == cycle_shape) {
                res.kind = DetectKind::Cycle;
                res.cycle_face_term = c;
                return res;
            }
        }
    }
    res.kind = DetectKind::None;
    return res;
}

EulerEmergence euler_emergence(const EmbeddedGraph& eg, bool allow_multigraph) {
    const int n = eg.marked_count();
    if (n < 3) throw Error("alternating subgraph sum needs n >= 3");
    if (!allow_multigraph) {
        Multigraph mg = eg.marked_graph();
        std::vector<std::vector<char>> seen(static_cast<size_t>(n), std::vector<char>(static_cast<size_t>(n), 0));
        for (int e = 0; e < mg.edge_count(); ++e) {
            auto [u, v] = mg.endpoints(e);
            if (u == v) throw Error("marked graph has a self-loop; pass allow_multigraph to override");
            if (seen[static_cast<size_t>(u)][static_cast<size_t>(v)])
                throw Error("marked graph has parallel edges; pass allow_multigraph to override");
            seen[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
            seen[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1;
        }
    }

    EulerEmergence out;
    out.lhs = beta_total(eg).eval(-1);
    if (n % 2 != 0) out.lhs = -out.lhs;
    const VertexSubset end = VertexSubset{1} << n;
    for (VertexSubset s = 1; s < end; ++s) {
        int j = subset_size(s);
        if (j < 3 || j > n - 1) continue;
        mpz_class val = beta_total(eg.restricted(s)).eval(-1);
        out.lhs += (j % 2 == 0) ? val : -val;
    }
    int chi = 2 - 2 * eg.genus();
    out.rhs = chi - 2 * eg.marked_face_count();
    return out;
}

IntPoly beta_recursion_residual(const EmbeddedGraph& eg) {
    const int n = eg.marked_count();
    if (n < 1) return IntPoly();
    IntPoly rhs = IntPoly::monomial(eg.marked_face_count(), n - 1);
    const VertexSubset end = VertexSubset{1} << n;
    for (VertexSubset s = 1; s < end; ++s) {
        int j = subset_size(s);
        if (j > n - 1) continue;
        IntPoly term = beta_total(eg.restricted(s));
        rhs = ((n - 1 - j) % 2 == 0) ? rhs + term : rhs - term;
    }
    return beta_total(eg) - rhs;
}

mpq_class tee_information(const mpz_class& beta_at_minus1, const mpq_class& omega) {
    return -omega * mpq_class(beta_at_minus1);
}

IntPoly check_identity(const IdentityInstance& inst) {
    switch (inst.kind) {
        case IdentityKind::Disjoint:
            return residual_disjoint(inst.graphs, inst.ins);
        case IdentityKind::Appendix:
            return residual_appendix(inst.graphs.at(0), inst.v1, inst.ins);
        case IdentityKind::Bridge:
            return residual_bridge(inst.graphs.at(0), inst.graphs.at(1), inst.v1, inst.v2, inst.ins);
        case IdentityKind::Wedge:
            return residual_wedge(inst.graphs.at(0), inst.graphs.at(1), inst.v1, inst.v2, inst.ins);
        case IdentityKind::Contract:
            return residual_contract(inst.graphs.at(0), inst.edge);
        case IdentityKind::Split:
            return residual_split(inst.graphs.at(0), inst.edge);
        case IdentityKind::ColorMerge:
            return residual_color_merge(inst.graphs.at(0), inst.colorings.at(0), inst.v1, inst.v2);
        case IdentityKind::ColoredDisjoint:
            return residual_colored_disjoint(inst.graphs.at(0), inst.colorings.at(0),
                                             inst.graphs.at(1), inst.colorings.at(1), inst.ins);
        case IdentityKind::ColoredAppendix:
            return residual_colored_appendix(inst.graphs.at(0), inst.colorings.at(0), inst.v1,
                                             inst.ins);
        case IdentityKind::ColoredBridge:
            return residual_colored_bridge(inst.graphs.at(0), inst.colorings.at(0),
                                           inst.graphs.at(1), inst.colorings.at(1), inst.v1,
                                           inst.v2, inst.ins);
        case IdentityKind::Pants:
            return residual_pants(inst.graphs.at(0), inst.v1, inst.v2, inst.v3, inst.v4);
    }
    throw Error("unknown identity kind");
}

}  // namespace islands
