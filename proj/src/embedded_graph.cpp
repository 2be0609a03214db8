#include "islands/embedded_graph.hpp"

#include <algorithm>

namespace islands {

EmbeddedGraph EmbeddedGraph::planar(Multigraph g) {
    std::vector<char> vm(static_cast<size_t>(g.vertex_count()), 1);
    std::vector<char> em(static_cast<size_t>(g.edge_count()), 1);
    return planar(std::move(g), std::move(vm), std::move(em));
}

EmbeddedGraph EmbeddedGraph::planar(Multigraph g, std::vector<char> vertex_marks,
                                    std::vector<char> edge_marks) {
    EmbeddedGraph eg;
    eg.graph_ = std::move(g);
    eg.vmark_ = std::move(vertex_marks);
    eg.emark_ = std::move(edge_marks);
    eg.build_view();
    return eg;
}

EmbeddedGraph EmbeddedGraph::surface(RotationMap m) {
    std::vector<char> vm(static_cast<size_t>(m.graph().vertex_count()), 1);
    std::vector<char> em(static_cast<size_t>(m.graph().edge_count()), 1);
    return surface(std::move(m), std::move(vm), std::move(em));
}

EmbeddedGraph EmbeddedGraph::surface(RotationMap m, std::vector<char> vertex_marks,
                                     std::vector<char> edge_marks) {
    EmbeddedGraph eg;
    eg.graph_ = m.graph();
    eg.map_ = std::move(m);
    eg.vmark_ = std::move(vertex_marks);
    eg.emark_ = std::move(edge_marks);
    eg.build_view();
    return eg;
}

const RotationMap& EmbeddedGraph::map() const {
    if (!map_) throw Error("planar-mode graph carries no embedding data");
    return *map_;
}

void EmbeddedGraph::build_view() {
    const int nv = graph_.vertex_count();
    const int ne = graph_.edge_count();
    if (static_cast<int>(vmark_.size()) != nv || static_cast<int>(emark_.size()) != ne)
        throw Error("mark vectors do not match the host graph");

    slot_of_vertex_.assign(static_cast<size_t>(nv), -1);
    slot_vertex_.clear();
    for (int v = 0; v < nv; ++v) {
        if (!vmark_[static_cast<size_t>(v)]) continue;
        slot_of_vertex_[static_cast<size_t>(v)] = static_cast<int>(slot_vertex_.size());
        slot_vertex_.push_back(v);
    }
    if (marked_count() > kMaxVertices)
        throw Error("marked vertex count " + std::to_string(marked_count()) +
                    " exceeds the encoding limit of " + std::to_string(kMaxVertices));

    slot_adj_.assign(slot_vertex_.size(), 0);
    marked_slot_edges_.clear();
    marked_edge_ids_.clear();
    for (int e = 0; e < ne; ++e) {
        if (!emark_[static_cast<size_t>(e)]) continue;
        auto [u, v] = graph_.endpoints(e);
        int su = slot_of_vertex_[static_cast<size_t>(u)];
        int sv = slot_of_vertex_[static_cast<size_t>(v)];
        if (su < 0 || sv < 0)
            throw Error("marked edge " + std::to_string(e) + " has an unmarked endpoint");
        marked_slot_edges_.push_back({su, sv, e});
        marked_edge_ids_.push_back(e);
        if (su != sv) {
            slot_adj_[static_cast<size_t>(su)] |= subset_bit(sv);
            slot_adj_[static_cast<size_t>(sv)] |= subset_bit(su);
        }
    }
}

int EmbeddedGraph::slot_of(int host_vertex) const {
    int s = slot_of_vertex_[static_cast<size_t>(host_vertex)];
    if (s < 0) throw Error("vertex " + std::to_string(host_vertex) + " is not marked");
    return s;
}

VertexSubset EmbeddedGraph::full_slot_mask() const {
    int n = marked_count();
    return n == 0 ? 0 : (n == kMaxVertices + 1 ? ~VertexSubset{0} : (VertexSubset{1} << n) - 1);
}

Multigraph EmbeddedGraph::marked_graph() const {
    Multigraph g(marked_count());
    for (const auto& me : marked_slot_edges_) g.add_edge(me.slot_u, me.slot_v);
    return g;
}

std::vector<VertexSubset> EmbeddedGraph::island_masks(VertexSubset slots) const {
    std::vector<VertexSubset> out;
    VertexSubset rest = slots;
    while (rest) {
        int seed = __builtin_ctzll(rest);
        VertexSubset comp = subset_bit(seed);
        VertexSubset frontier = comp;
        while (frontier) {
            VertexSubset next = 0;
            while (frontier) {
                int v = __builtin_ctzll(frontier);
                frontier &= frontier - 1;
                next |= slot_adj_[static_cast<size_t>(v)] & slots & ~comp;
            }
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        rest &= ~comp;
    }
    return out;
}

int EmbeddedGraph::face_count(VertexSubset slots) const {
    if (slots & ~full_slot_mask()) throw Error("subset contains an unmarked vertex slot");
    if (!surface_mode()) {
        if (!slots) return 0;
        int edges_in = 0;
        for (const auto& me : marked_slot_edges_)
            if (subset_contains(slots, me.slot_u) && subset_contains(slots, me.slot_v)) ++edges_in;
        int k = static_cast<int>(island_masks(slots).size());
        return edges_in - subset_size(slots) + 2 * k;
    }
    FaceScratch scratch(*this);
    return scratch.face_count(slots);
}

FaceScratch::FaceScratch(const EmbeddedGraph& eg)
    : eg_(eg),
      vin_(static_cast<size_t>(eg.host().vertex_count()), 0),
      ein_(static_cast<size_t>(eg.host().edge_count()), 0) {}

int FaceScratch::face_count(VertexSubset slots) {
    if (!eg_.surface_mode()) return eg_.face_count(slots);
    if (slots & ~eg_.full_slot_mask()) throw Error("subset contains an unmarked vertex slot");
    if (!slots) return 0;
    int total = 0;
    for (VertexSubset island : eg_.island_masks(slots)) {
        for (int s = 0; s < eg_.marked_count(); ++s)
            if (subset_contains(island, s)) vin_[static_cast<size_t>(eg_.vertex_of_slot(s))] = 1;
        for (const auto& me : eg_.marked_slot_edges_)
            if (subset_contains(island, me.slot_u) && subset_contains(island, me.slot_v))
                ein_[static_cast<size_t>(me.host_id)] = 1;
        total += eg_.map().complement_components(vin_, ein_);
        std::fill(vin_.begin(), vin_.end(), 0);
        std::fill(ein_.begin(), ein_.end(), 0);
    }
    return total;
}

EmbeddedGraph EmbeddedGraph::restricted(VertexSubset slots) const {
    std::vector<char> vm(vmark_.size(), 0);
    for (int s = 0; s < marked_count(); ++s)
        if (subset_contains(slots, s)) vm[static_cast<size_t>(slot_vertex_[static_cast<size_t>(s)])] = 1;
    std::vector<char> em(emark_.size(), 0);
    for (const auto& me : marked_slot_edges_)
        if (subset_contains(slots, me.slot_u) && subset_contains(slots, me.slot_v))
            em[static_cast<size_t>(me.host_id)] = 1;
    EmbeddedGraph eg;
    eg.graph_ = graph_;
    eg.map_ = map_;
    eg.vmark_ = std::move(vm);
    eg.emark_ = std::move(em);
    eg.build_view();
    return eg;
}

EmbeddedGraph EmbeddedGraph::without_vertex(int host_vertex) const {
    return restricted(full_slot_mask() & ~subset_bit(slot_of(host_vertex)));
}

EmbeddedGraph EmbeddedGraph::without_edge(int host_edge) const {
    if (host_edge < 0 || host_edge >= graph_.edge_count() || !emark_[static_cast<size_t>(host_edge)])
        throw Error("edge " + std::to_string(host_edge) + " is not a marked edge");
    std::vector<char> em = emark_;
    em[static_cast<size_t>(host_edge)] = 0;
    EmbeddedGraph eg;
    eg.graph_ = graph_;
    eg.map_ = map_;
    eg.vmark_ = vmark_;
    eg.emark_ = std::move(em);
    eg.build_view();
    return eg;
}

bool EmbeddedGraph::operator==(const EmbeddedGraph& o) const {
    if (surface_mode() != o.surface_mode()) return false;
    if (surface_mode() && !(*map_ == *o.map_)) return false;
    return graph_ == o.graph_ && vmark_ == o.vmark_ && emark_ == o.emark_;
}

void Coloring::validate(const EmbeddedGraph& eg) const {
    if (static_cast<int>(color_of.size()) != eg.host().vertex_count())
        throw Error("coloring size does not match the host graph");
    if (color_count < 1 && eg.marked_count() > 0) throw Error("coloring uses no colors");
    std::vector<char> used(static_cast<size_t>(color_count), 0);
    for (int v = 0; v < eg.host().vertex_count(); ++v) {
        int c = color_of[static_cast<size_t>(v)];
        if (!eg.vertex_marked(v)) continue;
        if (c < 0 || c >= color_count)
            throw Error("marked vertex " + std::to_string(v) + " has no valid color");
        used[static_cast<size_t>(c)] = 1;
    }
    for (int c = 0; c < color_count; ++c)
        if (!used[static_cast<size_t>(c)])
            throw Error("color " + std::to_string(c) + " is unused (coloring must be surjective)");
    if (!names.empty() && static_cast<int>(names.size()) != color_count)
        throw Error("color name list does not match the color count");
}

Coloring Coloring::injective(const EmbeddedGraph& eg) {
    Coloring col;
    col.color_of.assign(static_cast<size_t>(eg.host().vertex_count()), -1);
    for (int s = 0; s < eg.marked_count(); ++s)
        col.color_of[static_cast<size_t>(eg.vertex_of_slot(s))] = s;
    col.color_count = eg.marked_count();
    return col;
}

Coloring Coloring::constant(const EmbeddedGraph& eg) {
    Coloring col;
    col.color_of.assign(static_cast<size_t>(eg.host().vertex_count()), -1);
    for (int s = 0; s < eg.marked_count(); ++s)
        col.color_of[static_cast<size_t>(eg.vertex_of_slot(s))] = 0;
    col.color_count = eg.marked_count() > 0 ? 1 : 0;
    return col;
}

}  // namespace islands
