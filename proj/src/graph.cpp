#include "framelift/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "framelift/errors.hpp"
#include "framelift/matroid.hpp"

namespace framelift {

Multigraph::Multigraph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    if (vertex_count() > kMaxVertices) throw InputError("graphs are limited to 64 vertices");
    if (edge_count() > kMaxElements) throw InputError("graphs are limited to 32 edges");
    std::unordered_map<std::string_view, int> seen;
    for (auto& v : vertices_) {
        if (v.empty()) throw InputError("empty vertex name");
        if (!seen.emplace(v, 0).second) throw InputError("duplicate vertex '" + v + "'");
    }
    seen.clear();
    stars_.assign(vertex_count(), ElementSet{});
    for (int e = 0; e < edge_count(); ++e) {
        const Edge& ed = edges_[e];
        if (ed.name.empty()) throw InputError("empty edge name");
        if (!seen.emplace(ed.name, e).second) throw InputError("duplicate edge '" + ed.name + "'");
        if (ed.tail < 0 || ed.tail >= vertex_count() || ed.head < 0 || ed.head >= vertex_count())
            throw InputError("edge '" + ed.name + "' has an end outside the vertex list");
        stars_[ed.tail] = stars_[ed.tail].with(e);
        stars_[ed.head] = stars_[ed.head].with(e);
        ends_.push_back((VertexMask{1} << ed.tail) | (VertexMask{1} << ed.head));
    }
}

std::vector<std::string> Multigraph::edge_names() const {
    std::vector<std::string> out;
    for (auto& e : edges_) out.push_back(e.name);
    return out;
}

ElementSet Multigraph::loops() const {
    ElementSet s;
    for (int e = 0; e < edge_count(); ++e)
        if (edges_[e].is_loop()) s = s.with(e);
    return s;
}

VertexMask Multigraph::vertices_of(ElementSet s) const {
    VertexMask m = 0;
    for (int e : s) m |= ends_[e];
    return m;
}

int Multigraph::degree(int v) const {
    int d = 0;
    for (int e : stars_[v]) d += edges_[e].is_loop() ? 2 : 1;
    return d;
}

int Multigraph::vertex_index(std::string_view name) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (vertices_[v] == name) return v;
    throw InputError("unknown vertex '" + std::string(name) + "'");
}

int Multigraph::edge_index(std::string_view name) const {
    for (int e = 0; e < edge_count(); ++e)
        if (edges_[e].name == name) return e;
    throw InputError("unknown edge '" + std::string(name) + "'");
}

ElementSet Multigraph::edge_set(const std::vector<std::string>& names) const {
    ElementSet s;
    for (auto& n : names) s = s.with(edge_index(n));
    return s;
}

std::string Multigraph::format(ElementSet s) const {
    std::string out = "{";
    bool first = true;
    for (int e : s) {
        out += (first ? "" : ",") + edges_[e].name;
        first = false;
    }
    return out + "}";
}

std::vector<Component> components(const Multigraph& g, ElementSet s) {
    std::vector<int> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int e : s) parent[find(g.edge(e).tail)] = find(g.edge(e).head);
    std::vector<int> slot(g.vertex_count(), -1);
    std::vector<Component> out;
    for (int e : s) {
        const int root = find(g.edge(e).tail);
        if (slot[root] < 0) {
            slot[root] = static_cast<int>(out.size());
            out.emplace_back();
        }
        Component& c = out[slot[root]];
        c.edges = c.edges.with(e);
        c.vertices |= g.ends(e);
    }
    for (auto& c : out) c.vertex_count = std::popcount(c.vertices);
    return out;
}

bool is_cycle(const Multigraph& g, ElementSet s) {
    if (s.empty()) return false;
    const VertexMask vs = g.vertices_of(s);
    // 2-regular means |E| = |V| with every degree 2.
    if (std::popcount(vs) != s.size()) return false;
    for (VertexMask rest = vs; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        int d = 0;
        for (int e : g.star(v) & s) d += g.edge(e).is_loop() ? 2 : 1;
        if (d != 2) return false;
    }
    return components(g, s).size() == 1;
}

Cycle trace_cycle(const Multigraph& g, ElementSet s) {
    if (!s.subset_of(g.all_edges())) throw InputError("cycle uses edges outside the graph");
    if (!is_cycle(g, s)) throw InputError(g.format(s) + " is not a cycle");
    Cycle c{s, {}};
    const int first = s.min();
    c.steps.push_back({first, true});
    int at = g.edge(first).head;
    ElementSet left = s.without(first);
    while (!left.empty()) {
        const int e = (g.star(at) & left).min();
        const bool forward = g.edge(e).tail == at;
        c.steps.push_back({e, forward});
        at = g.edge(e).other(at);
        left = left.without(e);
    }
    return c;
}

std::vector<ElementSet> all_cycles(const Multigraph& g, int max_length) {
    std::vector<ElementSet> out;
    if (max_length < 1) return out;
    // Adjacency over non-loop edges.
    std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.is_loop()) continue;
        adj[ed.tail].emplace_back(e, ed.head);
        adj[ed.head].emplace_back(e, ed.tail);
    }
    std::vector<char> on_path(g.vertex_count(), 0);
    // Each cycle is found from its lowest edge e0 = (t, h): as e0 plus a path h -> t over higher edges.
    for (int e0 = 0; e0 < g.edge_count(); ++e0) {
        const Edge& base = g.edge(e0);
        if (base.is_loop()) {
            out.push_back(ElementSet::single(e0));
            continue;
        }
        const int target = base.tail;
        auto dfs = [&](auto&& self, int at, ElementSet path) -> void {
            const int len = path.size() + 1;  // edges so far, e0 included
            for (auto [f, w] : adj[at]) {
                if (f <= e0 || path.contains(f)) continue;
                if (w == target) {
                    if (len + 1 <= max_length) out.push_back(path.with(f).with(e0));
                } else if (!on_path[w] && len + 2 <= max_length) {
                    on_path[w] = 1;
                    self(self, w, path.with(f));
                    on_path[w] = 0;
                }
            }
        };
        on_path[base.head] = 1;
        on_path[target] = 1;
        dfs(dfs, base.head, ElementSet{});
        on_path[base.head] = 0;
        on_path[target] = 0;
    }
    sort_family(out);
    return out;
}

LabelledGraph::LabelledGraph(Multigraph g, Group group, std::vector<GroupValue> labels, ElementSet balanced_loops)
    : graph_(std::move(g)), group_(group), labels_(std::move(labels)), balanced_loops_(balanced_loops) {
    if (static_cast<int>(labels_.size()) != graph_.edge_count()) throw InputError("one label per edge is required");
    if (!balanced_loops_.subset_of(graph_.loops())) throw InputError("only loops can be declared balanced");
    for (int e = 0; e < graph_.edge_count(); ++e) {
        if (graph_.edge(e).is_loop()) labels_[e] = GroupValue::identity(group_);
        if (labels_[e].group() != group_)
            throw InputError("label of '" + graph_.edge(e).name + "' is not in group " + to_string(group_));
    }
}

LabelledGraph LabelledGraph::unlabelled(Multigraph g, Group group) {
    std::vector<GroupValue> labels(g.edge_count(), GroupValue::identity(group));
    return LabelledGraph(std::move(g), group, std::move(labels));
}

LabelledGraph LabelledGraph::with_label(int e, const GroupValue& g) const {
    auto labels = labels_;
    labels.at(e) = g;
    return LabelledGraph(graph_, group_, std::move(labels), balanced_loops_);
}

LabelledGraph LabelledGraph::with_vertex_names(std::vector<std::string> names) const {
    if (static_cast<int>(names.size()) != graph_.vertex_count()) throw InputError("wrong number of vertex names");
    return LabelledGraph(Multigraph(std::move(names), graph_.edges()), group_, labels_, balanced_loops_);
}

GroupValue cycle_gain(const LabelledGraph& lg, const Cycle& c) {
    const Multigraph& g = lg.graph();
    GroupValue acc = GroupValue::identity(lg.group());
    for (auto [e, forward] : c.steps) {
        if (e < 0 || e >= g.edge_count()) throw InputError("cycle uses an edge outside the graph");
        if (g.edge(e).is_loop()) throw InputError("loops carry no label; their balance is declared");
        acc = compose(acc, forward ? lg.label(e) : lg.label(e).inverse());
    }
    return acc;
}

bool is_balanced(const LabelledGraph& lg, ElementSet cycle) {
    if (cycle.size() == 1 && lg.graph().edge(cycle.min()).is_loop()) return lg.balanced_loops().contains(cycle.min());
    return cycle_gain(lg, trace_cycle(lg.graph(), cycle)).is_identity();
}

LabelledGraph switch_vertex(const LabelledGraph& lg, int v, const GroupValue& g) {
    if (g.group() != lg.group()) throw InputError("switching value is in the wrong group");
    const Multigraph& gr = lg.graph();
    if (v < 0 || v >= gr.vertex_count()) throw InputError("switching vertex out of range");
    auto labels = lg.labels();
    for (int e : gr.star(v)) {
        const Edge& ed = gr.edge(e);
        if (ed.is_loop()) continue;
        labels[e] = ed.tail == v ? compose(g, labels[e]) : compose(labels[e], g.inverse());
    }
    return LabelledGraph(gr, lg.group(), std::move(labels), lg.balanced_loops());
}

LabelledGraph contract_edges(const LabelledGraph& lg, ElementSet links) {
    LabelledGraph cur = lg;
    // Contract by name, since indices shift as edges go.
    std::vector<std::string> names;
    for (int e : links) names.push_back(lg.graph().edge(e).name);
    for (auto& name : names) {
        const int e = cur.graph().edge_index(name);
        const Edge link = cur.graph().edge(e);
        if (link.is_loop()) throw InputError("cannot contract loop '" + name + "'");
        cur = switch_vertex(cur, link.head, cur.label(e));
        const Multigraph& g = cur.graph();
        std::vector<std::string> verts;
        std::vector<int> remap(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (v == link.head) continue;
            remap[v] = static_cast<int>(verts.size());
            verts.push_back(g.vertices()[v]);
        }
        remap[link.head] = remap[link.tail];
        std::vector<Edge> edges;
        std::vector<GroupValue> labels;
        ElementSet balanced_loops;
        for (int f = 0; f < g.edge_count(); ++f) {
            if (f == e) continue;
            const Edge& ed = g.edge(f);
            Edge ne{ed.name, remap[ed.tail], remap[ed.head]};
            const int idx = static_cast<int>(edges.size());
            if (ed.is_loop()) {
                if (cur.balanced_loops().contains(f)) balanced_loops = balanced_loops.with(idx);
            } else if (ne.is_loop() && cur.label(f).is_identity()) {
                balanced_loops = balanced_loops.with(idx);
            }
            edges.push_back(ne);
            labels.push_back(cur.label(f));
        }
        cur = LabelledGraph(Multigraph(std::move(verts), std::move(edges)), cur.group(), std::move(labels),
                            balanced_loops);
    }
    return cur;
}

LabelledGraph delete_edges(const LabelledGraph& lg, ElementSet s) {
    const Multigraph& g = lg.graph();
    std::vector<Edge> edges;
    std::vector<GroupValue> labels;
    ElementSet balanced_loops;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (s.contains(e)) continue;
        if (lg.balanced_loops().contains(e)) balanced_loops = balanced_loops.with(static_cast<int>(edges.size()));
        edges.push_back(g.edge(e));
        labels.push_back(lg.label(e));
    }
    return LabelledGraph(Multigraph(g.vertices(), std::move(edges)), lg.group(), std::move(labels), balanced_loops);
}

bool is_linear_subclass(const Multigraph& g, const std::vector<ElementSet>& b) {
    std::unordered_set<std::uint32_t> in_b;
    for (auto c : b) in_b.insert(c.bits());
    // Two cycles of a theta meet in one of its three paths, and their symmetric difference is the
    // third cycle. A proper nonempty part of a cycle is a path iff it has one more vertex than edges;
    // the other two paths are internally disjoint iff the symmetric difference has as many vertices
    // as edges.
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            const ElementSet meet = b[i] & b[j];
            if (meet.empty() || meet == b[i] || meet == b[j]) continue;
            if (std::popcount(g.vertices_of(meet)) != meet.size() + 1) continue;
            const ElementSet third = b[i] ^ b[j];
            if (std::popcount(g.vertices_of(third)) != third.size()) continue;
            if (!in_b.count(third.bits())) return false;
        }
    }
    return true;
}

BiasedGraph::BiasedGraph(Multigraph g, std::vector<ElementSet> balanced)
    : graph_(std::move(g)), balanced_(std::move(balanced)) {
    sort_family(balanced_);
    balanced_.erase(std::unique(balanced_.begin(), balanced_.end()), balanced_.end());
    for (auto c : balanced_) {
        if (!c.subset_of(graph_.all_edges()) || !is_cycle(graph_, c))
            throw InputError(graph_.format(c) + " is not a cycle of the graph");
        lookup_.insert(c.bits());
    }
    if (!is_linear_subclass(graph_, balanced_)) throw InputError("balanced cycles violate the theta condition");
}

bool BiasedGraph::has_balanced_cycle_in(ElementSet s) const {
    for (auto c : balanced_)
        if (c.subset_of(s)) return true;
    return false;
}

BiasedGraph balanced_cycles(const LabelledGraph& lg) {
    std::vector<ElementSet> b;
    for (auto c : all_cycles(lg.graph()))
        if (is_balanced(lg, c)) b.push_back(c);
    return BiasedGraph(lg.graph(), std::move(b));
}

}  // namespace framelift
