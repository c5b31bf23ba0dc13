#include "framelift/bias_matroid.hpp"

#include <bit>

#include "framelift/errors.hpp"
#include "framelift/graph_io.hpp"
#include "framelift/matroid_query.hpp"

namespace framelift {

std::string to_string(MatroidKind k) { return k == MatroidKind::Frame ? "frame" : "lift"; }

MatroidKind parse_kind(const std::string& s) {
    if (s == "frame") return MatroidKind::Frame;
    if (s == "lift") return MatroidKind::Lift;
    throw InputError("unknown kind '" + s + "' (expected frame or lift)");
}

bool fm_independent(const BiasedGraph& bg, ElementSet i) {
    for (const auto& c : components(bg.graph(), i))
        if (c.edges.size() > c.vertex_count) return false;
    return !bg.has_balanced_cycle_in(i);
}

bool lm_independent(const BiasedGraph& bg, ElementSet i) {
    const Multigraph& g = bg.graph();
    // Cycle rank of G[I] is |I| - |V(I)| + c(I).
    const int cyclomatic = i.size() - std::popcount(g.vertices_of(i)) + static_cast<int>(components(g, i).size());
    if (cyclomatic > 1) return false;
    return cyclomatic == 0 || !bg.has_balanced_cycle_in(i);
}

bool is_independent(const BiasedGraph& bg, MatroidKind kind, ElementSet i) {
    return kind == MatroidKind::Frame ? fm_independent(bg, i) : lm_independent(bg, i);
}

namespace {

class BiasedGraphOracle final : public RankOracle {
public:
    BiasedGraphOracle(BiasedGraph bg, MatroidKind kind)
        : bg_(std::move(bg)), kind_(kind), names_(bg_.graph().edge_names()) {}

    int size() const override { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const override { return names_; }
    int rank(ElementSet s) const override {
        ElementSet basis;
        for (int e : s)
            if (is_independent(bg_, kind_, basis.with(e))) basis = basis.with(e);
        return basis.size();
    }

private:
    BiasedGraph bg_;
    MatroidKind kind_;
    std::vector<std::string> names_;
};

class LabelledGraphOracle final : public RankOracle {
public:
    LabelledGraphOracle(LabelledGraph lg, MatroidKind kind)
        : lg_(std::move(lg)), kind_(kind), names_(lg_.graph().edge_names()) {}

    int size() const override { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const override { return names_; }
    int rank(ElementSet s) const override {
        const auto b = subgraph_balance(lg_, s);
        if (kind_ == MatroidKind::Frame) return b.vertices - b.balanced_components;
        return b.vertices - b.components + (b.balanced_components < b.components ? 1 : 0);
    }

private:
    LabelledGraph lg_;
    MatroidKind kind_;
    std::vector<std::string> names_;
};

ExplicitMatroid materialize_from(const BiasedGraph& bg, MatroidKind kind) {
    const BiasedGraphOracle oracle(bg, kind);
    const int r = oracle.full_rank();
    std::vector<ElementSet> bases;
    for_each_subset_of_size(oracle.ground(), r, [&](ElementSet s) {
        if (is_independent(bg, kind, s)) bases.push_back(s);
    });
    try {
        return ExplicitMatroid(oracle.names(), std::move(bases));
    } catch (const InputError& e) {
        throw InternalError(to_string(kind) + " matroid of a biased graph failed the basis axioms: " + e.what());
    }
}

}  // namespace

SubgraphBalance subgraph_balance(const LabelledGraph& lg, ElementSet s) {
    const Multigraph& g = lg.graph();
    SubgraphBalance out;
    std::vector<GroupValue> phi(g.vertex_count(), GroupValue::identity(lg.group()));
    VertexMask seen = 0;
    const VertexMask touched = g.vertices_of(s);
    std::vector<int> queue;
    for (VertexMask rest = touched; rest; rest &= rest - 1) {
        const int root = std::countr_zero(rest);
        if (seen >> root & 1) continue;
        ++out.components;
        bool balanced = true;
        seen |= VertexMask{1} << root;
        queue.assign(1, root);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int v = queue[qi];
            ++out.vertices;
            for (int e : g.star(v) & s) {
                const Edge& ed = g.edge(e);
                if (ed.is_loop()) {
                    if (!lg.balanced_loops().contains(e)) balanced = false;
                    continue;
                }
                // phi(head) = phi(tail) * gamma(e) on balanced components.
                const int w = ed.other(v);
                const GroupValue want =
                    ed.tail == v ? compose(phi[v], lg.label(e)) : compose(phi[v], lg.label(e).inverse());
                if (!(seen >> w & 1)) {
                    seen |= VertexMask{1} << w;
                    phi[w] = want;
                    queue.push_back(w);
                } else if (!(phi[w] == want)) {
                    balanced = false;
                }
            }
        }
        if (balanced) ++out.balanced_components;
    }
    return out;
}

ExplicitMatroid fm_matroid(const BiasedGraph& bg) { return materialize_from(bg, MatroidKind::Frame); }
ExplicitMatroid lm_matroid(const BiasedGraph& bg) { return materialize_from(bg, MatroidKind::Lift); }
ExplicitMatroid bias_matroid(const BiasedGraph& bg, MatroidKind kind) { return materialize_from(bg, kind); }

OraclePtr graph_oracle(const LabelledGraph& lg, MatroidKind kind) {
    return std::make_shared<LabelledGraphOracle>(lg, kind);
}

OraclePtr graph_oracle(const BiasedGraph& bg, MatroidKind kind) {
    return std::make_shared<BiasedGraphOracle>(bg, kind);
}

CocircuitClass classify_nonseparating(const BiasedGraph& bg, ElementSet cstar) {
    const Multigraph& g = bg.graph();
    if (!cstar.subset_of(g.all_edges())) throw InputError("cocircuit uses edges outside the graph");
    auto fm = graph_oracle(bg, MatroidKind::Frame);
    if (!is_cocircuit(*fm, cstar)) throw InputError(g.format(cstar) + " is not a cocircuit of the frame matroid");
    if (!is_connected(MinorView(fm, cstar, {}))) throw InputError(g.format(cstar) + " is a separating cocircuit");

    bool balancing = true;
    for (auto c : all_cycles(g))
        if (!c.intersects(cstar) && !bg.is_balanced(c)) balancing = false;
    std::optional<int> vertex;
    for (int v = 0; v < g.vertex_count() && !vertex; ++v)
        if (g.star(v) == cstar) vertex = v;

    if (balancing && vertex) return {CocircuitKind::Both, vertex};
    if (balancing) return {CocircuitKind::Balancing, {}};
    if (vertex) return {CocircuitKind::Vertical, vertex};
    throw InternalError("non-separating cocircuit " + g.format(cstar) +
                        " is neither balancing nor a vertex star in:\n" + to_text(bg));
}

std::string to_string(const CocircuitClass& c, const Multigraph& g) {
    switch (c.kind) {
        case CocircuitKind::Balancing: return "BALANCING";
        case CocircuitKind::Vertical: return "VERTICAL(" + g.vertices()[*c.vertex] + ")";
        case CocircuitKind::Both: return "BOTH(" + g.vertices()[*c.vertex] + ")";
    }
    return {};
}

}  // namespace framelift
