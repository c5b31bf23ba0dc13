#include "framelift/families.hpp"

#include <algorithm>

#include "framelift/errors.hpp"
#include "framelift/matroid_query.hpp"

namespace framelift {

void check_params(const FamilyParams& p) {
    if (p.k < 3 || p.k % 2 == 0) throw InputError("k must be an odd integer >= 3, got " + std::to_string(p.k));
    // 4k + 2 edges must fit a ground set.
    if (4 * p.k + 2 > kMaxElements) throw InputError("k = " + std::to_string(p.k) + " exceeds the 32-element limit");
}

Group family_group(MatroidKind kind) {
    return kind == MatroidKind::Frame ? Group::PositiveRationals : Group::Integers;
}

namespace {

const char* const kLetters = "abcd";

std::string edge_name(char letter, int i) { return std::string(1, letter) + std::to_string(i); }

int edge_id(char letter, int i) { return 2 + 4 * (i - 1) + static_cast<int>(std::string(kLetters).find(letter)); }

// Vertex of the u (top) or w (bottom) row at column i; column 1 is split, tails leave s1/s2 and
// heads enter t1/t2.
int vertex_id(bool top, int i, bool head) {
    if (i == 1) return top ? (head ? 1 : 0) : (head ? 3 : 2);
    return 4 + 2 * (i - 2) + (top ? 0 : 1);
}

std::vector<std::string> vertex_names(int k) {
    std::vector<std::string> vs{"s1", "t1", "s2", "t2"};
    for (int i = 2; i <= k; ++i) {
        vs.push_back("u" + std::to_string(i));
        vs.push_back("w" + std::to_string(i));
    }
    return vs;
}

GroupValue default_label(MatroidKind kind, char letter, int i, int k) {
    if (i != k) return GroupValue::identity(family_group(kind));
    if (kind == MatroidKind::Frame) return GroupValue::rational(2);
    return GroupValue::integer(letter == 'a' || letter == 'c' ? 1 : -1);
}

LabelledGraph build_graph(const FamilyParams& p, bool alt) {
    check_params(p);
    const int k = p.k;
    const Group group = family_group(p.kind);
    std::vector<Edge> edges;
    std::vector<GroupValue> labels;
    if (!alt) {
        edges.push_back({"e1", 0, 1});
        edges.push_back({"e2", 2, 3});
    } else {
        edges.push_back({"e1", 0, 3});
        edges.push_back({"e2", 2, 1});
    }
    labels.assign(2, GroupValue::identity(group));
    for (int i = 1; i <= k; ++i) {
        const int j = i % k + 1;
        for (char letter : std::string(kLetters)) {
            const bool from_top = letter == 'a' || letter == 'b';
            const bool to_top = letter == 'a' || letter == 'c';
            edges.push_back({edge_name(letter, i), vertex_id(from_top, i, false), vertex_id(to_top, j, true)});
            labels.push_back(default_label(p.kind, letter, i, k));
        }
    }
    Multigraph g(vertex_names(k), edges);
    for (const auto& [name, value] : p.label_override) {
        const int e = g.edge_index(name);
        if (value.group() != group) throw InputError("override for '" + name + "' is not in group " + to_string(group));
        labels[e] = value;
    }
    return LabelledGraph(std::move(g), group, std::move(labels));
}

ElementSet of_names(std::initializer_list<std::pair<char, int>> items) {
    ElementSet s;
    for (auto [letter, i] : items) s = s.with(edge_id(letter, i));
    return s;
}

}  // namespace

LabelledGraph build_base_graph(const FamilyParams& p) { return build_graph(p, false); }
LabelledGraph build_alt_graph(const FamilyParams& p) { return build_graph(p, true); }

ElementSet FamilyInstance::to_contracted(ElementSet s) const {
    if (s.intersects(e12)) throw InputError("set meets {e1,e2}, which the contraction removes");
    return ElementSet(s.bits() >> 2);
}

FamilyInstance build_instance(const FamilyParams& params, std::optional<bool> materialize) {
    check_params(params);
    const int k = params.k;
    FamilyInstance inst;
    inst.params = params;
    inst.base = build_base_graph(params);
    inst.alt = build_alt_graph(params);
    inst.e12 = ElementSet::of({0, 1});
    for (int i = 1; i <= k; ++i) {
        inst.p |= of_names({{'a', i}, {'d', i}});
        inst.q |= of_names({{'b', i}, {'c', i}});
        inst.bundles.push_back(of_names({{'a', i}, {'b', i}, {'c', i}, {'d', i}}));
    }
    inst.named["A1"] = of_names({{'a', 1}, {'b', 1}, {'a', k}, {'c', k}});
    inst.named["A2"] = of_names({{'c', 1}, {'d', 1}, {'b', k}, {'d', k}});
    inst.named["B1"] = of_names({{'a', 1}, {'b', 1}, {'b', k}, {'d', k}});
    inst.named["B2"] = of_names({{'c', 1}, {'d', 1}, {'a', k}, {'c', k}});
    inst.named["C1"] = inst.bundles.front();
    inst.named["C2"] = inst.bundles.back();

    auto names = vertex_names(k);
    names.erase(names.begin() + 3);  // t2
    names.erase(names.begin() + 1);  // t1
    names[0] = "u1";
    names[1] = "w1";
    inst.contracted = contract_edges(inst.base, inst.e12).with_vertex_names(names);

    const bool frame = params.kind == MatroidKind::Frame;
    const ElementSet pp = inst.p_plus(), qp = inst.q_plus();
    const std::string p_name = "P+{e1,e2}", q_name = "Q+{e1,e2}";
    auto named_error = [](const std::string& set, const PreconditionError& e) {
        return PreconditionError(set + ": " + e.what());
    };

    if (materialize.value_or(k == 3)) {
        inst.n_explicit = bias_matroid(balanced_cycles(inst.base), params.kind);
        ExplicitMatroid cur = *inst.n_explicit;
        for (auto [set, name] : {std::pair{pp, p_name}, std::pair{qp, q_name}}) {
            try {
                cur = frame ? tighten(cur, set) : relax(cur, set);
            } catch (const PreconditionError& e) {
                throw named_error(name, e);
            }
        }
        inst.m_explicit = cur;
        inst.m_contracted_explicit = minor(cur, {}, inst.e12);
        inst.n = std::make_shared<ExplicitMatroid>(*inst.n_explicit);
        inst.m = std::make_shared<ExplicitMatroid>(*inst.m_explicit);
        inst.m_contracted = std::make_shared<ExplicitMatroid>(*inst.m_contracted_explicit);
        inst.n_contracted = std::make_shared<ExplicitMatroid>(minor(*inst.n_explicit, {}, inst.e12));
    } else {
        inst.n = graph_oracle(inst.base, params.kind);
        OraclePtr cur = inst.n;
        for (auto [set, name] : {std::pair{pp, p_name}, std::pair{qp, q_name}}) {
            try {
                cur = frame ? tighten_view(cur, set) : relax_view(cur, set);
            } catch (const PreconditionError& e) {
                throw named_error(name, e);
            }
        }
        inst.m = cur;
        inst.m_contracted = std::make_shared<MinorView>(inst.m, ElementSet{}, inst.e12);
        inst.n_contracted = std::make_shared<MinorView>(inst.n, ElementSet{}, inst.e12);
    }
    return inst;
}

bool FactReport::passed() const { return failures() == 0; }

int FactReport::failures() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

namespace {

std::string join_sets(const RankOracle& m, const std::vector<ElementSet>& sets, std::size_t limit = 6) {
    std::string out;
    for (std::size_t i = 0; i < sets.size() && i < limit; ++i) out += (i ? " " : "") + m.format(sets[i]);
    if (sets.size() > limit) out += " ... (" + std::to_string(sets.size()) + " total)";
    return out;
}

bool non_separating_cocircuit(const RankOracle& m, ElementSet x) {
    return is_cocircuit(m, x) && is_connected(MinorView(borrow(m), x, {}));
}

class Reporter {
public:
    explicit Reporter(FactReport& r) : r_(r) {}
    void add(std::string name, bool ok, std::string detail) { r_.checks.push_back({std::move(name), ok, std::move(detail)}); }
    // Pass when `bad` is empty; otherwise list the offending sets.
    void none_of(std::string name, const RankOracle& m, const std::vector<ElementSet>& bad, std::string ok_detail) {
        add(std::move(name), bad.empty(), bad.empty() ? std::move(ok_detail) : "failing: " + join_sets(m, bad));
    }

private:
    FactReport& r_;
};

// Expected 4-element cocircuits of the contraction in the lift case.
std::vector<ElementSet> lift_census(const FamilyInstance& inst) {
    std::vector<ElementSet> want;
    const Multigraph& g = inst.contracted.graph();
    for (int v = 2; v < g.vertex_count(); ++v) want.push_back(g.star(v));  // skip u1, w1
    for (const auto& [name, s] : inst.named) want.push_back(inst.to_contracted(s));
    sort_family(want);
    return want;
}

}  // namespace

FactReport validate_facts(const FamilyInstance& inst) {
    FactReport report;
    Reporter rep(report);
    const int k = inst.params.k;
    const bool frame = inst.params.kind == MatroidKind::Frame;
    const Multigraph& g = inst.base.graph();
    const Multigraph& h = inst.contracted.graph();
    const RankOracle& n = *inst.n;
    const RankOracle& m = *inst.m;
    const RankOracle& nc = *inst.n_contracted;
    const RankOracle& mc = *inst.m_contracted;
    auto num = [](int x) { return std::to_string(x); };

    rep.add("edge count", g.edge_count() == 4 * k + 2, num(g.edge_count()) + " edges, expected " + num(4 * k + 2));
    rep.add("vertex count", g.vertex_count() == 2 * k + 2,
            num(g.vertex_count()) + " vertices, expected " + num(2 * k + 2));
    rep.add("rank of N", n.full_rank() == 2 * k + 2, "rank " + num(n.full_rank()) + ", expected " + num(2 * k + 2));
    rep.add("rank of M/{e1,e2}", mc.full_rank() == 2 * k,
            "rank " + num(mc.full_rank()) + ", expected " + num(2 * k));
    rep.add("{e1,e2} is a series pair of N", is_series_pair(n, 0, 1),
            is_series_pair(n, 0, 1) ? "{e1,e2} is a cocircuit" : "{e1,e2} is not a cocircuit");

    rep.add("Q+{e1,e2} is a hamilton cycle of G", is_cycle(g, inst.q_plus()) && inst.q_plus().size() == g.vertex_count(),
            g.format(inst.q_plus()));
    rep.add("P+{e1,e2} is a hamilton cycle of G'",
            is_cycle(inst.alt.graph(), inst.p_plus()) && inst.p_plus().size() == g.vertex_count(),
            g.format(inst.p_plus()));

    if (inst.is_explicit()) {
        const bool same = equal(bias_matroid(balanced_cycles(inst.alt), inst.params.kind), *inst.n_explicit);
        rep.add("G' represents N", same, same ? "equal basis families" : "basis families differ");
    } else {
        // Query mode: ranks of every set of size <= 3 and of its complement.
        auto alt = graph_oracle(inst.alt, inst.params.kind);
        std::vector<ElementSet> bad;
        for (int s = 0; s <= 3; ++s)
            for_each_subset_of_size(n.ground(), s, [&](ElementSet x) {
                if (alt->rank(x) != n.rank(x) || alt->rank(n.ground() - x) != n.rank(n.ground() - x)) bad.push_back(x);
            });
        rep.none_of("G' represents N (sets of size <= 3 and complements)", n, bad, "all ranks agree");
    }

    // Parity structure in G/{e1,e2}.
    {
        const ElementSet pc = inst.to_contracted(inst.p), qc = inst.to_contracted(inst.q);
        auto comps = components(h, pc);
        bool p_ok = comps.size() == 2;
        for (auto& c : comps) p_ok = p_ok && is_cycle(h, c.edges) && c.edges.size() == k;
        rep.add("G[P] is two disjoint k-cycles", p_ok, num(static_cast<int>(comps.size())) + " components");
        const bool q_ok = is_cycle(h, qc) && qc.size() == 2 * k;
        rep.add("G[Q] is one 2k-cycle", q_ok, q_ok ? "hamilton cycle of G/{e1,e2}" : "not a single cycle");
    }
    {
        bool regular = h.vertex_count() == 2 * k;
        for (int v = 0; v < h.vertex_count(); ++v) regular = regular && h.degree(v) == 4;
        bool simple = h.loops().empty();
        for (int e = 0; e < h.edge_count() && simple; ++e)
            for (int f = e + 1; f < h.edge_count(); ++f)
                if (h.ends(e) == h.ends(f)) simple = false;
        rep.add("G/{e1,e2} is 4-regular on 2k vertices", regular, num(h.vertex_count()) + " vertices");
        if (frame)
            rep.add("G/{e1,e2} is simple", simple, simple ? "no loops or parallel edges" : "has a loop or parallel pair");
        else
            rep.add("G/{e1,e2} is loopless", h.loops().empty(), h.loops().empty() ? "no loops" : "has loops");
    }
    rep.add("N/{e1,e2} is connected", is_connected(nc), num(static_cast<int>(connected_components(nc).size())) + " components");
    rep.add("M/{e1,e2} is connected", is_connected(mc), num(static_cast<int>(connected_components(mc).size())) + " components");

    const ElementSet pc = inst.to_contracted(inst.p), qc = inst.to_contracted(inst.q);
    if (frame) {
        rep.add("P+{e1,e2} and Q+{e1,e2} are circuits of M", is_circuit(m, inst.p_plus()) && is_circuit(m, inst.q_plus()),
                "after both tightenings");
        rep.add("P and Q are circuits of M/{e1,e2}", is_circuit(mc, pc) && is_circuit(mc, qc), "");
        rep.add("M/{e1,e2} is simple", bounded_circuits(mc, 2).empty(), "no circuits of size <= 2");

        auto small_n = bounded_cocircuits(nc, 3), small_m = bounded_cocircuits(mc, 3);
        small_n.insert(small_n.end(), small_m.begin(), small_m.end());
        rep.none_of("F-i cogirth of N/{e1,e2} and M/{e1,e2} is at least 4", mc, small_n, "no cocircuits of size <= 3");

        std::vector<ElementSet> bad, four;
        for (auto c : all_cycles(h, 4))
            if (c.size() == 4) {
                four.push_back(c);
                if (!is_circuit(nc, c) || !is_circuit(mc, c)) bad.push_back(c);
            }
        rep.none_of("F-ii every 4-cycle of G/{e1,e2} is a circuit", mc, bad, num(static_cast<int>(four.size())) + " four-cycles");

        bad.clear();
        for (auto c : inst.bundles) {
            const ElementSet x = inst.to_contracted(c);
            if (!non_separating_cocircuit(nc, x) || !non_separating_cocircuit(mc, x)) bad.push_back(x);
        }
        rep.none_of("F-iii each C_i is a non-separating cocircuit", mc, bad, num(k) + " bundles");

        bad.clear();
        for (int v = 0; v < h.vertex_count(); ++v) {
            const ElementSet x = h.star(v);
            if (x.size() != 4 || !non_separating_cocircuit(nc, x) || !non_separating_cocircuit(mc, x)) bad.push_back(x);
        }
        rep.none_of("F-iv each vertex star is a 4-element non-separating cocircuit", mc, bad,
                    num(h.vertex_count()) + " stars");

        auto census = bounded_cocircuits(mc, 4);
        rep.add("4-element cocircuits of M/{e1,e2}", true,
                num(static_cast<int>(census.size())) + " found (stars and bundles included above)");
    } else {
        rep.add("P+{e1,e2} and Q+{e1,e2} are bases of M", is_basis(m, inst.p_plus()) && is_basis(m, inst.q_plus()),
                "after both relaxations");
        rep.add("P and Q are independent in M/{e1,e2}", is_independent(mc, pc) && is_independent(mc, qc), "");
        const ElementSet six = inst.e12 | of_names({{'a', 1}, {'c', 1}, {'a', k}, {'b', k}});
        rep.add("{e1,e2,a1,c1,ak,bk} is independent in N", is_independent(n, six), n.format(six));

        auto small_n = bounded_cocircuits(nc, 3), small_m = bounded_cocircuits(mc, 3);
        small_n.insert(small_n.end(), small_m.begin(), small_m.end());
        rep.none_of("L-i cogirth of N/{e1,e2} and M/{e1,e2} is at least 4", mc, small_n, "no cocircuits of size <= 3");

        const auto want = lift_census(inst);
        for (auto [label, oracle] : {std::pair{"N/{e1,e2}", &nc}, std::pair{"M/{e1,e2}", &mc}}) {
            auto got = bounded_cocircuits(*oracle, 4);
            std::erase_if(got, [](ElementSet s) { return s.size() != 4; });
            sort_family(got);
            std::string detail = num(static_cast<int>(got.size())) + " found, " + num(static_cast<int>(want.size())) +
                                 " expected";
            if (got != want) {
                std::vector<ElementSet> extra, missing;
                std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));
                std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
                detail += "; extra " + join_sets(mc, extra) + "; missing " + join_sets(mc, missing);
            }
            rep.add(std::string("L-ii the 4-element cocircuits of ") + label + " are the internal stars and A1..C2",
                    got == want, detail);
        }
    }
    return report;
}

namespace {

BiasedGraph modified_bias(const LabelledGraph& lg, ElementSet cycle, MatroidKind kind) {
    auto bal = balanced_cycles(lg).balanced();
    if (kind == MatroidKind::Frame)
        bal.push_back(cycle);
    else
        std::erase(bal, cycle);
    return BiasedGraph(lg.graph(), std::move(bal));
}

}  // namespace

BiasedGraph rep_p(const FamilyInstance& inst) { return modified_bias(inst.base, inst.q_plus(), inst.params.kind); }
BiasedGraph rep_q(const FamilyInstance& inst) { return modified_bias(inst.alt, inst.p_plus(), inst.params.kind); }

FactReport verify_minors(const FamilyInstance& inst) {
    if (!inst.is_explicit()) throw PreconditionError("minor verification needs a materialized instance");
    FactReport report;
    Reporter rep(report);
    const bool frame = inst.params.kind == MatroidKind::Frame;
    const ExplicitMatroid& n = *inst.n_explicit;
    const ExplicitMatroid& m = *inst.m_explicit;
    const ExplicitMatroid mp = bias_matroid(rep_p(inst), inst.params.kind);
    const ExplicitMatroid mq = bias_matroid(rep_q(inst), inst.params.kind);
    const std::string op = frame ? "tightened" : "relaxed";
    rep.add("G with Q+{e1,e2} " + std::string(frame ? "balanced" : "unbalanced") + " represents N " + op + " at Q+{e1,e2}",
            equal(mp, frame ? tighten(n, inst.q_plus()) : relax(n, inst.q_plus())), "M_P");
    rep.add("G' with P+{e1,e2} " + std::string(frame ? "balanced" : "unbalanced") + " represents N " + op + " at P+{e1,e2}",
            equal(mq, frame ? tighten(n, inst.p_plus()) : relax(n, inst.p_plus())), "M_Q");
    for (int e : inst.p | inst.q) {
        const bool in_p = inst.p.contains(e);
        const ElementSet x = ElementSet::single(e);
        // e in P: deletion through M_P, contraction through M_Q; e in Q the other way round.
        const ExplicitMatroid& del_rep = in_p ? mp : mq;
        const ExplicitMatroid& con_rep = in_p ? mq : mp;
        const std::string& name = n.names()[e];
        rep.add("M \\ " + name, equal(minor(m, x, {}), minor(del_rep, x, {})), in_p ? "via G" : "via G'");
        rep.add("M / " + name, equal(minor(m, {}, x), minor(con_rep, {}, x)), in_p ? "via G'" : "via G");
    }
    return report;
}

std::optional<std::map<std::string, GroupValue>> search_labels(const FamilyParams& p,
                                                               const std::vector<GroupValue>& candidates) {
    if (p.k != 3) throw InputError("label search runs at k = 3 only");
    if (candidates.empty() || candidates.size() > 3) throw InputError("label search takes one to three candidate values");
    const std::vector<std::string> edges{"a3", "b3", "c3", "d3"};
    const int c = static_cast<int>(candidates.size());
    int total = 1;
    for (std::size_t i = 0; i < edges.size(); ++i) total *= c;
    for (int code = 0; code < total; ++code) {
        FamilyParams trial = p;
        trial.label_override.clear();
        int rest = code;
        for (int i = static_cast<int>(edges.size()) - 1; i >= 0; --i) {
            trial.label_override.insert_or_assign(edges[i], candidates[rest % c]);
            rest /= c;
        }
        try {
            if (validate_facts(build_instance(trial, true)).passed()) return trial.label_override;
        } catch (const PreconditionError&) {
        }
    }
    return std::nullopt;
}

}  // namespace framelift
