#include "framelift/decide.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <limits>
#include <numeric>
#include <thread>

#include "framelift/errors.hpp"
#include "framelift/graph_enum.hpp"
#include "framelift/matroid_query.hpp"

namespace framelift {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Representable: return "REPRESENTABLE";
        case Verdict::NotRepresentable: return "NOT_REPRESENTABLE";
        case Verdict::BudgetExceeded: return "BUDGET_EXCEEDED";
    }
    return {};
}

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::Auto: return "auto";
        case Strategy::Enumerate: return "enumerate";
        case Strategy::Vertical: return "vertical";
    }
    return {};
}

std::string to_string(GraphFilter f) {
    switch (f) {
        case GraphFilter::Any: return "any";
        case GraphFilter::Simple: return "simple";
        case GraphFilter::WithParallelPair: return "non-simple";
    }
    return {};
}

namespace {

using Clock = std::chrono::steady_clock;

enum Rule {
    kVertexCount,
    kMinStar,
    kDegreeSum,
    kRegularVertical,
    kGraphFilter,
    kComponentRank,
    kStarCocircuit,
    kCycleStatus,
    kTheta,
    kFinalCompare,
    kRuleCount
};

const std::array<const char*, kRuleCount> kRuleNames{
    "vertex-count", "min-star",     "degree-sum",     "regular-vertical", "graph-filter",
    "component-rank", "star-cocircuit", "cycle-status", "theta",          "final-compare"};

struct Counters {
    std::uint64_t nodes = 0, leaves = 0, candidates = 0, families = 0;
    std::array<std::uint64_t, kRuleCount> fired{};
    std::array<bool, kRuleCount> used{};

    void add(const Counters& o) {
        nodes += o.nodes;
        leaves += o.leaves;
        candidates += o.candidates;
        families += o.families;
        for (int i = 0; i < kRuleCount; ++i) {
            fired[i] += o.fired[i];
            used[i] = used[i] || o.used[i];
        }
    }
};

struct Outcome {
    Verdict verdict = Verdict::NotRepresentable;
    Counters counters;
    std::optional<BiasedGraph> witness;
};

bool is_simple(const Multigraph& h) {
    if (!h.loops().empty()) return false;
    for (int e = 0; e < h.edge_count(); ++e)
        for (int f = e + 1; f < h.edge_count(); ++f)
            if (h.ends(e) == h.ends(f)) return false;
    return true;
}

ElementSet image(ElementSet s, const std::vector<int>& sigma) {
    ElementSet out;
    for (int e : s) out = out.with(sigma[e]);
    return out;
}

// Circuit, independent, or neither.
enum class Status { Circuit, Independent, Neither };

Status status(const ExplicitMatroid& m, ElementSet x) {
    const int rk = m.rank(x);
    if (rk == x.size()) return Status::Independent;
    if (rk != x.size() - 1) return Status::Neither;
    for (int e : x)
        if (m.rank(x.without(e)) != x.size() - 1) return Status::Neither;
    return Status::Circuit;
}

// Relabels H so that edge j carries element j and takes the element names.
BiasedGraph make_witness(const Multigraph& h, const std::vector<int>& sigma, const std::vector<ElementSet>& balanced,
                         const ExplicitMatroid& m) {
    std::vector<Edge> edges(h.edge_count());
    for (int e = 0; e < h.edge_count(); ++e) edges[sigma[e]] = {m.names()[sigma[e]], h.edge(e).tail, h.edge(e).head};
    std::vector<ElementSet> b;
    for (auto c : balanced) b.push_back(image(c, sigma));
    return BiasedGraph(Multigraph(h.vertices(), std::move(edges)), std::move(b));
}

struct Problem {
    const ExplicitMatroid& m;
    MatroidKind kind;
    const DecideOptions& opt;
    std::optional<Clock::time_point> deadline;
    int r = 0;
    std::vector<int> element_order;
};

// Leaf test: forced bias, theta rule, then equality of independent sets.
bool leaf_matches(const Problem& pb, const Multigraph& h, const std::vector<int>& sigma,
                  const std::vector<ElementSet>& cycles, Counters& ct, std::optional<BiasedGraph>& witness) {
    ++ct.leaves;
    std::vector<ElementSet> balanced;
    for (auto c : cycles) {
        const Status s = status(pb.m, image(c, sigma));
        if (s == Status::Neither) {
            ++ct.fired[kCycleStatus];
            return false;
        }
        if (s == Status::Circuit) balanced.push_back(c);
    }
    if (!is_linear_subclass(h, balanced)) {
        ++ct.fired[kTheta];
        return false;
    }
    BiasedGraph bg(h, balanced);
    for (std::uint32_t bits = 0; bits < (1u << h.edge_count()); ++bits) {
        const ElementSet s(bits);
        if (is_independent(bg, pb.kind, s) != pb.m.is_independent(image(s, sigma))) {
            ++ct.fired[kFinalCompare];
            return false;
        }
    }
    witness = make_witness(h, sigma, balanced, pb.m);
    return true;
}

class BijectionSearch {
public:
    BijectionSearch(const Problem& pb, const Multigraph& h) : pb_(pb), h_(h) {
        const int n = h.vertex_count();
        // Vertices in BFS order from v0; edges by the later of their ends.
        std::vector<int> pos(n, -1), order;
        for (int s = 0; s < n; ++s) {
            if (pos[s] >= 0) continue;
            pos[s] = static_cast<int>(order.size());
            order.push_back(s);
            for (std::size_t i = order.size() - 1; i < order.size(); ++i)
                for (int e : h.star(order[i])) {
                    const int w = h.edge(e).other(order[i]);
                    if (pos[w] < 0) {
                        pos[w] = static_cast<int>(order.size());
                        order.push_back(w);
                    }
                }
        }
        for (int e = 0; e < h.edge_count(); ++e) edge_order_.push_back(e);
        auto key = [&](int e) {
            const int a = pos[h.edge(e).tail], b = pos[h.edge(e).head];
            return std::tuple(std::max(a, b), std::min(a, b), e);
        };
        std::sort(edge_order_.begin(), edge_order_.end(), [&](int x, int y) { return key(x) < key(y); });
        std::vector<int> at(h.edge_count());
        for (int p = 0; p < h.edge_count(); ++p) at[edge_order_[p]] = p;

        cycles_ = all_cycles(h);
        cycles_closing_.resize(h.edge_count());
        for (auto c : cycles_) {
            int last = 0;
            for (int e : c) last = std::max(last, at[e]);
            cycles_closing_[last].push_back(c);
        }
        stars_closing_.resize(h.edge_count());
        if (n >= 2)
            for (int v = 0; v < n; ++v) {
                int last = 0;
                for (int e : h.star(v)) last = std::max(last, at[e]);
                stars_closing_[last].push_back(h.star(v));
            }
        sigma_.assign(h.edge_count(), -1);
    }

    Outcome run() {
        Outcome out;
        out.counters.candidates = 1;
        status_ = Verdict::NotRepresentable;
        descend(0, ElementSet{}, ElementSet{}, out);
        out.verdict = status_;
        return out;
    }

private:
    bool component_ranks_ok(ElementSet mapped) const {
        const ExplicitMatroid& m = pb_.m;
        int sum = 0, forest = 0;
        bool any_full = false;
        for (const auto& c : components(h_, mapped)) {
            const int rk = m.rank(image(c.edges, sigma_));
            if (rk != c.vertex_count && rk != c.vertex_count - 1) return false;
            sum += rk;
            forest += c.vertex_count - 1;
            any_full = any_full || rk == c.vertex_count;
        }
        const int total = m.rank(image(mapped, sigma_));
        if (pb_.kind == MatroidKind::Frame) return total == sum;
        return total == forest + (any_full ? 1 : 0);
    }

    bool out_of_budget(Counters& ct) {
        if (ct.nodes > pb_.opt.max_nodes) return true;
        if (pb_.deadline && (ct.nodes & 255) == 0 && Clock::now() > *pb_.deadline) return true;
        return false;
    }

    void descend(int depth, ElementSet mapped, ElementSet used, Outcome& out) {
        Counters& ct = out.counters;
        if (depth == h_.edge_count()) {
            if (leaf_matches(pb_, h_, sigma_, cycles_, ct, out.witness)) status_ = Verdict::Representable;
            return;
        }
        const int e = edge_order_[depth];
        const ElementSet now = mapped.with(e);
        for (int x : pb_.element_order) {
            if (used.contains(x)) continue;
            ++ct.nodes;
            if (out_of_budget(ct)) {
                status_ = Verdict::BudgetExceeded;
                return;
            }
            sigma_[e] = x;
            bool ok = true;
            if (!component_ranks_ok(now)) {
                ++ct.fired[kComponentRank];
                ok = false;
            }
            for (std::size_t i = 0; ok && i < stars_closing_[depth].size(); ++i) {
                const ElementSet img = image(stars_closing_[depth][i], sigma_);
                if (pb_.m.rank(pb_.m.ground() - img) == pb_.r) {
                    ++ct.fired[kStarCocircuit];
                    ok = false;
                }
            }
            for (std::size_t i = 0; ok && i < cycles_closing_[depth].size(); ++i)
                if (status(pb_.m, image(cycles_closing_[depth][i], sigma_)) == Status::Neither) {
                    ++ct.fired[kCycleStatus];
                    ok = false;
                }
            if (ok) descend(depth + 1, now, used.with(x), out);
            if (status_ != Verdict::NotRepresentable) return;
        }
        sigma_[e] = -1;
    }

    const Problem& pb_;
    const Multigraph& h_;
    std::vector<int> edge_order_;
    std::vector<ElementSet> cycles_;
    std::vector<std::vector<ElementSet>> cycles_closing_;
    std::vector<std::vector<ElementSet>> stars_closing_;
    std::vector<int> sigma_;
    Verdict status_ = Verdict::NotRepresentable;
};

struct Candidate {
    Multigraph h;
    bool fixed = false;  // edge j already carries element j
};

Outcome run_candidate(const Problem& pb, const Candidate& c) {
    if (!c.fixed) return BijectionSearch(pb, c.h).run();
    Outcome out;
    out.counters.families = 1;
    std::vector<int> sigma(c.h.edge_count());
    std::iota(sigma.begin(), sigma.end(), 0);
    if (leaf_matches(pb, c.h, sigma, all_cycles(c.h), out.counters, out.witness)) out.verdict = Verdict::Representable;
    return out;
}

// Multisets of n cocircuits of size g, in nondecreasing index order, covering every element twice.
void vertical_families(const std::vector<ElementSet>& cocs, int n, int elements, std::vector<std::vector<int>>& out) {
    std::vector<int> last(elements, -1), count(elements, 0), chosen;
    for (int i = 0; i < static_cast<int>(cocs.size()); ++i)
        for (int e : cocs[i]) last[e] = i;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(chosen.size()) == n) {
            if (std::all_of(count.begin(), count.end(), [](int c) { return c == 2; })) out.push_back(chosen);
            return;
        }
        for (int e = 0; e < elements; ++e)
            if (count[e] < 2 && last[e] < start) return;
        for (int i = start; i < static_cast<int>(cocs.size()); ++i) {
            bool fits = true;
            for (int e : cocs[i]) fits = fits && count[e] < 2;
            if (!fits) continue;
            for (int e : cocs[i]) ++count[e];
            chosen.push_back(i);
            self(self, i);
            chosen.pop_back();
            for (int e : cocs[i]) --count[e];
        }
    };
    rec(rec, 0);
}

std::optional<Multigraph> graph_from_stars(const std::vector<ElementSet>& cocs, const std::vector<int>& family,
                                           const ExplicitMatroid& m) {
    const int n = static_cast<int>(family.size());
    std::vector<std::vector<int>> ends(m.size());
    for (int v = 0; v < n; ++v)
        for (int e : cocs[family[v]]) ends[e].push_back(v);
    std::vector<std::string> vs;
    for (int v = 0; v < n; ++v) vs.push_back("v" + std::to_string(v));
    std::vector<Edge> es;
    for (int e = 0; e < m.size(); ++e) es.push_back({m.names()[e], ends[e][0], ends[e][1]});
    Multigraph h(vs, es);
    if (components(h, h.all_edges()).size() != 1 || std::popcount(h.vertices_of(h.all_edges())) != n) return {};
    return h;
}

bool passes_filter(GraphFilter f, const Multigraph& h) {
    if (f == GraphFilter::Any) return true;
    return is_simple(h) == (f == GraphFilter::Simple);
}

Outcome run_all(const Problem& pb, const std::vector<Candidate>& cands) {
    const std::size_t count = cands.size();
    std::vector<Outcome> results(count);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> winner{std::numeric_limits<std::size_t>::max()};
    auto work = [&] {
        for (std::size_t i; (i = next++) < count;) {
            if (i > winner.load()) continue;
            results[i] = run_candidate(pb, cands[i]);
            if (results[i].verdict == Verdict::Representable) {
                std::size_t w = winner.load();
                while (i < w && !winner.compare_exchange_weak(w, i)) {
                }
            }
        }
    };
    const int threads = std::max(1, std::min<int>(pb.opt.threads, static_cast<int>(count)));
    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    // Ordered reduction: statistics up to and including the first success.
    Outcome merged;
    bool budget = false;
    for (std::size_t i = 0; i < count; ++i) {
        merged.counters.add(results[i].counters);
        if (results[i].verdict == Verdict::Representable) {
            merged.verdict = Verdict::Representable;
            merged.witness = results[i].witness;
            return merged;
        }
        budget = budget || results[i].verdict == Verdict::BudgetExceeded;
    }
    merged.verdict = budget ? Verdict::BudgetExceeded : Verdict::NotRepresentable;
    return merged;
}

// Decision for one matroid under the assumption that some representation is connected.
Outcome solve_connected(const ExplicitMatroid& m, MatroidKind kind, const DecideOptions& opt,
                        std::optional<Clock::time_point> deadline, std::vector<std::string>& notes) {
    Outcome out;
    const int size = m.size();
    if (size == 0) {
        out.verdict = Verdict::Representable;
        out.witness = BiasedGraph(Multigraph({"v0"}, {}), {});
        return out;
    }
    Problem pb{m, kind, opt, deadline, m.full_rank(), {}};
    const auto cocs_all = cocircuits(m);
    int g = 0;
    for (auto c : cocs_all) g = g == 0 ? c.size() : std::min(g, c.size());
    // The cogirth behind the star rules, re-checked by a bounded scan.
    if (g > 1 && !cocircuits(m, g - 1).empty()) throw InternalError("cogirth check failed");
    std::vector<ElementSet> gcocs;
    for (auto c : cocs_all)
        if (c.size() == g) gcocs.push_back(c);
    std::vector<int> part(size, 0);
    for (auto c : gcocs)
        for (int e : c) ++part[e];
    pb.element_order.resize(size);
    std::iota(pb.element_order.begin(), pb.element_order.end(), 0);
    std::stable_sort(pb.element_order.begin(), pb.element_order.end(), [&](int a, int b) { return part[a] > part[b]; });

    Counters& ct = out.counters;
    ct.used[kVertexCount] = true;
    std::vector<int> vertex_counts{std::max(1, pb.r)};
    if (pb.r + 1 != vertex_counts[0]) vertex_counts.push_back(pb.r + 1);
    std::vector<Candidate> cands;
    for (int n : vertex_counts) {
        const bool stars = n >= 2 && g > 0;
        if (stars) ct.used[kMinStar] = true;
        if (stars && n * g > 2 * size) {
            ct.used[kDegreeSum] = true;
            ++ct.fired[kDegreeSum];
            notes.push_back(std::to_string(n) + " vertices: " + std::to_string(n) + " stars of size >= " +
                            std::to_string(g) + " need more than " + std::to_string(2 * size) + " edge ends");
            continue;
        }
        if (stars && n * g == 2 * size && opt.strategy != Strategy::Enumerate) {
            ct.used[kRegularVertical] = true;
            std::vector<std::vector<int>> families;
            vertical_families(gcocs, n, size, families);
            notes.push_back(std::to_string(n) + " vertices: " + std::to_string(families.size()) +
                            " families of vertex stars among " + std::to_string(gcocs.size()) + " " +
                            std::to_string(g) + "-element cocircuits");
            for (const auto& fam : families) {
                auto h = graph_from_stars(gcocs, fam, m);
                if (!h) {
                    ++ct.fired[kRegularVertical];
                    continue;
                }
                if (!passes_filter(opt.filter, *h)) {
                    ct.used[kGraphFilter] = true;
                    ++ct.fired[kGraphFilter];
                    continue;
                }
                cands.push_back({std::move(*h), true});
            }
            continue;
        }
        GraphSpec spec{size, n, stars ? g : 0, true, true, true};
        auto graphs = enumerate_graphs(spec);
        std::size_t kept = 0;
        for (const auto& h : *graphs) {
            if (!passes_filter(opt.filter, h)) {
                ct.used[kGraphFilter] = true;
                ++ct.fired[kGraphFilter];
                continue;
            }
            ++kept;
            cands.push_back({h, false});
        }
        notes.push_back(std::to_string(n) + " vertices: " + std::to_string(kept) + " candidate graphs");
        for (int rule : {kComponentRank, kStarCocircuit, kCycleStatus}) ct.used[rule] = true;
    }
    ct.used[kTheta] = ct.used[kFinalCompare] = ct.used[kCycleStatus] = true;
    Outcome res = run_all(pb, cands);
    res.counters.add(ct);
    return res;
}

std::string justification(int rule, const ExplicitMatroid& m, MatroidKind kind, int g) {
    const std::string r = std::to_string(m.full_rank()), n = std::to_string(m.size()), gs = std::to_string(g);
    switch (rule) {
        case kVertexCount:
            return "rank(M) = " + r + "; a connected representation has rank(M) vertices (some cycle unbalanced) or rank(M)+1 (balanced)";
        case kMinStar:
            return "cogirth(M) = " + gs + " (no smaller cocircuit); deleting a star drops the rank of a connected representation on >= 2 vertices, so every star contains a cocircuit and has >= " + gs + " edges";
        case kDegreeSum:
            return "n stars of >= " + gs + " edges need n*" + gs + " <= 2*" + n + " edge ends";
        case kRegularVertical:
            return "n*" + gs + " = 2*" + n + ": no loops and every star is exactly a " + gs + "-element cocircuit, each element in two stars; the stars determine the graph";
        case kGraphFilter: return "candidate graphs outside the requested class are skipped";
        case kComponentRank:
            return kind == MatroidKind::Frame
                       ? "each component K of a partial image has rank |V(K)| or |V(K)|-1, and the ranks add"
                       : "each component K has rank |V(K)| or |V(K)|-1; the total is |V|-c plus one if some component is unbalanced";
        case kStarCocircuit: return "the image of a complete star contains a cocircuit";
        case kCycleStatus: return "a balanced cycle is a circuit and an unbalanced cycle is independent";
        case kTheta: return "the forced balanced cycles must satisfy the theta rule";
        case kFinalCompare: return "the matroid of the graph with its forced bias must equal M";
    }
    return {};
}

int cogirth(const ExplicitMatroid& m) {
    int g = 0;
    for (auto c : cocircuits(m)) g = g == 0 ? c.size() : std::min(g, c.size());
    return g;
}

}  // namespace

Certificate decide(const ExplicitMatroid& m, MatroidKind kind, const DecideOptions& opt) {
    if (m.size() > ExplicitMatroid::kExhaustiveCheckLimit) throw InputError("decision is limited to 16 elements");
    Certificate cert;
    cert.kind = kind;
    cert.strategy = opt.strategy;
    cert.filter = opt.filter;
    cert.model = "ordinary multigraphs with loops, no half-edges; " +
                 std::string(kind == MatroidKind::Frame
                                 ? "each connected component of M decided separately on a connected graph"
                                 : "connected graphs (vertices in different components can be identified)");
    std::optional<Clock::time_point> deadline;
    if (opt.max_seconds > 0)
        deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(opt.max_seconds));

    std::vector<ElementSet> parts{m.ground()};
    if (kind == MatroidKind::Frame && m.size() > 0) parts = connected_components(m);
    if (parts.size() > 1) cert.notes.push_back("M has " + std::to_string(parts.size()) + " connected components");

    Counters total;
    Verdict verdict = Verdict::Representable;
    std::vector<std::string> vs;
    std::vector<Edge> es(m.size());
    std::vector<ElementSet> balanced;
    for (auto part : parts) {
        const ExplicitMatroid sub = parts.size() == 1 ? m : restrict_to(m, part);
        Outcome o = solve_connected(sub, kind, opt, deadline, cert.notes);
        total.add(o.counters);
        if (o.verdict != Verdict::Representable) {
            // A non-representable component settles it; a budget failure only if nothing else does.
            if (o.verdict == Verdict::NotRepresentable) verdict = Verdict::NotRepresentable;
            else if (verdict == Verdict::Representable) verdict = Verdict::BudgetExceeded;
            if (verdict == Verdict::NotRepresentable) break;
            continue;
        }
        // Glue the component witness into the global one.
        const Multigraph& w = o.witness->graph();
        const int offset = static_cast<int>(vs.size());
        for (int v = 0; v < w.vertex_count(); ++v) vs.push_back("v" + std::to_string(offset + v));
        std::vector<int> to_global;
        for (int e : part) to_global.push_back(e);
        for (int e = 0; e < w.edge_count(); ++e)
            es[to_global[e]] = {m.names()[to_global[e]], w.edge(e).tail + offset, w.edge(e).head + offset};
        for (auto c : o.witness->balanced()) {
            ElementSet gc;
            for (int e : c) gc = gc.with(to_global[e]);
            balanced.push_back(gc);
        }
    }
    cert.verdict = verdict;
    if (verdict == Verdict::Representable) cert.witness = BiasedGraph(Multigraph(vs, es), balanced);
    cert.candidate_graphs = total.candidates;
    cert.vertical_families = total.families;
    cert.bijection_nodes = total.nodes;
    cert.leaves = total.leaves;
    const int g = cogirth(m);
    for (int rule = 0; rule < kRuleCount; ++rule)
        if (total.used[rule]) cert.rules.push_back({kRuleNames[rule], justification(rule, m, kind, g), total.fired[rule]});
    return cert;
}

Certificate decide_frame(const ExplicitMatroid& m, const DecideOptions& opt) { return decide(m, MatroidKind::Frame, opt); }
Certificate decide_lift(const ExplicitMatroid& m, const DecideOptions& opt) { return decide(m, MatroidKind::Lift, opt); }

std::optional<std::vector<ElementSet>> forced_bias(const Multigraph& h, const std::vector<int>& bijection,
                                                   const ExplicitMatroid& m) {
    if (static_cast<int>(bijection.size()) != h.edge_count() || h.edge_count() != m.size())
        throw InputError("the bijection must be total");
    std::vector<ElementSet> balanced;
    for (auto c : all_cycles(h)) {
        const Status s = status(m, image(c, bijection));
        if (s == Status::Neither) return std::nullopt;
        if (s == Status::Circuit) balanced.push_back(c);
    }
    if (!is_linear_subclass(h, balanced)) return std::nullopt;
    return balanced;
}

bool verify_witness(const ExplicitMatroid& m, MatroidKind kind, const BiasedGraph& witness, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const Multigraph& h = witness.graph();
    if (h.edge_count() != m.size()) return fail("edge count differs from the ground set");
    std::vector<int> elem(h.edge_count());
    ElementSet hit;
    for (int e = 0; e < h.edge_count(); ++e) {
        elem[e] = m.index_of(h.edge(e).name);
        if (hit.contains(elem[e])) return fail("edge names repeat an element");
        hit = hit.with(elem[e]);
    }
    const int nv = h.vertex_count();
    // Each balanced set must be a cycle: every touched vertex has degree two, and it is connected.
    for (auto c : witness.balanced()) {
        std::vector<int> deg(nv, 0);
        for (int e : c) {
            deg[h.edge(e).tail]++;
            deg[h.edge(e).head]++;
        }
        for (int d : deg)
            if (d != 0 && d != 2) return fail("balanced set " + h.format(c) + " is not a cycle");
    }
    if (!is_linear_subclass(h, witness.balanced())) return fail("balanced cycles break the theta rule");
    // Independence straight from the definitions, with a union-find per subset.
    for (std::uint32_t bits = 0; bits < (1u << h.edge_count()); ++bits) {
        const ElementSet s(bits);
        std::vector<int> parent(nv), edges(nv, 0), verts(nv, 0);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::vector<char> touched(nv, 0);
        for (int e : s) {
            touched[h.edge(e).tail] = touched[h.edge(e).head] = 1;
            parent[find(h.edge(e).tail)] = find(h.edge(e).head);
        }
        int comps = 0, vcount = 0;
        for (int v = 0; v < nv; ++v)
            if (touched[v]) {
                ++verts[find(v)];
                ++vcount;
                if (find(v) == v) ++comps;
            }
        for (int e : s) ++edges[find(h.edge(e).tail)];
        bool balanced_inside = false;
        for (auto c : witness.balanced()) balanced_inside = balanced_inside || c.subset_of(s);
        bool indep = !balanced_inside;
        if (kind == MatroidKind::Frame) {
            for (int v = 0; v < nv; ++v) indep = indep && edges[v] <= verts[v];
        } else {
            indep = indep && s.size() - vcount + comps <= 1;
        }
        ElementSet img;
        for (int e : s) img = img.with(elem[e]);
        if (indep != m.is_independent(img)) return fail("independence differs on " + h.format(s));
    }
    return true;
}

}  // namespace framelift
