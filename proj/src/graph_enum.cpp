#include "framelift/graph_enum.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "framelift/errors.hpp"

namespace framelift {

namespace {

// Symmetric multiplicity matrix; the diagonal counts loops.
struct Adj {
    int n = 0;
    std::vector<std::uint8_t> a;
    std::uint8_t at(int i, int j) const { return a[i * n + j]; }
    void add(int i, int j) {
        a[i * n + j]++;
        if (i != j) a[j * n + i]++;
    }
};

using Partition = std::vector<std::vector<int>>;

// Split cells by the number of edges into each cell until stable. Sub-cells are ordered by
// their signatures, so the result does not depend on vertex labels.
void refine(const Adj& g, Partition& cells) {
    for (bool changed = true; changed;) {
        changed = false;
        Partition next;
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::vector<std::pair<std::vector<int>, int>> keyed;
            for (int v : cell) {
                std::vector<int> sig;
                sig.push_back(g.at(v, v));
                for (const auto& c : cells) {
                    int s = 0;
                    for (int w : c) s += w == v ? 0 : g.at(v, w);
                    sig.push_back(s);
                }
                keyed.emplace_back(std::move(sig), v);
            }
            std::stable_sort(keyed.begin(), keyed.end(),
                             [](const auto& x, const auto& y) { return x.first < y.first; });
            for (std::size_t i = 0; i < keyed.size();) {
                std::size_t j = i;
                std::vector<int> part;
                while (j < keyed.size() && keyed[j].first == keyed[i].first) part.push_back(keyed[j++].second);
                if (part.size() != cell.size()) changed = true;
                std::sort(part.begin(), part.end());
                next.push_back(std::move(part));
                i = j;
            }
        }
        cells = std::move(next);
    }
}

bool twins(const Adj& g, int u, int w) {
    if (g.at(u, u) != g.at(w, w)) return false;
    for (int x = 0; x < g.n; ++x)
        if (x != u && x != w && g.at(u, x) != g.at(w, x)) return false;
    return true;
}

void search(const Adj& g, Partition cells, std::string& best) {
    refine(g, cells);
    auto open = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (open == cells.end()) {
        std::string code;
        code.reserve(g.n * (g.n + 1) / 2);
        for (int i = 0; i < g.n; ++i)
            for (int j = i; j < g.n; ++j) code.push_back(static_cast<char>('0' + g.at(cells[i][0], cells[j][0])));
        if (code > best) best = std::move(code);
        return;
    }
    const std::size_t at = open - cells.begin();
    std::vector<int> tried;
    for (int v : cells[at]) {
        // Swapping twins is an automorphism fixing the partition, so one of them suffices.
        if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(g, u, v); })) continue;
        tried.push_back(v);
        Partition next;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i != at) {
                next.push_back(cells[i]);
                continue;
            }
            next.push_back({v});
            std::vector<int> rest;
            for (int w : cells[i])
                if (w != v) rest.push_back(w);
            next.push_back(std::move(rest));
        }
        search(g, std::move(next), best);
    }
}

std::string canonical(const Adj& g) {
    // Start from (loops, |delta|) classes in increasing order.
    std::vector<std::pair<std::pair<int, int>, int>> keyed;
    for (int v = 0; v < g.n; ++v) {
        int deg = 0;
        for (int w = 0; w < g.n; ++w) deg += g.at(v, w);
        keyed.push_back({{g.at(v, v), deg}, v});
    }
    std::sort(keyed.begin(), keyed.end());
    Partition cells;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) cells.emplace_back();
        cells.back().push_back(keyed[i].second);
    }
    std::string best;
    search(g, std::move(cells), best);
    return best;
}

Adj from_code(int n, const std::string& code) {
    Adj g{n, std::vector<std::uint8_t>(n * n, 0)};
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const int mult = code[k++] - '0';
            g.a[i * n + j] = g.a[j * n + i] = static_cast<std::uint8_t>(mult);
        }
    return g;
}

Multigraph to_multigraph(const Adj& g) {
    std::vector<std::string> vs;
    for (int i = 0; i < g.n; ++i) vs.push_back("v" + std::to_string(i));
    std::vector<Edge> es;
    for (int i = 0; i < g.n; ++i)
        for (int j = i; j < g.n; ++j)
            for (int t = 0; t < g.at(i, j); ++t) es.push_back({"x" + std::to_string(es.size()), i, j});
    return Multigraph(vs, es);
}

int star_size(const Adj& g, int v) {
    int s = 0;
    for (int w = 0; w < g.n; ++w) s += g.at(v, w);
    return s;
}

int component_count(const Adj& g) {
    std::vector<int> p(g.n);
    std::iota(p.begin(), p.end(), 0);
    auto find = [&](int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    };
    int c = g.n;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.at(i, j) && find(i) != find(j)) {
                p[find(i)] = find(j);
                --c;
            }
    return c;
}

std::vector<Multigraph> generate(const GraphSpec& spec) {
    const int n = spec.vertices;
    std::vector<std::string> level{canonical(Adj{n, std::vector<std::uint8_t>(n * n, 0)})};
    for (int placed = 0; placed < spec.edges; ++placed) {
        const int remaining = spec.edges - placed - 1;  // after this edge
        std::unordered_set<std::string> seen;
        std::vector<std::string> next;
        for (const auto& code : level) {
            const Adj base = from_code(n, code);
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    if (i == j && !spec.allow_loops) continue;
                    if (i != j && !spec.allow_parallel && base.at(i, j)) continue;
                    Adj g = base;
                    g.add(i, j);
                    // Each further edge lowers the total star deficit by at most two.
                    int deficit = 0;
                    for (int v = 0; v < n; ++v) deficit += std::max(0, spec.min_degree - star_size(g, v));
                    if (deficit > 2 * remaining) continue;
                    if (spec.connected && component_count(g) - 1 > remaining) continue;
                    std::string c = canonical(g);
                    if (seen.insert(c).second) next.push_back(std::move(c));
                }
        }
        std::sort(next.begin(), next.end(), std::greater<>());
        level = std::move(next);
    }
    std::vector<Multigraph> out;
    for (const auto& code : level) {
        const Adj g = from_code(n, code);
        bool ok = true;
        for (int v = 0; v < n; ++v) ok = ok && star_size(g, v) >= spec.min_degree;
        if (spec.connected && component_count(g) != 1) ok = false;
        if (ok) out.push_back(to_multigraph(g));
    }
    return out;
}

}  // namespace

std::string canonical_form(const Multigraph& g) {
    Adj a{g.vertex_count(), std::vector<std::uint8_t>(g.vertex_count() * g.vertex_count(), 0)};
    for (const auto& e : g.edges()) a.add(e.tail, e.head);
    return std::to_string(g.vertex_count()) + ":" + canonical(a);
}

std::shared_ptr<const std::vector<Multigraph>> enumerate_graphs(const GraphSpec& spec) {
    if (spec.vertices < 1 || spec.vertices > 16) throw InputError("graph enumeration supports 1 to 16 vertices");
    if (spec.edges < 0 || spec.edges > kMaxElements) throw InputError("graph enumeration supports up to 32 edges");
    static std::mutex mu;
    static std::map<GraphSpec, std::shared_ptr<const std::vector<Multigraph>>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(spec); it != cache.end()) return it->second;
    }
    auto result = std::make_shared<const std::vector<Multigraph>>(generate(spec));
    std::lock_guard lock(mu);
    return cache.emplace(spec, result).first->second;
}

}  // namespace framelift
