#include "framelift/matroid.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "framelift/errors.hpp"
#include "framelift/matroid_query.hpp"

namespace framelift {

int RankOracle::index_of(std::string_view name) const {
    const auto& ns = names();
    for (std::size_t i = 0; i < ns.size(); ++i)
        if (ns[i] == name) return static_cast<int>(i);
    throw InputError("unknown element '" + std::string(name) + "'");
}

ElementSet RankOracle::set_of(const std::vector<std::string>& names) const {
    ElementSet s;
    for (const auto& n : names) s = s.with(index_of(n));
    return s;
}

std::string RankOracle::format(ElementSet s) const {
    std::string out = "{";
    bool first = true;
    for (int i : s) {
        if (!first) out += ",";
        out += names()[i];
        first = false;
    }
    return out + "}";
}

ExplicitMatroid::ExplicitMatroid(std::vector<std::string> names, std::vector<ElementSet> bases)
    : names_(std::move(names)), bases_(std::move(bases)) {
    const int n = size();
    if (n > kMaxElements)
        throw InputError("matroids are limited to " + std::to_string(kMaxElements) + " elements, got " +
                         std::to_string(n));
    {
        std::set<std::string> seen;
        for (const auto& nm : names_) {
            if (nm.empty()) throw InputError("empty element name");
            if (!seen.insert(nm).second) throw InputError("duplicate element name '" + nm + "'");
        }
    }
    if (bases_.empty()) throw InputError("a matroid needs at least one basis");
    std::sort(bases_.begin(), bases_.end());
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
    rank_ = bases_.front().size();
    const ElementSet g = ground();
    for (auto b : bases_) {
        if (!b.subset_of(g)) throw InputError("basis refers to an element outside the ground set");
        if (b.size() != rank_) throw InputError("bases have different sizes");
    }
    build_tables();
    validate_exchange();
}

void ExplicitMatroid::build_tables() {
    const int n = size();
    if (n > kRankTableLimit) return;
    const std::size_t count = std::size_t{1} << n;
    std::vector<std::uint8_t> indep(count, 0);
    for (auto b : bases_) indep[b.bits()] = 1;
    // Downward closure of the basis family.
    for (std::size_t s = count; s-- > 0;) {
        if (indep[s]) continue;
        for (int x = 0; x < n; ++x) {
            const std::size_t bit = std::size_t{1} << x;
            if (!(s & bit) && indep[s | bit]) {
                indep[s] = 1;
                break;
            }
        }
    }
    auto table = std::make_shared<std::vector<std::uint8_t>>(count, 0);
    auto& r = *table;
    for (std::size_t s = 0; s < count; ++s) {
        if (indep[s]) {
            r[s] = static_cast<std::uint8_t>(std::popcount(static_cast<std::uint32_t>(s)));
            continue;
        }
        std::uint8_t best = 0;
        for (std::size_t rest = s; rest; rest &= rest - 1) {
            const std::size_t bit = rest & (~rest + 1);
            best = std::max(best, r[s & ~bit]);
        }
        r[s] = best;
    }
    rank_table_ = std::move(table);
}

void ExplicitMatroid::validate_exchange() const {
    const int n = size();
    if (rank_table_ && n <= kExhaustiveCheckLimit) {
        // The downward closure of the family is a matroid iff its rank
        // function is locally submodular.
        const auto& r = *rank_table_;
        const std::uint32_t count = std::uint32_t{1} << n;
        for (std::uint32_t s = 0; s < count; ++s) {
            for (int x = 0; x < n; ++x) {
                const std::uint32_t bx = std::uint32_t{1} << x;
                if (s & bx) continue;
                for (int y = x + 1; y < n; ++y) {
                    const std::uint32_t by = std::uint32_t{1} << y;
                    if (s & by) continue;
                    if (r[s | bx] + r[s | by] < r[s | bx | by] + r[s]) {
                        throw InputError("basis family violates the exchange axiom near " +
                                         format(ElementSet(s | bx | by)));
                    }
                }
            }
        }
        return;
    }
    // Sampled exchange check for larger ground sets.
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, bases_.size() - 1);
    const int samples = 2000;
    for (int t = 0; t < samples; ++t) {
        const ElementSet b1 = bases_[pick(rng)];
        const ElementSet b2 = bases_[pick(rng)];
        for (int x : b1 - b2) {
            bool ok = false;
            for (int y : b2 - b1) {
                if (is_basis(b1.without(x).with(y))) {
                    ok = true;
                    break;
                }
            }
            if (!ok) throw InputError("basis family violates the exchange axiom at " + format(b1));
        }
    }
}

bool ExplicitMatroid::is_basis(ElementSet s) const {
    return std::binary_search(bases_.begin(), bases_.end(), s);
}

int ExplicitMatroid::rank(ElementSet s) const {
    if (rank_table_) return (*rank_table_)[s.bits()];
    int best = 0;
    for (auto b : bases_) {
        best = std::max(best, (b & s).size());
        if (best == rank_) break;
    }
    return best;
}

namespace {

std::vector<std::string> numbered_names(int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
    return out;
}

void check_subset(const RankOracle& m, ElementSet s) {
    if (!s.subset_of(m.ground())) throw InputError("set refers to an element outside the ground set");
}

// Positions of `keep` in order; used to compact a subset to a smaller ground set.
ElementSet compact(ElementSet s, const std::vector<int>& positions) {
    ElementSet out;
    for (std::size_t i = 0; i < positions.size(); ++i)
        if (s.contains(positions[i])) out = out.with(static_cast<int>(i));
    return out;
}

}  // namespace

ExplicitMatroid uniform_matroid(int r, int n) {
    if (r < 0 || r > n) throw InputError("uniform matroid needs 0 <= r <= n");
    std::vector<ElementSet> bases;
    for_each_subset_of_size(ElementSet::full(n), r, [&](ElementSet s) { bases.push_back(s); });
    return ExplicitMatroid(numbered_names(n), std::move(bases));
}

ExplicitMatroid from_circuits(std::vector<std::string> names, int rank, const std::vector<ElementSet>& circs) {
    const int n = static_cast<int>(names.size());
    if (n > kMaxElements) throw InputError("too many elements");
    std::vector<ElementSet> bases;
    for_each_subset_of_size(ElementSet::full(n), rank, [&](ElementSet s) {
        for (auto c : circs)
            if (c.subset_of(s)) return;
        bases.push_back(s);
    });
    if (bases.empty()) throw InputError("circuit family leaves no basis of the stated rank");
    ExplicitMatroid m(std::move(names), std::move(bases));
    auto got = circuits(m);
    auto want = circs;
    sort_family(want);
    want.erase(std::unique(want.begin(), want.end()), want.end());
    if (got != want) throw InputError("circuit family is not the circuit family of a rank-" + std::to_string(rank) + " matroid");
    return m;
}

ExplicitMatroid direct_sum(const ExplicitMatroid& a, const ExplicitMatroid& b) {
    std::vector<std::string> names = a.names();
    names.insert(names.end(), b.names().begin(), b.names().end());
    const int shift = a.size();
    std::vector<ElementSet> bases;
    for (auto x : a.bases())
        for (auto y : b.bases()) bases.push_back(x | ElementSet(y.bits() << shift));
    return ExplicitMatroid(std::move(names), std::move(bases));
}

ExplicitMatroid materialize(const RankOracle& o) {
    const int r = o.full_rank();
    std::vector<ElementSet> bases;
    for_each_subset_of_size(o.ground(), r, [&](ElementSet s) {
        if (o.rank(s) == r) bases.push_back(s);
    });
    return ExplicitMatroid(o.names(), std::move(bases));
}

int rank(const ExplicitMatroid& m, ElementSet s) {
    check_subset(m, s);
    return m.rank(s);
}

void sort_family(std::vector<ElementSet>& family) {
    std::sort(family.begin(), family.end(), [](ElementSet a, ElementSet b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.bits() < b.bits();
    });
}

std::vector<ElementSet> circuits(const ExplicitMatroid& m) {
    const int n = m.size();
    if (n > ExplicitMatroid::kRankTableLimit)
        throw InputError("full circuit enumeration is limited to " +
                         std::to_string(ExplicitMatroid::kRankTableLimit) + " elements");
    std::vector<ElementSet> out;
    const std::uint32_t count = std::uint32_t{1} << n;
    for (std::uint32_t bits = 1; bits < count; ++bits) {
        const ElementSet s(bits);
        const int k = s.size();
        if (m.rank(s) != k - 1) continue;
        bool minimal = true;
        for (int x : s) {
            if (m.rank(s.without(x)) != k - 1) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(s);
    }
    sort_family(out);
    return out;
}

ExplicitMatroid dual(const ExplicitMatroid& m) {
    std::vector<ElementSet> bases;
    bases.reserve(m.bases().size());
    for (auto b : m.bases()) bases.push_back(m.ground() - b);
    return ExplicitMatroid(m.names(), std::move(bases));
}

std::vector<ElementSet> cocircuits(const ExplicitMatroid& m, std::optional<int> max_size) {
    if (max_size) return bounded_cocircuits(m, *max_size);
    if (m.size() > ExplicitMatroid::kExhaustiveCheckLimit)
        throw InputError("full cocircuit enumeration is limited to 16 elements; pass a size bound");
    return circuits(dual(m));
}

ExplicitMatroid minor(const ExplicitMatroid& m, ElementSet del, ElementSet con) {
    check_subset(m, del);
    check_subset(m, con);
    if (del.intersects(con)) throw InputError("deletion and contraction sets overlap: " + m.format(del & con));
    // Contract a lexicographically-least maximal independent subset of `con`
    // and delete the rest of it.
    ElementSet indep;
    for (int x : con)
        if (m.rank(indep.with(x)) == indep.size() + 1) indep = indep.with(x);
    const ElementSet removed = del | con;
    const ElementSet keep = m.ground() - removed;

    std::vector<ElementSet> candidates;
    for (auto b : m.bases())
        if (indep.subset_of(b)) candidates.push_back(b & keep);
    int best = 0;
    for (auto c : candidates) best = std::max(best, c.size());
    const std::vector<int> positions = keep.to_vector();
    std::vector<ElementSet> bases;
    for (auto c : candidates)
        if (c.size() == best) bases.push_back(compact(c, positions));
    std::vector<std::string> names;
    for (int p : positions) names.push_back(m.names()[p]);
    return ExplicitMatroid(std::move(names), std::move(bases));
}

ExplicitMatroid restrict_to(const ExplicitMatroid& m, ElementSet keep) {
    return minor(m, m.ground() - keep, ElementSet{});
}

std::vector<ElementSet> non_separating_cocircuits(const ExplicitMatroid& m) {
    std::vector<ElementSet> out;
    for (auto c : cocircuits(m)) {
        if (is_connected(minor(m, c, ElementSet{}))) out.push_back(c);
    }
    return out;
}

std::vector<ElementSet> circuit_hyperplanes(const ExplicitMatroid& m) {
    std::vector<ElementSet> out;
    const int r = m.full_rank();
    for (auto c : circuits(m)) {
        if (c.size() == r && is_hyperplane(m, c)) out.push_back(c);
    }
    return out;
}

std::vector<ElementSet> free_bases(const ExplicitMatroid& m) {
    std::vector<ElementSet> out;
    for (auto b : m.bases()) {
        if (free_basis_failures(m, b).empty()) out.push_back(b);
    }
    return out;
}

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
    return out;
}

}  // namespace

ExplicitMatroid relax(const ExplicitMatroid& m, ElementSet c) {
    check_subset(m, c);
    auto failures = circuit_hyperplane_failures(m, c);
    if (!failures.empty())
        throw PreconditionError("cannot relax " + m.format(c) + ": " + join(failures));
    std::vector<ElementSet> bases = m.bases();
    bases.push_back(c);
    return ExplicitMatroid(m.names(), std::move(bases));
}

ExplicitMatroid tighten(const ExplicitMatroid& m, ElementSet b) {
    check_subset(m, b);
    auto failures = free_basis_failures(m, b);
    if (!failures.empty())
        throw PreconditionError("cannot tighten " + m.format(b) + ": " + join(failures));
    if (m.bases().size() == 1)
        throw PreconditionError("cannot tighten " + m.format(b) + ": it is the only basis");
    std::vector<ElementSet> bases;
    for (auto x : m.bases())
        if (x != b) bases.push_back(x);
    return ExplicitMatroid(m.names(), std::move(bases));
}

bool equal(const ExplicitMatroid& a, const ExplicitMatroid& b) {
    if (a.size() != b.size()) throw InputError("ground sets differ in size");
    std::unordered_map<std::string, int> pos;
    for (int i = 0; i < a.size(); ++i) pos[a.names()[i]] = i;
    std::vector<int> remap(b.size());
    for (int i = 0; i < b.size(); ++i) {
        auto it = pos.find(b.names()[i]);
        if (it == pos.end()) throw InputError("ground sets differ: '" + b.names()[i] + "'");
        remap[i] = it->second;
    }
    if (a.bases().size() != b.bases().size()) return false;
    std::vector<ElementSet> mapped;
    mapped.reserve(b.bases().size());
    for (auto x : b.bases()) {
        ElementSet y;
        for (int i : x) y = y.with(remap[i]);
        mapped.push_back(y);
    }
    std::sort(mapped.begin(), mapped.end());
    return mapped == a.bases();
}

}  // namespace framelift
