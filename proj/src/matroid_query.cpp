#include "framelift/matroid_query.hpp"

#include <algorithm>
#include <numeric>

#include "framelift/errors.hpp"

namespace framelift {

bool is_independent(const RankOracle& m, ElementSet s) { return m.rank(s) == s.size(); }

bool is_basis(const RankOracle& m, ElementSet s) {
    return s.size() == m.full_rank() && is_independent(m, s);
}

bool is_circuit(const RankOracle& m, ElementSet s) {
    if (s.empty() || m.rank(s) != s.size() - 1) return false;
    for (int x : s)
        if (!is_independent(m, s.without(x))) return false;
    return true;
}

bool is_cocircuit(const RankOracle& m, ElementSet s) {
    if (s.empty()) return false;
    const int r = m.full_rank();
    const ElementSet rest = m.ground() - s;
    if (m.rank(rest) >= r) return false;
    for (int x : s)
        if (m.rank(rest.with(x)) != r) return false;
    return true;
}

bool is_hyperplane(const RankOracle& m, ElementSet s) {
    const int r = m.full_rank();
    if (m.rank(s) != r - 1) return false;
    for (int x : m.ground() - s)
        if (m.rank(s.with(x)) != r) return false;
    return true;
}

ElementSet closure(const RankOracle& m, ElementSet s) {
    const int rs = m.rank(s);
    ElementSet out = s;
    for (int x : m.ground() - s)
        if (m.rank(s.with(x)) == rs) out = out.with(x);
    return out;
}

std::vector<std::string> circuit_hyperplane_failures(const RankOracle& m, ElementSet c) {
    std::vector<std::string> out;
    if (!is_circuit(m, c)) out.push_back("not a circuit");
    if (!is_hyperplane(m, c)) out.push_back("not a hyperplane");
    return out;
}

std::vector<std::string> free_basis_failures(const RankOracle& m, ElementSet b) {
    if (!is_basis(m, b)) return {"not a basis"};
    std::vector<std::string> out;
    for (int e : m.ground() - b) {
        // B + e is a circuit iff B - x + e is a basis for every x in B.
        for (int x : b) {
            if (!is_independent(m, b.without(x).with(e))) {
                out.push_back("B + " + m.names()[e] + " is not a circuit");
                break;
            }
        }
    }
    return out;
}

std::vector<ElementSet> bounded_cocircuits(const RankOracle& m, int max_size) {
    std::vector<ElementSet> out;
    for (int k = 1; k <= std::min(max_size, m.size()); ++k) {
        for_each_subset_of_size(m.ground(), k, [&](ElementSet s) {
            if (is_cocircuit(m, s)) out.push_back(s);
        });
    }
    sort_family(out);
    return out;
}

std::vector<ElementSet> bounded_circuits(const RankOracle& m, int max_size) {
    std::vector<ElementSet> out;
    for (int k = 1; k <= std::min(max_size, m.size()); ++k) {
        for_each_subset_of_size(m.ground(), k, [&](ElementSet s) {
            if (is_circuit(m, s)) out.push_back(s);
        });
    }
    sort_family(out);
    return out;
}

namespace {

struct DisjointSets {
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    std::vector<int> parent;
};

}  // namespace

std::vector<ElementSet> connected_components(const RankOracle& m) {
    const int n = m.size();
    ElementSet basis;
    for (int x = 0; x < n; ++x)
        if (m.rank(basis.with(x)) == basis.size() + 1) basis = basis.with(x);
    const int r = basis.size();
    DisjointSets ds(n);
    for (int e : m.ground() - basis) {
        if (m.rank(ElementSet::single(e)) == 0) continue;  // loop
        for (int b : basis)
            if (m.rank(basis.without(b).with(e)) == r) ds.unite(e, b);
    }
    std::vector<ElementSet> comps(n);
    for (int x = 0; x < n; ++x) comps[ds.find(x)] = comps[ds.find(x)].with(x);
    std::vector<ElementSet> out;
    for (auto c : comps)
        if (!c.empty()) out.push_back(c);
    std::sort(out.begin(), out.end(), [](ElementSet a, ElementSet b) { return a.min() < b.min(); });
    return out;
}

bool is_connected(const RankOracle& m) { return connected_components(m).size() <= 1; }

bool is_series_pair(const RankOracle& m, int a, int b) {
    if (a == b) return false;
    return is_cocircuit(m, ElementSet::single(a).with(b));
}

MinorView::MinorView(OraclePtr base, ElementSet del, ElementSet con)
    : base_(std::move(base)), con_(con) {
    if (!del.subset_of(base_->ground()) || !con.subset_of(base_->ground()))
        throw InputError("minor sets refer to elements outside the ground set");
    if (del.intersects(con)) throw InputError("deletion and contraction sets overlap");
    con_rank_ = base_->rank(con_);
    for (int x : base_->ground() - del - con) {
        map_.push_back(x);
        names_.push_back(base_->names()[x]);
    }
}

ElementSet MinorView::to_base(ElementSet s) const {
    ElementSet out;
    for (int i : s) out = out.with(map_[i]);
    return out;
}

int MinorView::rank(ElementSet s) const { return base_->rank(to_base(s) | con_) - con_rank_; }

BasisDeltaView::BasisDeltaView(OraclePtr base, std::vector<ElementSet> relaxed, std::vector<ElementSet> tightened)
    : base_(std::move(base)), relaxed_(std::move(relaxed)), tightened_(std::move(tightened)) {}

int BasisDeltaView::rank(ElementSet s) const {
    int r = base_->rank(s);
    for (auto c : relaxed_)
        if (c == s) ++r;
    for (auto b : tightened_)
        if (b == s) --r;
    return r;
}

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
    return out;
}

}  // namespace

OraclePtr relax_view(OraclePtr base, ElementSet c) {
    auto failures = circuit_hyperplane_failures(*base, c);
    if (!failures.empty()) throw PreconditionError("cannot relax " + base->format(c) + ": " + join(failures));
    return std::make_shared<BasisDeltaView>(std::move(base), std::vector<ElementSet>{c}, std::vector<ElementSet>{});
}

OraclePtr tighten_view(OraclePtr base, ElementSet b) {
    auto failures = free_basis_failures(*base, b);
    if (!failures.empty()) throw PreconditionError("cannot tighten " + base->format(b) + ": " + join(failures));
    return std::make_shared<BasisDeltaView>(std::move(base), std::vector<ElementSet>{}, std::vector<ElementSet>{b});
}

}  // namespace framelift
