#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "framelift/element_set.hpp"

namespace framelift {

// Anything that can answer rank queries over a named ground set. Explicit
// matroids, graph-backed matroids and minor/modification views all implement
// this so that the structural checks below are written once.
class RankOracle {
public:
    virtual ~RankOracle() = default;

    virtual int size() const = 0;
    virtual int rank(ElementSet s) const = 0;
    virtual const std::vector<std::string>& names() const = 0;

    ElementSet ground() const { return ElementSet::full(size()); }
    int full_rank() const { return rank(ground()); }

    // Throws InputError on unknown names.
    int index_of(std::string_view name) const;
    ElementSet set_of(const std::vector<std::string>& names) const;
    std::string format(ElementSet s) const;
};

using OraclePtr = std::shared_ptr<const RankOracle>;

// Non-owning handle for an oracle whose lifetime the caller guarantees.
inline OraclePtr borrow(const RankOracle& o) { return OraclePtr(std::shared_ptr<void>{}, &o); }

// A matroid given by its full basis family. Immutable after construction;
// the constructor rejects anything that is not a matroid.
class ExplicitMatroid final : public RankOracle {
public:
    ExplicitMatroid(std::vector<std::string> names, std::vector<ElementSet> bases);

    int size() const override { return static_cast<int>(names_.size()); }
    int rank(ElementSet s) const override;
    const std::vector<std::string>& names() const override { return names_; }

    const std::vector<ElementSet>& bases() const { return bases_; }
    bool is_basis(ElementSet s) const;
    bool is_independent(ElementSet s) const { return rank(s) == s.size(); }

private:
    void build_tables();
    void validate_exchange() const;

    std::vector<std::string> names_;
    std::vector<ElementSet> bases_;  // sorted by bits
    int rank_ = 0;
    // Rank of every subset, present when size() <= kRankTableLimit.
    std::shared_ptr<const std::vector<std::uint8_t>> rank_table_;

public:
    static constexpr int kRankTableLimit = 20;
    static constexpr int kExhaustiveCheckLimit = 16;
};

// Construction helpers.
ExplicitMatroid uniform_matroid(int r, int n);
ExplicitMatroid from_circuits(std::vector<std::string> names, int rank,
                              const std::vector<ElementSet>& circuits);
ExplicitMatroid direct_sum(const ExplicitMatroid& a, const ExplicitMatroid& b);
// Explicit copy of any oracle (enumerates all rank-sized subsets).
ExplicitMatroid materialize(const RankOracle& o);

// rank with a subset check; unknown elements are an InputError.
int rank(const ExplicitMatroid& m, ElementSet s);

// Canonical family order: by size, then by bits.
void sort_family(std::vector<ElementSet>& family);

std::vector<ElementSet> circuits(const ExplicitMatroid& m);
// All cocircuits (at most 16 elements), or those of size <= max_size.
std::vector<ElementSet> cocircuits(const ExplicitMatroid& m, std::optional<int> max_size = {});
ExplicitMatroid dual(const ExplicitMatroid& m);
ExplicitMatroid minor(const ExplicitMatroid& m, ElementSet del, ElementSet con);
ExplicitMatroid restrict_to(const ExplicitMatroid& m, ElementSet keep);
std::vector<ElementSet> non_separating_cocircuits(const ExplicitMatroid& m);
std::vector<ElementSet> circuit_hyperplanes(const ExplicitMatroid& m);
std::vector<ElementSet> free_bases(const ExplicitMatroid& m);
ExplicitMatroid relax(const ExplicitMatroid& m, ElementSet c);
ExplicitMatroid tighten(const ExplicitMatroid& m, ElementSet b);
// Same ground set by names (order may differ) and identical basis families.
bool equal(const ExplicitMatroid& a, const ExplicitMatroid& b);

}  // namespace framelift
