#pragma once

// Structural queries phrased purely in terms of rank calls. These run on
// explicit matroids and on query-mode matroids (graph-backed oracles and
// views) alike, which is what lets the family validator scale past k = 3.

#include <optional>
#include <string>
#include <vector>

#include "framelift/matroid.hpp"

namespace framelift {

bool is_independent(const RankOracle& m, ElementSet s);
bool is_circuit(const RankOracle& m, ElementSet s);
bool is_cocircuit(const RankOracle& m, ElementSet s);
bool is_hyperplane(const RankOracle& m, ElementSet s);
bool is_basis(const RankOracle& m, ElementSet s);
ElementSet closure(const RankOracle& m, ElementSet s);

// Empty when `c` is a circuit-hyperplane, otherwise the failed halves
// ("not a circuit", "not a hyperplane").
std::vector<std::string> circuit_hyperplane_failures(const RankOracle& m, ElementSet c);
// Empty when `b` is a free basis, otherwise a description of the failure.
std::vector<std::string> free_basis_failures(const RankOracle& m, ElementSet b);

// Cocircuits with at most max_size elements, by direct scan of small subsets.
std::vector<ElementSet> bounded_cocircuits(const RankOracle& m, int max_size);
// Circuits with at most max_size elements.
std::vector<ElementSet> bounded_circuits(const RankOracle& m, int max_size);

// Connected components, computed from the fundamental-circuit graph of a
// greedy basis. Loops and coloops are singleton components.
std::vector<ElementSet> connected_components(const RankOracle& m);
bool is_connected(const RankOracle& m);

// Every cocircuit containing one of a, b contains the other.
bool is_series_pair(const RankOracle& m, int a, int b);

// M \ del / con as a view over `base`. Elements keep their names and
// relative order.
class MinorView final : public RankOracle {
public:
    MinorView(OraclePtr base, ElementSet del, ElementSet con);

    int size() const override { return static_cast<int>(names_.size()); }
    int rank(ElementSet s) const override;
    const std::vector<std::string>& names() const override { return names_; }

    // Maps a set of the view back to positions in the base.
    ElementSet to_base(ElementSet s) const;

private:
    OraclePtr base_;
    ElementSet con_;
    int con_rank_;
    std::vector<int> map_;  // view position -> base position
    std::vector<std::string> names_;
};

// A matroid described by a base oracle plus a basis-family delta: sets added
// by relaxing circuit-hyperplanes and sets removed by tightening free bases.
// Relaxing C raises rank only at C itself; tightening B lowers it only at B.
class BasisDeltaView final : public RankOracle {
public:
    BasisDeltaView(OraclePtr base, std::vector<ElementSet> relaxed, std::vector<ElementSet> tightened);

    int size() const override { return base_->size(); }
    int rank(ElementSet s) const override;
    const std::vector<std::string>& names() const override { return base_->names(); }

    const std::vector<ElementSet>& relaxed() const { return relaxed_; }
    const std::vector<ElementSet>& tightened() const { return tightened_; }

private:
    OraclePtr base_;
    std::vector<ElementSet> relaxed_;
    std::vector<ElementSet> tightened_;
};

// Query-mode relax/tighten: check the precondition on `base`, then wrap.
// Throws PreconditionError naming the failed half.
OraclePtr relax_view(OraclePtr base, ElementSet c);
OraclePtr tighten_view(OraclePtr base, ElementSet b);

}  // namespace framelift
