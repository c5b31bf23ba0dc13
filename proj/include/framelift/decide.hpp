#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "framelift/bias_matroid.hpp"
#include "framelift/graph.hpp"
#include "framelift/matroid.hpp"

namespace framelift {

enum class Verdict { Representable, NotRepresentable, BudgetExceeded };
std::string to_string(Verdict v);

enum class Strategy {
    Auto,       // vertical preselection wherever it is licensed, enumeration elsewhere
    Enumerate,  // candidate graphs up to isomorphism, then edge bijections
    Vertical,   // same as Auto; kept so callers can say what they want
};

enum class GraphFilter { Any, Simple, WithParallelPair };

std::string to_string(Strategy s);
std::string to_string(GraphFilter f);

struct DecideOptions {
    std::uint64_t max_nodes = 1'000'000'000;  // per candidate graph
    double max_seconds = 0;                   // 0: no wall-clock limit
    int threads = 1;
    Strategy strategy = Strategy::Auto;
    GraphFilter filter = GraphFilter::Any;
};

// A matroid-derived fact that licenses a pruning rule, plus how often the rule fired.
struct PruneRule {
    std::string name;
    std::string justification;
    std::uint64_t firings = 0;
};

struct Certificate {
    MatroidKind kind = MatroidKind::Frame;
    Verdict verdict = Verdict::NotRepresentable;
    std::string model;
    Strategy strategy = Strategy::Auto;
    GraphFilter filter = GraphFilter::Any;
    // Witness edges carry the matroid's element names, in ground-set order.
    std::optional<BiasedGraph> witness;
    std::uint64_t candidate_graphs = 0;
    std::uint64_t vertical_families = 0;
    std::uint64_t bijection_nodes = 0;
    std::uint64_t leaves = 0;
    std::vector<PruneRule> rules;
    std::vector<std::string> notes;
};

// Decides whether M = FM(H, B) (frame) or LM(H, B) (lift) for some biased graph, within the
// model of ordinary multigraphs with loops and without half-edges. Needs at most 16 elements.
Certificate decide(const ExplicitMatroid& m, MatroidKind kind, const DecideOptions& opt = {});
Certificate decide_frame(const ExplicitMatroid& m, const DecideOptions& opt = {});
Certificate decide_lift(const ExplicitMatroid& m, const DecideOptions& opt = {});

// balanced := cycles of H whose image is a circuit of M. Empty optional (reject) when some cycle
// maps to a set that is neither a circuit nor independent, or the result fails the theta rule.
// bijection[i] is the element of M carried by edge i of H.
std::optional<std::vector<ElementSet>> forced_bias(const Multigraph& h, const std::vector<int>& bijection,
                                                   const ExplicitMatroid& m);

// Re-checks a witness from scratch: edge names match the ground set, the balanced sets are cycles
// satisfying the theta rule, and the independent sets of the biased graph are those of M.
bool verify_witness(const ExplicitMatroid& m, MatroidKind kind, const BiasedGraph& witness,
                    std::string* why = nullptr);

}  // namespace framelift
