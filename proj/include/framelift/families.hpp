#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "framelift/bias_matroid.hpp"
#include "framelift/graph.hpp"
#include "framelift/matroid.hpp"

namespace framelift {

struct FamilyParams {
    int k = 3;
    MatroidKind kind = MatroidKind::Frame;
    // Replaces the default label of the named edges (stored verbatim, never switched).
    std::map<std::string, GroupValue> label_override;
};

// InputError unless k is odd and at least 3.
void check_params(const FamilyParams& p);
Group family_group(MatroidKind kind);

// G_k: columns 1..k of two vertices (u_i, w_i); column 1 is split into s1, t1 (from u_1) and
// s2, t2 (from w_1). Bundle i = {a_i, b_i, c_i, d_i} runs from column i to column i+1 with
// a: u-u, b: u-w, c: w-u, d: w-w. Bundle 1 leaves s1 (a_1, b_1) and s2 (c_1, d_1); bundle k
// enters t1 (a_k, c_k) and t2 (b_k, d_k). e1 = s1t1, e2 = s2t2. Edges are oriented from
// column i to column i+1, and only bundle k carries non-identity labels.
LabelledGraph build_base_graph(const FamilyParams& p);
// G'_k: as G_k but e1 = s1t2 and e2 = s2t1.
LabelledGraph build_alt_graph(const FamilyParams& p);

struct FamilyInstance {
    FamilyParams params;
    LabelledGraph base;        // G_k
    LabelledGraph alt;         // G'_k
    LabelledGraph contracted;  // G_k / {e1, e2}, with u1 and w1 restored

    // All four share the edge names of G_k (contracted ones without e1, e2).
    OraclePtr n, m, n_contracted, m_contracted;
    // Present when the instance is materialized (the default for k = 3).
    std::optional<ExplicitMatroid> n_explicit, m_explicit, m_contracted_explicit;

    // Sets over the ground of N_k.
    ElementSet e12, p, q;
    std::vector<ElementSet> bundles;          // C_1 .. C_k
    std::map<std::string, ElementSet> named;  // A1, A2, B1, B2, C1, C2

    bool is_explicit() const { return n_explicit.has_value(); }
    // Same set over the ground of the contraction by {e1, e2}.
    ElementSet to_contracted(ElementSet s) const;
    ElementSet p_plus() const { return p | e12; }
    ElementSet q_plus() const { return q | e12; }
};

// Frame: N_k = FM(G_k), M_k = N_k tightened at P+e1e2 and Q+e1e2. Lift: N_k = LM(G_k), M_k = N_k
// relaxed at both. Query mode keeps N_k as a graph oracle and M_k as a basis delta.
// A failed precondition is a PreconditionError naming the set.
FamilyInstance build_instance(const FamilyParams& p, std::optional<bool> materialize = {});

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct FactReport {
    std::vector<Check> checks;
    bool passed() const;
    int failures() const;
};

// The structural facts the constructions rely on, each as pass/fail with a witness.
FactReport validate_facts(const FamilyInstance& inst);

// Biased graphs whose matroids are M_P and M_Q (N_k with one of the two modifications).
BiasedGraph rep_p(const FamilyInstance& inst);
BiasedGraph rep_q(const FamilyInstance& inst);

// For every e in P and Q: M_k \ e and M_k / e equal the corresponding minors of the explicit
// representations. Needs a materialized instance.
FactReport verify_minors(const FamilyInstance& inst);

// Tries every assignment of the candidate values to the four bundle-k edges (k must be 3, at most
// three candidates), in lexicographic order, and returns the first one for which the instance
// builds and every fact holds.
std::optional<std::map<std::string, GroupValue>> search_labels(const FamilyParams& p,
                                                               const std::vector<GroupValue>& candidates);

}  // namespace framelift
