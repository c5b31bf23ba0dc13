#pragma once

#include <optional>
#include <string>

#include "framelift/graph.hpp"
#include "framelift/matroid.hpp"

namespace framelift {

enum class MatroidKind { Frame, Lift };

std::string to_string(MatroidKind k);  // "frame" or "lift"
MatroidKind parse_kind(const std::string& s);

// G[I] has no balanced cycle and every component H has |E(H)| <= |V(H)|.
bool fm_independent(const BiasedGraph& bg, ElementSet i);
// G[I] has at most one cycle, and that cycle is unbalanced.
bool lm_independent(const BiasedGraph& bg, ElementSet i);
bool is_independent(const BiasedGraph& bg, MatroidKind kind, ElementSet i);

// Materialized basis families. A failed exchange check is an InternalError.
ExplicitMatroid fm_matroid(const BiasedGraph& bg);
ExplicitMatroid lm_matroid(const BiasedGraph& bg);
ExplicitMatroid bias_matroid(const BiasedGraph& bg, MatroidKind kind);

// Query-mode matroids over the edge names. The labelled version computes rank from vertex
// potentials per component (no cycle enumeration), the biased version greedily from independence.
OraclePtr graph_oracle(const LabelledGraph& lg, MatroidKind kind);
OraclePtr graph_oracle(const BiasedGraph& bg, MatroidKind kind);

// Vertices, components and balanced components of G[S], from vertex potentials.
struct SubgraphBalance {
    int vertices = 0;
    int components = 0;
    int balanced_components = 0;
};
SubgraphBalance subgraph_balance(const LabelledGraph& lg, ElementSet s);

enum class CocircuitKind { Balancing, Vertical, Both };

struct CocircuitClass {
    CocircuitKind kind = CocircuitKind::Balancing;
    std::optional<int> vertex;  // set for Vertical and Both
};

// Classifies a non-separating cocircuit of FM(G, B) as a balancing set, a vertex star, or both.
// InputError if cstar is not a non-separating cocircuit; InternalError (carrying the instance)
// if it is neither.
CocircuitClass classify_nonseparating(const BiasedGraph& bg, ElementSet cstar);
std::string to_string(const CocircuitClass& c, const Multigraph& g);

}  // namespace framelift
