#pragma once

#include <memory>
#include <string>
#include <vector>

#include "framelift/graph.hpp"

namespace framelift {

struct GraphSpec {
    int edges = 0;
    int vertices = 1;
    int min_degree = 0;  // on |delta(v)|, so a loop counts once
    bool allow_parallel = true;
    bool allow_loops = false;
    bool connected = false;

    friend auto operator<=>(const GraphSpec&, const GraphSpec&) = default;
};

// One multigraph per isomorphism class. Generated edge by edge with canonical-form dedupe;
// results are cached per spec. Vertices are v0.., edges x0.. in (tail, head) order.
std::shared_ptr<const std::vector<Multigraph>> enumerate_graphs(const GraphSpec& spec);

// Certificate of the isomorphism class: equal for two multigraphs iff they are isomorphic
// (ignoring names and orientation).
std::string canonical_form(const Multigraph& g);

}  // namespace framelift
