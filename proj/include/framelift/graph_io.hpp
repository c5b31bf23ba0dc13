#pragma once

#include <iosfwd>
#include <string>

#include "framelift/graph.hpp"

namespace framelift {

// Labelled graph:
//   GROUP Z | GROUP Q+
//   VERTICES n        followed by n vertex names
//   EDGES m           followed by m lines "name tail head [label]"
// A missing label is the identity. A loop line reads "name v v [balanced|unbalanced]" (default unbalanced).
void write_labelled_graph(std::ostream& os, const LabelledGraph& lg, const std::string& comment = {});
LabelledGraph read_labelled_graph(std::istream& is);
std::string to_text(const LabelledGraph& lg);
LabelledGraph labelled_graph_from_text(const std::string& text);
LabelledGraph load_labelled_graph(const std::string& path);
void save_labelled_graph(const std::string& path, const LabelledGraph& lg, const std::string& comment = {});

// Biased graph: VERTICES and EDGES as above without labels, then
//   BALANCED k        followed by k lines, each the edge names of one balanced cycle
void write_biased_graph(std::ostream& os, const BiasedGraph& bg, const std::string& comment = {});
BiasedGraph read_biased_graph(std::istream& is);
std::string to_text(const BiasedGraph& bg);
BiasedGraph biased_graph_from_text(const std::string& text);

}  // namespace framelift
