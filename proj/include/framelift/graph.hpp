#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "framelift/element_set.hpp"
#include "framelift/group.hpp"

namespace framelift {

inline constexpr int kMaxVertices = 64;

// Non-loop edges are oriented tail -> head; for a loop tail == head.
struct Edge {
    std::string name;
    int tail = 0;
    int head = 0;
    bool is_loop() const { return tail == head; }
    int other(int v) const { return v == tail ? head : tail; }
};

using VertexMask = std::uint64_t;

class Multigraph {
public:
    Multigraph() = default;
    // Throws InputError on duplicate names, bad endpoints, more than 32 edges or 64 vertices.
    Multigraph(std::vector<std::string> vertices, std::vector<Edge> edges);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[e]; }
    std::vector<std::string> edge_names() const;

    ElementSet all_edges() const { return ElementSet::full(edge_count()); }
    // delta(v): every edge with v as an end, loops included.
    ElementSet star(int v) const { return stars_[v]; }
    ElementSet loops() const;
    VertexMask ends(int e) const { return ends_[e]; }
    VertexMask vertices_of(ElementSet s) const;
    // Degree with loops counted twice.
    int degree(int v) const;

    int vertex_index(std::string_view name) const;
    int edge_index(std::string_view name) const;
    ElementSet edge_set(const std::vector<std::string>& names) const;
    std::string format(ElementSet s) const;

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<ElementSet> stars_;
    std::vector<VertexMask> ends_;
};

// One component of G[S], the subgraph formed by the edges in S and their ends.
struct Component {
    ElementSet edges;
    VertexMask vertices = 0;
    int vertex_count = 0;
};
std::vector<Component> components(const Multigraph& g, ElementSet s);

// Connected and 2-regular on its ends (a loop counts 2 at its vertex).
bool is_cycle(const Multigraph& g, ElementSet s);

struct Traversal {
    int edge = 0;
    bool forward = true;  // walked tail -> head
};

struct Cycle {
    ElementSet edges;
    std::vector<Traversal> steps;
};

// Walks the cycle starting with its lowest edge, forward. InputError if s is not a cycle.
Cycle trace_cycle(const Multigraph& g, ElementSet s);

// Every cycle exactly once (by edge set), loops and 2-cycles included, sorted by size then position.
std::vector<ElementSet> all_cycles(const Multigraph& g, int max_length = kMaxElements);

class LabelledGraph {
public:
    LabelledGraph() = default;
    // labels are indexed by edge; entries for loops are ignored. balanced_loops lists the loops declared
    // balanced; every other loop is unbalanced.
    LabelledGraph(Multigraph g, Group group, std::vector<GroupValue> labels, ElementSet balanced_loops = {});
    static LabelledGraph unlabelled(Multigraph g, Group group);

    const Multigraph& graph() const { return graph_; }
    Group group() const { return group_; }
    const GroupValue& label(int e) const { return labels_[e]; }
    const std::vector<GroupValue>& labels() const { return labels_; }
    ElementSet balanced_loops() const { return balanced_loops_; }

    LabelledGraph with_label(int e, const GroupValue& g) const;
    LabelledGraph with_vertex_names(std::vector<std::string> names) const;

private:
    Multigraph graph_;
    Group group_ = Group::Integers;
    std::vector<GroupValue> labels_;
    ElementSet balanced_loops_;
};

// Product along the traversal: label when walked forward, inverse when walked backward.
// InputError for a loop (loops carry no label) or a cycle not in the graph.
GroupValue cycle_gain(const LabelledGraph& lg, const Cycle& c);
bool is_balanced(const LabelledGraph& lg, ElementSet cycle);

// Regauge at v: g composed on edges leaving v, g^-1 on edges entering v. Loops untouched.
LabelledGraph switch_vertex(const LabelledGraph& lg, int v, const GroupValue& g);

// Contract the given non-loop edges one at a time: switch so the edge's label is the identity, then
// merge its head into its tail. Parallel edges become loops, balanced iff their 2-cycle was.
LabelledGraph contract_edges(const LabelledGraph& lg, ElementSet links);
LabelledGraph delete_edges(const LabelledGraph& lg, ElementSet s);

// True iff no theta subgraph has exactly two of its three cycles in b.
bool is_linear_subclass(const Multigraph& g, const std::vector<ElementSet>& b);

class BiasedGraph {
public:
    BiasedGraph() = default;
    // InputError if some set is not a cycle of g or the theta condition fails.
    BiasedGraph(Multigraph g, std::vector<ElementSet> balanced);

    const Multigraph& graph() const { return graph_; }
    const std::vector<ElementSet>& balanced() const { return balanced_; }
    bool is_balanced(ElementSet cycle) const { return lookup_.count(cycle.bits()) != 0; }
    // Some balanced cycle lies inside s.
    bool has_balanced_cycle_in(ElementSet s) const;

private:
    Multigraph graph_;
    std::vector<ElementSet> balanced_;
    std::unordered_set<std::uint32_t> lookup_;
};

BiasedGraph balanced_cycles(const LabelledGraph& lg);

}  // namespace framelift
