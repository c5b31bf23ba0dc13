#include <doctest.h>

#include <random>
#include <sstream>

#include "framelift/bias_matroid.hpp"
#include "framelift/errors.hpp"
#include "framelift/linear_rep.hpp"
#include "test_support.hpp"

using namespace framelift;

namespace {

LabelledGraph one_edge(Group group, GroupValue label) {
    return LabelledGraph(Multigraph({"u", "v"}, {{"e", 0, 1}}), group, {label});
}

LabelledGraph random_loopless(int n, int m, Group group, std::mt19937& rng) {
    return testing::random_labelled_graph(n, m, group, rng, false, 1);
}

}  // namespace

TEST_CASE("matrix entry rules") {
    auto f = frame_matrix(one_edge(Group::PositiveRationals, GroupValue::rational(3)));
    CHECK(f.at(0, 0) == 1);
    CHECK(f.at(1, 0) == -3);
    auto f1 = frame_matrix(one_edge(Group::PositiveRationals, GroupValue::rational(1)));
    CHECK(f1.at(0, 0) == 1);
    CHECK(f1.at(1, 0) == -1);
    auto l = lift_matrix(one_edge(Group::Integers, GroupValue::integer(1)));
    CHECK(l.rows() == 3);
    CHECK(l.at(0, 0) == -1);
    CHECK(l.at(1, 0) == 1);
    CHECK(l.at(2, 0) == 1);
    CHECK_THROWS_AS(frame_matrix(one_edge(Group::Integers, GroupValue::integer(1))), InputError);
    CHECK_THROWS_AS(lift_matrix(one_edge(Group::PositiveRationals, GroupValue::rational(1))), InputError);
    auto loop = LabelledGraph::unlabelled(Multigraph({"u"}, {{"l", 0, 0}}), Group::Integers);
    CHECK_THROWS_AS(lift_matrix(loop), InputError);
}

TEST_CASE("small ranks") {
    Multigraph tri({"a", "b", "c"}, {{"x", 0, 1}, {"y", 1, 2}, {"z", 2, 0}});
    auto a = frame_matrix(LabelledGraph::unlabelled(tri, Group::PositiveRationals));
    CHECK(column_rank(a, ElementSet::full(3)) == 2);
    auto l0 = lift_matrix(LabelledGraph::unlabelled(tri, Group::Integers));
    for (int j = 0; j < 3; ++j) CHECK(l0.at(3, j) == 0);
    CHECK(column_rank(l0, ElementSet::full(3)) == 2);

    RationalMatrix id({"r0", "r1", "r2"}, {"c0", "c1", "c2"});
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    CHECK(column_matroid(id).bases() == std::vector<ElementSet>{ElementSet::full(3)});

    RationalMatrix gp({"r0", "r1"}, {"1", "2", "3", "4"});
    const int vals[2][4] = {{1, 0, 1, 1}, {0, 1, 1, 2}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 4; ++j) gp.at(i, j) = vals[i][j];
    gp.at(0, 3) = mpq_class(1, 3);
    CHECK(equal(column_matroid(gp), uniform_matroid(2, 4)));
}

TEST_CASE("column matroids match the biased-graph matroids") {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 5, m = 3 + trial % 8;
        auto fr = random_loopless(n, m, Group::PositiveRationals, rng);
        CHECK(equal(column_matroid(frame_matrix(fr)), fm_matroid(balanced_cycles(fr))));
        auto li = random_loopless(n, m, Group::Integers, rng);
        CHECK(equal(column_matroid(lift_matrix(li)), lm_matroid(balanced_cycles(li))));
    }
}

TEST_CASE("lift matrix rank adds one exactly when a cycle is unbalanced") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        auto lg = random_loopless(3 + trial % 3, 5 + trial % 5, Group::Integers, rng);
        const auto& g = lg.graph();
        auto all = subgraph_balance(lg, g.all_edges());
        if (all.components != 1 || all.vertices != g.vertex_count()) continue;
        auto l = lift_matrix(lg);
        RationalMatrix inc(g.vertices(), g.edge_names());
        for (int i = 0; i < g.vertex_count(); ++i)
            for (int j = 0; j < g.edge_count(); ++j) inc.at(i, j) = l.at(i, j);
        const int extra = all.balanced_components == 1 ? 0 : 1;
        CHECK(column_rank(l, g.all_edges()) == column_rank(inc, g.all_edges()) + extra);
    }
}

TEST_CASE("elimination handles skipped columns and fractions") {
    // Exact arithmetic against a hand computation: columns (1/2, 1/3), (3, 2) are parallel.
    RationalMatrix a({"r0", "r1"}, {"p", "q", "z", "s"});
    a.at(0, 0) = mpq_class(1, 2);
    a.at(1, 0) = mpq_class(1, 3);
    a.at(0, 1) = 3;
    a.at(1, 1) = 2;
    a.at(0, 3) = mpq_class(-5, 7);
    CHECK(column_rank(a, ElementSet::of({0, 1})) == 1);
    CHECK(column_rank(a, ElementSet::of({0, 2})) == 1);
    CHECK(column_rank(a, ElementSet::of({0, 1, 2, 3})) == 2);
    CHECK(column_rank(a, ElementSet::of({2})) == 0);
}

TEST_CASE("matrix export") {
    std::ostringstream os;
    write_matrix(os, frame_matrix(one_edge(Group::PositiveRationals, GroupValue::rational(2, 3))));
    CHECK(os.str() == "row\te\nu\t1/1\nv\t-2/3\n");
}
