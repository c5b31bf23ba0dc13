#include <doctest.h>

#include <iostream>

#include "framelift/errors.hpp"
#include "framelift/families.hpp"
#include "framelift/matroid_query.hpp"

using namespace framelift;

namespace {

FamilyParams params(int k, MatroidKind kind) {
    FamilyParams p;
    p.k = k;
    p.kind = kind;
    return p;
}

void require_all(const FactReport& r) {
    for (const auto& c : r.checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.passed);
    }
}

}  // namespace

TEST_CASE("parameters") {
    CHECK_THROWS_AS(build_base_graph(params(4, MatroidKind::Frame)), InputError);
    CHECK_THROWS_AS(build_base_graph(params(1, MatroidKind::Lift)), InputError);
    CHECK_THROWS_AS(build_base_graph(params(9, MatroidKind::Lift)), InputError);
    auto p = params(3, MatroidKind::Frame);
    p.label_override["a3"] = GroupValue::integer(1);
    CHECK_THROWS_AS(build_base_graph(p), InputError);
    p.label_override = {{"zz", GroupValue::rational(2)}};
    CHECK_THROWS_AS(build_base_graph(p), InputError);
}

TEST_CASE("base graph shape") {
    for (int k : {3, 5, 7}) {
        auto g = build_base_graph(params(k, MatroidKind::Frame)).graph();
        CHECK(g.vertex_count() == 2 * k + 2);
        CHECK(g.edge_count() == 4 * k + 2);
        auto q = g.edge_set({"e1", "e2"});
        for (int i = 1; i <= k; ++i) q |= g.edge_set({"b" + std::to_string(i), "c" + std::to_string(i)});
        CHECK(is_cycle(g, q));
        CHECK(q.size() == 2 * k + 2);
    }
}

TEST_CASE("frame k=3 instance") {
    auto inst = build_instance(params(3, MatroidKind::Frame));
    REQUIRE(inst.is_explicit());
    auto fb = free_bases(*inst.n_explicit);
    CHECK(std::find(fb.begin(), fb.end(), inst.p_plus()) != fb.end());
    CHECK(std::find(fb.begin(), fb.end(), inst.q_plus()) != fb.end());
    CHECK(rank(*inst.m_contracted_explicit, inst.m_contracted->ground()) == 6);
    CHECK(bounded_cocircuits(*inst.m_contracted, 3).empty());
    // 4-cycle edge sets of G/{e1,e2} are circuits.
    for (auto c : all_cycles(inst.contracted.graph(), 4))
        if (c.size() == 4) CHECK(is_circuit(*inst.m_contracted, c));
    auto nsc = non_separating_cocircuits(minor(*inst.n_explicit, {}, inst.e12));
    for (auto c : inst.bundles) CHECK(std::find(nsc.begin(), nsc.end(), inst.to_contracted(c)) != nsc.end());
    CHECK(is_connected(*inst.n_contracted));
    require_all(validate_facts(inst));
}

TEST_CASE("lift k=3 instance") {
    auto inst = build_instance(params(3, MatroidKind::Lift));
    auto ch = circuit_hyperplanes(*inst.n_explicit);
    CHECK(std::find(ch.begin(), ch.end(), inst.p_plus()) != ch.end());
    CHECK(std::find(ch.begin(), ch.end(), inst.q_plus()) != ch.end());
    const auto& n = *inst.n_explicit;
    CHECK(n.is_independent(n.set_of({"e1", "e2", "a1", "c1", "a3", "b3"})));
    auto four = cocircuits(*inst.m_contracted_explicit, 4);
    std::erase_if(four, [](ElementSet s) { return s.size() != 4; });
    CHECK(four.size() == 10);
    require_all(validate_facts(inst));
}

TEST_CASE("single-element minors at k=3") {
    for (auto kind : {MatroidKind::Frame, MatroidKind::Lift}) {
        auto inst = build_instance(params(3, kind));
        auto r = verify_minors(inst);
        CHECK(r.checks.size() == 26);
        require_all(r);
    }
}

TEST_CASE("query mode agrees with the explicit instance") {
    for (auto kind : {MatroidKind::Frame, MatroidKind::Lift}) {
        auto ex = build_instance(params(3, kind), true);
        auto qu = build_instance(params(3, kind), false);
        REQUIRE_FALSE(qu.is_explicit());
        for (std::uint32_t b = 0; b < (1u << 14); ++b) REQUIRE(ex.m->rank(ElementSet(b)) == qu.m->rank(ElementSet(b)));
        for (std::uint32_t b = 0; b < (1u << 12); ++b)
            REQUIRE(ex.m_contracted->rank(ElementSet(b)) == qu.m_contracted->rank(ElementSet(b)));
        auto a = validate_facts(ex), q = validate_facts(qu);
        CHECK(q.passed());
        CHECK(a.checks.size() == q.checks.size());
    }
}

TEST_CASE("tampered labels are caught") {
    for (auto kind : {MatroidKind::Frame, MatroidKind::Lift}) {
        for (std::string edge : {"a3", "b3", "c3", "d3"}) {
            auto p = params(3, kind);
            p.label_override[edge] = GroupValue::identity(family_group(kind));
            bool caught = false;
            try {
                caught = !validate_facts(build_instance(p)).passed();
            } catch (const PreconditionError& e) {
                caught = true;
            }
            CHECK_MESSAGE(caught, edge);
        }
    }
}

TEST_CASE("label search") {
    auto frame = search_labels(params(3, MatroidKind::Frame), {GroupValue::rational(1), GroupValue::rational(2)});
    REQUIRE(frame);
    auto lift01 = search_labels(params(3, MatroidKind::Lift), {GroupValue::integer(0), GroupValue::integer(1)});
    CHECK_FALSE(lift01);
    auto lift = search_labels(params(3, MatroidKind::Lift),
                              {GroupValue::integer(-1), GroupValue::integer(0), GroupValue::integer(1)});
    REQUIRE(lift);
    CHECK_FALSE(search_labels(params(3, MatroidKind::Frame), {GroupValue::rational(1)}));
}
