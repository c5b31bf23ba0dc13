#include <doctest.h>

#include <random>

#include "framelift/errors.hpp"
#include "framelift/matroid.hpp"
#include "framelift/matroid_io.hpp"
#include "framelift/matroid_query.hpp"
#include "test_support.hpp"

using namespace framelift;
using framelift::testing::brute_rank;
using framelift::testing::random_linear_matroid;
using framelift::testing::random_sparse_paving;

namespace {

ElementSet S(const RankOracle& m, std::vector<std::string> names) { return m.set_of(names); }

// Rank 2 on {1,2,3} with bases {1,2} and {1,3}: 2 and 3 are parallel.
ExplicitMatroid two_bases() {
    return ExplicitMatroid({"1", "2", "3"}, {ElementSet::of({0, 1}), ElementSet::of({0, 2})});
}

std::vector<ExplicitMatroid> random_matroids(int count, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<ExplicitMatroid> out;
    for (int i = 0; i < count; ++i) {
        const int n = 4 + static_cast<int>(rng() % 6);
        if (i % 2 == 0) {
            const int rows = 1 + static_cast<int>(rng() % (n - 1));
            out.push_back(random_linear_matroid(rows, n, i % 4 == 0 ? 2 : 3, rng));
        } else {
            const int r = 2 + static_cast<int>(rng() % (n - 3));
            out.push_back(random_sparse_paving(n, r, rng));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("rank on uniform matroids") {
    auto u24 = uniform_matroid(2, 4);
    CHECK(rank(u24, ElementSet{}) == 0);
    CHECK(rank(u24, S(u24, {"1", "2", "3"})) == 2);
    CHECK_THROWS_AS(rank(u24, ElementSet::single(7)), InputError);
    CHECK_THROWS_AS(u24.set_of({"9"}), InputError);
}

TEST_CASE("rank table agrees with the basis-scan definition") {
    for (const auto& m : random_matroids(20, 11)) {
        for (std::uint32_t s = 0; s < (1u << m.size()); ++s) CHECK(m.rank(ElementSet(s)) == brute_rank(m, ElementSet(s)));
    }
}

TEST_CASE("circuits") {
    auto u23 = uniform_matroid(2, 3);
    CHECK(circuits(u23) == std::vector<ElementSet>{u23.ground()});
    auto u24 = uniform_matroid(2, 4);
    auto c = circuits(u24);
    CHECK(c.size() == 4);
    for (auto x : c) CHECK(x.size() == 3);
}

TEST_CASE("cocircuits") {
    auto u24 = uniform_matroid(2, 4);
    CHECK(cocircuits(u24) == circuits(u24));
    CHECK(cocircuits(u24, 2).empty());
    CHECK(cocircuits(u24, 3).size() == 4);
    for (const auto& m : random_matroids(20, 12)) {
        CHECK(cocircuits(m) == circuits(dual(m)));
        auto bounded = cocircuits(m, 3);
        std::vector<ElementSet> small;
        for (auto x : cocircuits(m))
            if (x.size() <= 3) small.push_back(x);
        CHECK(bounded == small);
    }
}

TEST_CASE("minors") {
    auto u24 = uniform_matroid(2, 4);
    auto del = minor(u24, S(u24, {"4"}), ElementSet{});
    CHECK(equal(del, uniform_matroid(2, 3)));
    auto con = minor(u24, ElementSet{}, S(u24, {"4"}));
    CHECK(equal(con, uniform_matroid(1, 3)));
    CHECK_THROWS_AS(minor(u24, S(u24, {"1", "2"}), S(u24, {"2"})), InputError);

    // Contracting a dependent set contracts a maximal independent subset.
    auto c = minor(u24, ElementSet{}, S(u24, {"1", "2", "3"}));
    CHECK(c.size() == 1);
    CHECK(c.full_rank() == 0);
}

TEST_CASE("deletion and contraction commute") {
    std::mt19937 rng(5);
    for (const auto& m : random_matroids(30, 13)) {
        const int n = m.size();
        ElementSet d, c;
        for (int i = 0; i < n; ++i) {
            const auto roll = rng() % 4;
            if (roll == 0) d = d.with(i);
            if (roll == 1) c = c.with(i);
        }
        auto both = minor(m, d, c);
        // delete first, then contract (positions shift after deletion)
        auto step1 = minor(m, d, ElementSet{});
        std::vector<std::string> cn;
        for (int i : c) cn.push_back(m.names()[i]);
        auto a = minor(step1, ElementSet{}, step1.set_of(cn));
        auto step2 = minor(m, ElementSet{}, c);
        std::vector<std::string> dn;
        for (int i : d) dn.push_back(m.names()[i]);
        auto b = minor(step2, step2.set_of(dn), ElementSet{});
        CHECK(equal(both, a));
        CHECK(equal(both, b));
    }
}

TEST_CASE("minor view agrees with explicit minors") {
    for (const auto& m : random_matroids(10, 14)) {
        const ElementSet d = ElementSet::single(0), c = ElementSet::single(m.size() - 1);
        MinorView v(borrow(m), d, c);
        auto e = minor(m, d, c);
        REQUIRE(v.size() == e.size());
        for (std::uint32_t s = 0; s < (1u << v.size()); ++s) CHECK(v.rank(ElementSet(s)) == e.rank(ElementSet(s)));
    }
}

TEST_CASE("connectivity") {
    CHECK(is_connected(uniform_matroid(2, 4)));
    ExplicitMatroid triangle({"a", "b", "c"}, {ElementSet::of({0, 1}), ElementSet::of({0, 2}), ElementSet::of({1, 2})});
    CHECK_FALSE(is_connected(direct_sum(uniform_matroid(2, 3), triangle)));
    CHECK(is_connected(uniform_matroid(1, 1)));
    CHECK(is_connected(uniform_matroid(0, 1)));
    CHECK(is_connected(ExplicitMatroid({}, {ElementSet{}})));

    // Cross-check against the pairwise definition: every pair of elements
    // lies in a common circuit.
    for (const auto& m : random_matroids(30, 15)) {
        auto cs = circuits(m);
        bool pairwise = true;
        for (int x = 0; x < m.size(); ++x)
            for (int y = x + 1; y < m.size(); ++y) {
                bool found = false;
                for (auto c : cs)
                    if (c.contains(x) && c.contains(y)) found = true;
                if (!found) pairwise = false;
            }
        CHECK(is_connected(m) == pairwise);
    }
}

TEST_CASE("non-separating cocircuits") {
    auto u24 = uniform_matroid(2, 4);
    CHECK(non_separating_cocircuits(u24) == cocircuits(u24));
}

TEST_CASE("circuit-hyperplanes") {
    auto m = two_bases();
    CHECK(circuit_hyperplanes(m) == std::vector<ElementSet>{S(m, {"2", "3"})});
    CHECK(circuit_hyperplanes(uniform_matroid(2, 4)).empty());
}

TEST_CASE("relax") {
    auto m = two_bases();
    CHECK(equal(relax(m, S(m, {"2", "3"})), uniform_matroid(2, 3)));

    auto u24 = uniform_matroid(2, 4);
    try {
        relax(u24, S(u24, {"1", "2", "3"}));
        FAIL("expected a precondition error");
    } catch (const PreconditionError& e) {
        const std::string what = e.what();
        CHECK(what.find("not a hyperplane") != std::string::npos);
        CHECK(what.find("not a circuit") == std::string::npos);
    }
    try {
        relax(u24, S(u24, {"1", "2"}));
        FAIL("expected a precondition error");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("not a circuit") != std::string::npos);
    }
}

TEST_CASE("free bases and tighten") {
    auto u24 = uniform_matroid(2, 4);
    CHECK(free_bases(u24) == u24.bases());

    // Graphic matroid of a path is free: its single basis is vacuously free.
    auto path = uniform_matroid(3, 3);
    CHECK(free_bases(path) == path.bases());
    CHECK_THROWS_AS(tighten(path, path.ground()), PreconditionError);

    auto u23 = uniform_matroid(2, 3);
    auto t = tighten(u23, S(u23, {"2", "3"}));
    CHECK(equal(t, two_bases()));
    CHECK_THROWS_AS(tighten(two_bases(), ElementSet::of({0, 1})), PreconditionError);
}

TEST_CASE("relax and tighten are mutually inverse") {
    std::mt19937 rng(21);
    int relaxed = 0, tightened = 0;
    for (const auto& m : random_matroids(40, 16)) {
        for (auto c : circuit_hyperplanes(m)) {
            auto r = relax(m, c);
            auto fb = free_bases(r);
            CHECK(std::find(fb.begin(), fb.end(), c) != fb.end());
            CHECK(equal(tighten(r, c), m));
            ++relaxed;
        }
        if (m.bases().size() < 2) continue;
        for (auto b : free_bases(m)) {
            auto t = tighten(m, b);
            auto ch = circuit_hyperplanes(t);
            if (std::find(ch.begin(), ch.end(), b) == ch.end()) continue;
            CHECK(equal(relax(t, b), m));
            ++tightened;
        }
    }
    CHECK(relaxed > 0);
    CHECK(tightened > 0);
}

TEST_CASE("query-mode relax/tighten views match explicit results") {
    std::mt19937 rng(3);
    for (int i = 0; i < 10; ++i) {
        auto m = random_sparse_paving(7, 3, rng);
        for (auto c : circuit_hyperplanes(m)) {
            auto view = relax_view(borrow(m), c);
            auto expl = relax(m, c);
            for (std::uint32_t s = 0; s < (1u << 7); ++s) CHECK(view->rank(ElementSet(s)) == expl.rank(ElementSet(s)));
            auto back = tighten_view(view, c);
            for (std::uint32_t s = 0; s < (1u << 7); ++s) CHECK(back->rank(ElementSet(s)) == m.rank(ElementSet(s)));
        }
    }
}

TEST_CASE("rank is monotone and submodular") {
    for (const auto& m : random_matroids(20, 17)) {
        const std::uint32_t count = 1u << m.size();
        for (std::uint32_t a = 0; a < count; ++a) {
            for (int x = 0; x < m.size(); ++x) CHECK(m.rank(ElementSet(a)) <= m.rank(ElementSet(a).with(x)));
        }
        std::mt19937 rng(1);
        for (int t = 0; t < 2000; ++t) {
            const ElementSet a(rng() & (count - 1)), b(rng() & (count - 1));
            CHECK(m.rank(a | b) + m.rank(a & b) <= m.rank(a) + m.rank(b));
        }
    }
}

TEST_CASE("equality and duality") {
    auto u23 = uniform_matroid(2, 3);
    CHECK(equal(u23, u23));
    CHECK_FALSE(equal(u23, tighten(u23, ElementSet::of({1, 2}))));
    CHECK(equal(dual(uniform_matroid(2, 4)), uniform_matroid(2, 4)));
    CHECK(equal(dual(uniform_matroid(1, 3)), uniform_matroid(2, 3)));
    for (const auto& m : random_matroids(10, 18)) CHECK(equal(dual(dual(m)), m));

    // Equality is by names, not positions.
    ExplicitMatroid a({"p", "q", "r"}, {ElementSet::of({0, 1}), ElementSet::of({0, 2})});
    ExplicitMatroid b({"r", "q", "p"}, {ElementSet::of({2, 1}), ElementSet::of({2, 0})});
    CHECK(equal(a, b));
    CHECK_THROWS_AS(equal(a, uniform_matroid(2, 3)), InputError);
}

TEST_CASE("construction rejects non-matroids") {
    // {12, 34} violates exchange.
    CHECK_THROWS_AS(ExplicitMatroid({"1", "2", "3", "4"}, {ElementSet::of({0, 1}), ElementSet::of({2, 3})}), InputError);
    CHECK_THROWS_AS(ExplicitMatroid({"1", "2"}, {ElementSet::of({0}), ElementSet::of({0, 1})}), InputError);
    CHECK_THROWS_AS(ExplicitMatroid({"1", "1"}, {ElementSet::of({0})}), InputError);
    CHECK_THROWS_AS(ExplicitMatroid({"1"}, {}), InputError);
    std::vector<std::string> many;
    for (int i = 0; i < 33; ++i) many.push_back("e" + std::to_string(i));
    CHECK_THROWS_AS(ExplicitMatroid(many, {ElementSet{}}), InputError);
}

TEST_CASE("text format round trip") {
    for (const auto& m : random_matroids(15, 19)) {
        const std::string text = to_text(m);
        auto back = matroid_from_text(text);
        CHECK(equal(back, m));
        CHECK(to_text(back) == text);
    }
    auto zero = uniform_matroid(0, 2);
    CHECK(to_text(matroid_from_text(to_text(zero))) == to_text(zero));

    auto from_c = matroid_from_text("# U24 by circuits\nGROUND 4\n1 2 3 4\nRANK 2\nCIRCUITS 4\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n");
    CHECK(equal(from_c, uniform_matroid(2, 4)));
}

TEST_CASE("text format errors carry line numbers") {
    try {
        matroid_from_text("GROUND 2\na b\nRANK 1\nBASES 1\nc\n");
        FAIL("expected parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 5);
    }
    CHECK_THROWS_AS(matroid_from_text("GROUND 2\na b\nRANK x\n"), ParseError);
    CHECK_THROWS_AS(matroid_from_text("GROUND 2\na b\nRANK 1\nBASES 2\na\n"), ParseError);
    CHECK_THROWS_AS(matroid_from_text("GROUND 3\na b c\nRANK 2\nCIRCUITS 2\na b\nb c\n"), ParseError);
}
