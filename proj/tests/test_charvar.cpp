#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "torusasym/charvar.hpp"

#include <set>

using namespace torusasym;

TEST_CASE("published component table, exact") {
    for (auto [p, q] : {std::pair<long, long>{3, 4}, {3, 5}, {4, 5}, {4, 7}}) {
        auto K = make_torus_knot(p, q);
        auto comps = enumerate_components(K);
        size_t idx = 0;
        for (const auto& g : golden_table()) {
            if (g.p != p || g.q != q) continue;
            REQUIRE(idx < comps.size());
            const auto& c = comps[idx];
            CHECK(c.k_minus == g.km);
            CHECK(c.k_plus == g.kp);
            CHECK(c.m == g.m);
            CHECK(c.A_diamond == g.Ad);
            CHECK(c.A_triangle == Rat(g.num, g.den));
            ++idx;
        }
        CHECK(idx == comps.size());
    }
}

TEST_CASE("component count and partition of admissible k") {
    for (auto [p, q] : coprime_pairs(9)) {
        auto K = make_torus_knot(p, q);
        auto comps = enumerate_components(K);
        CHECK(static_cast<long>(comps.size()) == (p - 1) * (q - 1) / 2);
        std::set<long> seen;
        for (const auto& c : comps) {
            CHECK(seen.insert(c.k_minus).second);
            CHECK(seen.insert(c.k_plus).second);
        }
        // exactly the k in (0, pq) divisible by neither p nor q
        for (long k = 1; k < K.pq(); ++k)
            CHECK(seen.count(k) == (k % p != 0 && k % q != 0 ? 1u : 0u));
    }
}

TEST_CASE("trace-congruence attachment recovers (k-, k+)") {
    for (auto [p, q] : coprime_pairs(9)) {
        auto K = make_torus_knot(p, q);
        for (const auto& c : enumerate_components(K)) {
            auto [km, kp] = attach_points(K, c.alpha, c.beta);
            CHECK(km == c.k_minus);
            CHECK(kp == c.k_plus);
        }
    }
}

TEST_CASE("attach_points rejects invalid parameters") {
    auto K = make_torus_knot(3, 5);
    CHECK_THROWS_AS(attach_points(K, 1, 2), InvalidKnotParameter); // parity mismatch
    CHECK_THROWS_AS(attach_points(K, 3, 1), InvalidKnotParameter); // alpha out of range
}

TEST_CASE("two-bridge closed form agrees with enumeration") {
    for (long q : {3L, 5L, 7L, 9L}) {
        auto K = make_torus_knot(2, q);
        auto comps = enumerate_components(K);
        for (long ell = 1; ell <= (q - 1) / 2; ++ell) {
            auto c = two_bridge_closed_form(q, ell);
            const auto& e = comps[ell - 1];
            CHECK(c.k_minus == e.k_minus);
            CHECK(c.k_plus == e.k_plus);
            CHECK(c.A_diamond == e.A_diamond);
            CHECK(c.A_triangle == e.A_triangle);
            CHECK(c.epsilon == e.epsilon);
        }
    }
}

TEST_CASE("trefoil component") {
    auto comps = enumerate_components(make_torus_knot(2, 3));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].k_minus == 1);
    CHECK(comps[0].k_plus == 5);
    CHECK(comps[0].alpha == 1);
    CHECK(comps[0].beta == 1);
    CHECK(comps[0].A_diamond == 1);
    CHECK(comps[0].A_triangle == Rat(1, 24));
    CHECK(comps[0].epsilon == -1);
}
