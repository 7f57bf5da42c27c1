#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "torusasym/quadrature.hpp"

#include <cstdlib>

using namespace torusasym;

TEST_CASE("trefoil anchor at N = 2") {
    ScopedPrecision sp(40);
    auto K = make_torus_knot(2, 3);
    auto r = kashaev_integral(K, 2, 30);
    CHECK(cabs(r.value - Cplx{Real(0), Real(-3)}) < pow(Real(10), Real(-28)));
    CHECK(r.error_estimate < pow(Real(10), Real(-25)));
    CHECK(r.nodes_used > 0);
    CHECK(r.working_precision > 30);
}

TEST_CASE("parameter policy") {
    ScopedPrecision sp(40);
    auto K = make_torus_knot(2, 3);
    auto P = choose_parameters(K, 15, 20);
    // peak exponent pi pq N/4 ~ 70.7 nats ~ 31 digits
    CHECK(P.working_precision >= 20 + 31);
    // R sits beyond the maximum of R cos(phi) - R^2 sin(2 phi)/2
    Real cphi = cos(P.phi), s2phi = sin(2 * P.phi);
    CHECK(P.R > cphi / s2phi);
    Real lhs = P.R * cphi - P.R * P.R * s2phi / 2;
    CHECK(fabs(lhs + Real(30) * log(Real(10)) / (pi_value() * K.pq() * 15)) <
          pow(Real(10), Real(-25)));
}

TEST_CASE("path-angle independence") {
    ScopedPrecision sp(40);
    auto K = make_torus_knot(2, 3);
    for (long N : {3L, 5L, 8L}) {
        auto a = kashaev_integral(K, N, 25);
        auto b = kashaev_integral(K, N, 25, pi_value() / 5);
        CHECK(cabs(a.value - b.value) < pow(Real(10), Real(-24)) * cabs(a.value));
    }
}

TEST_CASE("node order does not change the sum") {
    ScopedPrecision sp(40);
    auto K = make_torus_knot(2, 5);
    auto a = kashaev_integral(K, 3, 20, Real(0), false);
    auto b = kashaev_integral(K, 3, 20, Real(0), true);
    CHECK(a.value.re == b.value.re);
    CHECK(a.value.im == b.value.im);
    CHECK(a.nodes_used == b.nodes_used);
}

TEST_CASE("error estimate decomposes into truncation and refinement parts") {
    ScopedPrecision sp(40);
    auto K = make_torus_knot(2, 3);
    auto r = kashaev_integral(K, 5, 20);
    CHECK(r.error_estimate == r.truncation_bound + r.refinement_delta);
    CHECK(r.truncation_bound >= 0);
    CHECK(r.refinement_delta >= 0);
    CHECK(r.error_estimate < pow(Real(10), Real(-18)) * cabs(r.value));
}

TEST_CASE("precision cap is enforced") {
    auto K = make_torus_knot(2, 3);
    setenv("TORUSASYM_MAX_PRECISION", "40", 1);
    CHECK_THROWS_AS(kashaev_integral(K, 40, 30), PrecisionExhausted);
    unsetenv("TORUSASYM_MAX_PRECISION");
    CHECK_THROWS_AS(kashaev_integral(K, 2, 5), InvalidKnotParameter);
    CHECK_THROWS_AS(kashaev_integral(K, 1, 20), InvalidKnotParameter);
}
