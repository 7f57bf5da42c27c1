#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "torusasym/torsion.hpp"

#include <random>

using namespace torusasym;

namespace {
Real tol_at(long drop) {
    return pow(Real(10), -Real(static_cast<long>(Real::default_precision()) - drop));
}
} // namespace

TEST_CASE("the two evaluation routes agree") {
    ScopedPrecision sp(50);
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (auto [p, q] : {std::pair<long, long>{2, 3}, {3, 5}, {4, 7}}) {
        auto K = make_torus_knot(p, q);
        for (int i = 0; i < 20; ++i) {
            Cplx z{Real(u(rng)), Real(u(rng))};
            Cplx a = tau_eval(K, z);
            Cplx b = tau_eval_via_alexander(K, z);
            CHECK(cabs(a - b) < tol_at(8) * (Real(1) + cabs(a)));
        }
    }
}

TEST_CASE("tau is odd") {
    ScopedPrecision sp(50);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto K = make_torus_knot(3, 4);
    for (int i = 0; i < 20; ++i) {
        Cplx z{Real(u(rng)), Real(u(rng))};
        Cplx s = tau_eval(K, z) + tau_eval(K, -z);
        CHECK(cabs(s) < tol_at(8));
    }
}

TEST_CASE("pole guard") {
    ScopedPrecision sp(50);
    auto K = make_torus_knot(2, 3);
    Cplx near_pole{pow(Real(10), Real(-30)), pi_value() / 6}; // pole k=1 at i pi/6
    CHECK_THROWS_AS(tau_eval(K, near_pole), PoleProximity);
    try {
        tau_eval(K, near_pole);
    } catch (const PoleProximity& e) {
        CHECK(e.nearest_k == 1);
    }
}

TEST_CASE("closed-form residue matches the contour oracle") {
    ScopedPrecision sp(50);
    for (auto [p, q] : coprime_pairs(9)) {
        auto K = make_torus_knot(p, q);
        for (long k = 1; k < K.pq(); ++k) {
            if (k % p == 0 || k % q == 0) continue;
            Cplx closed = tau_residue(K, k);
            Cplx contour = tau_residue_contour(K, k);
            CHECK(cabs(closed - contour) < tol_at(10));
        }
    }
}

TEST_CASE("squared residue equals the non-abelian torsion") {
    ScopedPrecision sp(50);
    for (auto [p, q] : coprime_pairs(9)) {
        auto K = make_torus_knot(p, q);
        for (const auto& c : enumerate_components(K)) CHECK(verify_residue_theorem(K, c));
    }
}

TEST_CASE("derivative form at the bifurcation points") {
    ScopedPrecision sp(50);
    for (auto [p, q] : coprime_pairs(9)) {
        auto K = make_torus_knot(p, q);
        for (const auto& c : enumerate_components(K)) {
            Real T = nonabelian_torsion(K, c);
            for (long k : {c.k_minus, c.k_plus}) {
                Cplx meta = torsion_at_bifurcation_via_derivative(K, k);
                CHECK(fabs(cabs(meta) - T) < tol_at(10));
            }
        }
    }
}

TEST_CASE("abelian torsion product equals tau squared") {
    ScopedPrecision sp(50);
    auto K = make_torus_knot(2, 5);
    Cplx z{Real(3) / 10, Real(1) / 5};
    Cplx t = tau_eval(K, z);
    CHECK(cabs(abelian_torsion_product(K, z) - t * t) < tol_at(8));
}

TEST_CASE("residue rejects removable points") {
    auto K = make_torus_knot(3, 4);
    CHECK_THROWS_AS(tau_residue(K, 3), InvalidKnotParameter);
    CHECK_THROWS_AS(torsion_at_bifurcation_via_derivative(K, 4), InvalidKnotParameter);
}
