#ifndef TORUSASYM_QUADRATURE_HPP
#define TORUSASYM_QUADRATURE_HPP

#include "torsion.hpp"
#include <vector>

namespace torusasym {

struct QuadratureParameters {
    Real phi;                // path angle, x -> x e^{i phi}
    Real R;                  // truncation radius on the real parameter
    long node_budget = 0;    // cap on trapezoid intervals
    int working_precision = 0; // decimal digits
};

struct QuadratureResult {
    Cplx value;
    Real error_estimate;
    Real truncation_bound;   // size of the discarded tails |x| > R
    Real refinement_delta;   // change at the last node doubling
    long nodes_used = 0;
    int working_precision = 0;
    Real path_angle;
    Real truncation_radius;
};

namespace detail {
inline constexpr int quad_guard_digits = 10;
} // namespace detail

// phi in (0, pi/2); R kills the Gaussian tail to 10^{-(target+guard)}; the working
// precision absorbs the integrand's interior peak exp(pi pq N cos^2 phi / (2 sin 2phi))
inline QuadratureParameters choose_parameters(const TorusKnot& K, long N, int target_digits,
                                              const Real& phi) {
    QuadratureParameters P;
    P.phi = phi;
    Real ln10 = log(Real(10));
    Real c = Real(target_digits + detail::quad_guard_digits) * ln10 / (pi_value() * K.pq() * N);
    Real cphi = cos(phi), s2phi = sin(2 * phi);
    // R cos(phi) - R^2 sin(2 phi)/2 = -c, root beyond the integrand's maximum
    P.R = (cphi + sqrt(cphi * cphi + 2 * s2phi * c)) / s2phi;
    Real peak_digits = pi_value() * K.pq() * N * cphi * cphi / (2 * s2phi) / ln10;
    P.working_precision = target_digits + detail::quad_guard_digits +
                          static_cast<int>(ceil(peak_digits)) + 10;
    // oscillation wavelength ~ 2/(pq N R): a few nodes per oscillation times digit demand
    P.node_budget = 1L << 24;
    return P;
}

inline QuadratureParameters choose_parameters(const TorusKnot& K, long N, int target_digits) {
    return choose_parameters(K, N, target_digits, pi_value() / 4);
}

namespace detail {
// integrand after substituting z = x e^{i phi}:  e^{pi pq N (z + i z^2/2)} z^2 tau(pi z) e^{i phi}
inline Cplx quad_integrand(const TorusKnot& K, long N, const Cplx& ephi, const Real& x) {
    if (x == 0) return Cplx{Real(0), Real(0)}; // z^2 tau(pi z) vanishes cubically at 0
    Cplx z = ephi * x;
    Cplx w = (z + Cplx{Real(0), Real(1)} * z * z * (Real(1) / 2)) * (pi_value() * K.pq() * N);
    return cexp(w) * z * z * tau_eval(K, z * pi_value()) * ephi;
}
} // namespace detail

// <T(p,q)>_N = (1/2) (pqN/2)^{3/2} e^{-i pi/2N (p/q + q/p + N/2)} Int_C e^{pi pq N (z + i z^2/2)} z^2 tau(pi z) dz
// on the ray path z = x e^{i phi}; trapezoid rule with node doubling until stable
inline QuadratureResult kashaev_integral(const TorusKnot& K, long N, int target_digits,
                                         const Real& phi_in = Real(0), bool reverse_nodes = false) {
    if (N < 2) throw InvalidKnotParameter("N must be at least 2");
    if (target_digits < 10) throw InvalidKnotParameter("target_digits must be at least 10");
    Real phi = phi_in == 0 ? pi_value() / 4 : phi_in;
    QuadratureParameters P = choose_parameters(K, N, target_digits, phi);
    ScopedPrecision scope(P.working_precision);
    // recompute at working precision
    phi = phi_in == 0 ? pi_value() / 4 : Real(phi_in);
    P = choose_parameters(K, N, target_digits, phi);
    Cplx ephi = cexp(Cplx{Real(0), phi});

    Real tol = pow(Real(10), -Real(target_digits));
    // initial step from the trapezoid pole bound: nearest pole of tau(pi z) sits at
    // distance cos(phi)/pq from the path, error ~ e^{-2 pi d / h}
    Real d = cos(phi) / K.pq();
    Real h_est = 2 * pi_value() * d / (log(Real(10)) * Real(P.working_precision));
    long M = 64;
    while (Real(2) * P.R / M > h_est && M < P.node_budget) M *= 2;

    auto trapezoid = [&](long m) {
        Real h = Real(2) * P.R / m;
        std::vector<Cplx> vals(m + 1);
        if (reverse_nodes) {
            for (long j = m; j >= 0; --j) vals[j] = detail::quad_integrand(K, N, ephi, -P.R + h * j);
        } else {
            for (long j = 0; j <= m; ++j) vals[j] = detail::quad_integrand(K, N, ephi, -P.R + h * j);
        }
        Cplx s = (vals[0] + vals[m]) * (Real(1) / 2);
        for (long j = 1; j < m; ++j) s = s + vals[j]; // fixed ascending order
        return s * h;
    };

    Cplx I = trapezoid(M);
    Real delta;
    for (;;) {
        if (2 * M > P.node_budget)
            throw std::runtime_error("node budget exhausted before quadrature convergence");
        Cplx I2 = trapezoid(2 * M);
        delta = cabs(I2 - I);
        I = I2;
        M *= 2;
        if (delta <= tol * cabs(I)) break;
    }

    Real pref_amp = pow(Real(K.pq()) * N / 2, Real(3) / 2) / 2;
    Real ang = -pi_value() / (2 * N) * (Real(K.p) / K.q + Real(K.q) / K.p + Real(N) / 2);
    Cplx value = cexp(Cplx{Real(0), ang}) * I * pref_amp;

    QuadratureResult R;
    R.value = value;
    R.truncation_bound = pow(Real(10), -Real(target_digits + detail::quad_guard_digits)) *
                         pref_amp * Real(2) * P.R;
    R.refinement_delta = delta * pref_amp;
    R.error_estimate = R.truncation_bound + R.refinement_delta;
    R.nodes_used = M + 1;
    R.working_precision = P.working_precision;
    R.path_angle = phi;
    R.truncation_radius = P.R;
    return R;
}

} // namespace torusasym

#endif
