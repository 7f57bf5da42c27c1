#ifndef TORUSASYM_TORSION_HPP
#define TORUSASYM_TORSION_HPP

#include "charvar.hpp"
#include "precision.hpp"
#include <stdexcept>
#include <string>

namespace torusasym {

struct PoleProximity : std::runtime_error {
    long nearest_k;
    explicit PoleProximity(long k)
        : std::runtime_error("evaluation point within guard distance of the pole at i*pi*" +
                             std::to_string(k) + "/pq"),
          nearest_k(k) {}
};

namespace detail {
// distance from z to the nearest pole i*pi*k/pq (k a nonzero multiple of neither p nor q);
// returns the k of the nearest genuine pole, or 0 if none is close enough to matter
inline long nearest_pole_index(const TorusKnot& K, const Cplx& z, const Real& guard) {
    const Real pi = pi_value();
    long pq = K.pq();
    // candidate k from rounding Im(z)*pq/pi
    Real kf = z.im * pq / pi;
    long k0 = static_cast<long>(floor(kf + Real(0.5)));
    for (long k = k0 - 1; k <= k0 + 1; ++k) {
        if (k == 0 || k % K.p == 0 || k % K.q == 0) continue;
        Cplx pole{Real(0), pi * k / pq};
        if (cabs(z - pole) < guard) return k;
    }
    return 0;
}
} // namespace detail

// tau(z) = 2 sinh(pz) sinh(qz) / sinh(pq z)
inline Cplx tau_eval(const TorusKnot& K, const Cplx& z) {
    unsigned D = Real::default_precision();
    Real guard = pow(Real(10), -Real(static_cast<long>(D) / 2));
    if (long k = detail::nearest_pole_index(K, z, guard))
        throw PoleProximity(k);
    return (csinh(z * Real(K.p)) * csinh(z * Real(K.q)) * Real(2)) / csinh(z * Real(K.pq()));
}

// independent route: tau(z) = 2 sinh(z) / Delta(e^{2z})
inline Cplx tau_eval_via_alexander(const TorusKnot& K, const Cplx& z) {
    auto Delta = alexander_polynomial(K);
    return (csinh(z) * Real(2)) / Delta.eval(cexp(z * Real(2)));
}

// Res_{z=i*pi*k/pq} tau = (-1)^{k+1} (2/pq) sin(pi k/p) sin(pi k/q), exact trig form
inline Cplx tau_residue(const TorusKnot& K, long k) {
    if (k % K.p == 0 || k % K.q == 0)
        throw InvalidKnotParameter("no pole: k divisible by p or q");
    Real s = sin_pi(Rat(k, K.p)) * sin_pi(Rat(k, K.q)) * Real(2) / K.pq();
    if (k % 2 == 0) s = -s;
    return Cplx{s, Real(0)};
}

// oracle: (1/2pi i) * contour integral of tau on a small circle around the pole,
// trapezoid rule on M nodes; shares only tau_eval with the closed form above
inline Cplx tau_residue_contour(const TorusKnot& K, long k, int M = 256) {
    const Real pi = pi_value();
    Cplx center{Real(0), pi * k / K.pq()};
    Real r = pi * Real(3) / (Real(10) * K.pq());
    Cplx acc{Real(0), Real(0)};
    for (int j = 0; j < M; ++j) {
        Real theta = Real(2) * pi * j / M;
        Cplx w = cexp(Cplx{Real(0), theta}) * r; // z - center
        acc = acc + tau_eval(K, center + w) * w;
    }
    return acc / Real(M); // (1/2pi i) * sum f(z_j) * i*w_j * (2pi/M)
}

// T_lambda = (16/p^2 q^2) sin^2(pi alpha/p) sin^2(pi beta/q)
inline Real nonabelian_torsion(const TorusKnot& K, const CharVarComponent& c) {
    Real sa = sin_pi(Rat(c.alpha, K.p));
    Real sb = sin_pi(Rat(c.beta, K.q));
    return Real(16) / (Real(K.p) * K.p * K.q * K.q) * sa * sa * sb * sb;
}

// (2 Res tau)^2 = T_lambda at both bifurcation points of the component
inline bool verify_residue_theorem(const TorusKnot& K, const CharVarComponent& c) {
    unsigned D = Real::default_precision();
    Real tol = pow(Real(10), -(Real(static_cast<long>(D)) - 5));
    Real T = nonabelian_torsion(K, c);
    for (long k : {c.k_minus, c.k_plus}) {
        Cplx res = tau_residue(K, k);
        Real lhs = Real(4) * res.re * res.re;
        if (fabs(lhs - T) > tol * fmax(Real(1), fabs(T))) return false;
    }
    return true;
}

// (t-1)(1/t-1) / (Delta'(t) Delta'(1/t)) at t = e^{2 i pi k / pq}; |.| recovers T_lambda
inline Cplx torsion_at_bifurcation_via_derivative(const TorusKnot& K, long k) {
    if (k % K.p == 0 || k % K.q == 0)
        throw InvalidKnotParameter("t = e^{2 i pi k/pq} must be a simple root of Delta");
    auto Delta = alexander_polynomial(K);
    auto Dp = Delta.derivative();
    Cplx t = polar_pi(Rat(2 * k, K.pq()));
    Cplx tinv = polar_pi(Rat(-2 * k, K.pq()));
    Cplx one{Real(1), Real(0)};
    return ((t - one) * (tinv - one)) / (Dp.eval(t) * Dp.eval(tinv));
}

// -tau(z) tau(-z); tau is odd so this equals tau(z)^2
inline Cplx abelian_torsion_product(const TorusKnot& K, const Cplx& z) {
    Cplx a = tau_eval(K, z);
    Cplx b = tau_eval(K, Cplx{-z.re, -z.im});
    return (a * b) * Real(-1);
}

} // namespace torusasym

#endif
