#ifndef TORUSASYM_CHERN_SIMONS_HPP
#define TORUSASYM_CHERN_SIMONS_HPP

#include "charvar.hpp"
#include "precision.hpp"
#include <stdexcept>
#include <vector>

namespace torusasym {

struct BaseMismatch : std::runtime_error {
    BaseMismatch() : std::runtime_error("bundle points project to different boundary characters") {}
};

// point of the quotient C*-bundle over the boundary torus: [gamma_mu, gamma_lambda; z]
struct BundlePoint {
    Cplx gamma_mu, gamma_lambda, z;
};

// group actions generating the equivalence:
//   x: (a,b;z) -> (a+1, b; z e^{2 pi i b})
//   y: (a,b;z) -> (a, b+1; z e^{-2 pi i a})
//   b: (a,b;z) -> (-a, -b; z)
inline BundlePoint act_x(const BundlePoint& bp) {
    Cplx one{Real(1), Real(0)};
    Cplx ph = cexp(Cplx{-Real(2) * pi_value() * bp.gamma_lambda.im,
                        Real(2) * pi_value() * bp.gamma_lambda.re});
    return {bp.gamma_mu + one, bp.gamma_lambda, bp.z * ph};
}

inline BundlePoint act_y(const BundlePoint& bp) {
    Cplx one{Real(1), Real(0)};
    Cplx ph = cexp(Cplx{Real(2) * pi_value() * bp.gamma_mu.im,
                        -Real(2) * pi_value() * bp.gamma_mu.re});
    return {bp.gamma_mu, bp.gamma_lambda + one, bp.z * ph};
}

inline BundlePoint act_b(const BundlePoint& bp) {
    return {Cplx{-bp.gamma_mu.re, -bp.gamma_mu.im},
            Cplx{-bp.gamma_lambda.re, -bp.gamma_lambda.im}, bp.z};
}

namespace detail {
// integer-translate into Re gamma_mu in [0,1), Re gamma_lambda in [-1/2,1/2);
// [a,b;z] = [a+m, b+n; z e^{2 pi i (m b - n a)}] for integers m,n
inline BundlePoint translate_to_domain(const BundlePoint& bp) {
    long m = static_cast<long>(floor(bp.gamma_mu.re));
    long n = static_cast<long>(floor(bp.gamma_lambda.re + Real(1) / 2));
    if (m == 0 && n == 0) return bp;
    Cplx w = bp.gamma_mu * Real(n) - bp.gamma_lambda * Real(m); // exponent of e^{2 pi i .}
    Cplx ph = cexp(Cplx{-Real(2) * pi_value() * w.im, Real(2) * pi_value() * w.re});
    return {bp.gamma_mu - Cplx{Real(m), Real(0)}, bp.gamma_lambda - Cplx{Real(n), Real(0)},
            bp.z * ph};
}

inline int lex_compare(const BundlePoint& a, const BundlePoint& b) {
    const Real* av[4] = {&a.gamma_mu.re, &a.gamma_lambda.re, &a.gamma_mu.im, &a.gamma_lambda.im};
    const Real* bv[4] = {&b.gamma_mu.re, &b.gamma_lambda.re, &b.gamma_mu.im, &b.gamma_lambda.im};
    for (int i = 0; i < 4; ++i) {
        if (*av[i] < *bv[i]) return -1;
        if (*av[i] > *bv[i]) return 1;
    }
    return 0;
}
} // namespace detail

// canonical orbit representative: of the two b-related candidates translated into the
// fundamental domain, keep the lexicographically larger base; deterministic and idempotent
inline BundlePoint normalize(const BundlePoint& bp) {
    BundlePoint a = detail::translate_to_domain(bp);
    BundlePoint b = detail::translate_to_domain(act_b(bp));
    return detail::lex_compare(b, a) > 0 ? b : a;
}

inline bool equivalent(const BundlePoint& bp1, const BundlePoint& bp2, const Real& tol) {
    BundlePoint a = normalize(bp1), b = normalize(bp2);
    return cabs(a.gamma_mu - b.gamma_mu) <= tol && cabs(a.gamma_lambda - b.gamma_lambda) <= tol &&
           cabs(a.z - b.z) <= tol;
}

inline Real default_base_tol() {
    long D = static_cast<long>(Real::default_precision());
    return pow(Real(10), -Real(D - 8));
}

// <[g,g';z],[g,g';w]> = z/w on a common lift
inline Cplx inner_product(const BundlePoint& bp_M, const BundlePoint& bp_W, const Real& tol) {
    BundlePoint a = normalize(bp_M), b = normalize(bp_W);
    if (cabs(a.gamma_mu - b.gamma_mu) > tol || cabs(a.gamma_lambda - b.gamma_lambda) > tol)
        throw BaseMismatch();
    return a.z / b.z;
}

inline Cplx inner_product(const BundlePoint& bp_M, const BundlePoint& bp_W) {
    return inner_product(bp_M, bp_W, default_base_tol());
}

// ----- exact rational layer: base coordinates rational, fiber e^{i pi phase2} -----

struct RatBundlePoint {
    Rat gamma_mu, gamma_lambda;
    Rat phase2; // fiber = e^{i pi phase2}, kept in [0,2)
};

inline BundlePoint to_complex(const RatBundlePoint& rp) {
    return {Cplx{Real(rp.gamma_mu), Real(0)}, Cplx{Real(rp.gamma_lambda), Real(0)},
            polar_pi(rp.phase2)};
}

namespace detail {
// K = beta p s + eps alpha q r with p s - q r = 1; the fiber exponent does not
// depend on eps because K_+^2 - K_-^2 = 4 pq alpha beta s r
inline Rat knot_lift_phase2(const TorusKnot& K, const CharVarComponent& c, const Rat& gamma_mu) {
    long s, r;
    bezout_ps_qr(K.p, K.q, s, r);
    long abar = ((c.alpha % 2) + 2) % 2;
    auto expo = [&](int eps) {
        Int k = Int(c.beta) * K.p * s + Int(eps) * c.alpha * K.q * r;
        return rat_mod2(Rat(k * k, 2 * K.pq()) - Rat(abar) * gamma_mu);
    };
    Rat plus = expo(+1), minus = expo(-1);
    if (plus != minus) throw std::logic_error("knot lift fiber depends on the sign choice");
    return plus;
}
} // namespace detail

// [gamma_mu, abar/2 - pq gamma_mu; e^{2 pi i (K^2/4pq - abar gamma_mu/2)}], abar = alpha mod 2
inline RatBundlePoint knot_exterior_lift_exact(const TorusKnot& K, const CharVarComponent& c,
                                               const Rat& gamma_mu) {
    long abar = ((c.alpha % 2) + 2) % 2;
    return {gamma_mu, Rat(abar, 2) - Rat(K.pq()) * gamma_mu,
            detail::knot_lift_phase2(K, c, gamma_mu)};
}

inline BundlePoint knot_exterior_lift(const TorusKnot& K, const CharVarComponent& c,
                                      const Cplx& gamma_mu) {
    long abar = ((c.alpha % 2) + 2) % 2;
    Cplx gl = Cplx{Real(abar) / 2, Real(0)} - gamma_mu * Real(K.pq());
    Rat k2 = detail::knot_lift_phase2(K, c, Rat(0)); // K^2/(2pq) mod 2
    // fiber = e^{i pi (K^2/2pq)} * e^{-i pi abar gamma_mu}
    Cplx z = polar_pi(k2) * cexp(Cplx{pi_value() * abar * gamma_mu.im,
                                      -pi_value() * abar * gamma_mu.re});
    return {gamma_mu, gl, z};
}

// [n/2, gamma_lambda; e^{i pi n gamma_lambda}]
inline BundlePoint orbifold_lift(long n, const Cplx& gamma_lambda) {
    Cplx z = cexp(Cplx{-pi_value() * n * gamma_lambda.im, pi_value() * n * gamma_lambda.re});
    return {Cplx{Real(n) / 2, Real(0)}, gamma_lambda, z};
}

inline RatBundlePoint orbifold_lift_exact(long n, const Rat& gamma_lambda) {
    return {Rat(n, 2), gamma_lambda, rat_mod2(Rat(n) * gamma_lambda)};
}

// ----- Kirk-Klassen transport along affine segments -----

struct PathSegment {
    Cplx mu0, lambda0, mu1, lambda1;
};

// z(1)/z(0) over one affine segment is exp(2 pi i (mu0 lambda1 - mu1 lambda0))
inline Cplx kirk_klassen_transport(const std::vector<PathSegment>& path, const Cplx& z_start) {
    Cplx z = z_start;
    for (const auto& s : path) {
        Cplx w = s.mu0 * s.lambda1 - s.mu1 * s.lambda0;
        z = z * cexp(Cplx{-Real(2) * pi_value() * w.im, Real(2) * pi_value() * w.re});
    }
    return z;
}

struct RatPathSegment {
    Rat mu0, lambda0, mu1, lambda1;
};

// exact transport phase: z(end)/z(start) = e^{i pi t}, t returned in [0,2)
inline Rat kirk_klassen_phase2(const std::vector<RatPathSegment>& path) {
    Rat t = 0;
    for (const auto& s : path) t += Rat(2) * (s.mu0 * s.lambda1 - s.mu1 * s.lambda0);
    return rat_mod2(t);
}

// ----- Chern-Simons invariant on the chi(mu) = +-2 characters -----

enum class CharacterSign { plus, minus };

// closed forms: CS(chi^+) = e^{i pi (k-)^2 / 2pq}, CS(chi^-) = e^{-i pi (pq-k+)^2 / 2pq};
// returned as the exact exponent t in [0,2) with CS = e^{i pi t}
inline Rat cs_invariant_exact(const TorusKnot& K, const CharVarComponent& c, CharacterSign sign) {
    if (sign == CharacterSign::plus) return rat_mod2(Rat(Int(c.k_minus) * c.k_minus, 2 * K.pq()));
    long d = K.pq() - c.k_plus;
    return rat_mod2(-Rat(Int(d) * d, 2 * K.pq()));
}

// pairing of the knot-exterior lift with the orbifold lift; chi^+ pairs at gamma_mu = 0
// with even n as z/w, chi^- at gamma_mu = 1/2 with odd n as w/z
inline Cplx cs_invariant_via_pairing(const TorusKnot& K, const CharVarComponent& c,
                                     CharacterSign sign) {
    Rat gm = sign == CharacterSign::plus ? Rat(0) : Rat(1, 2);
    long n = sign == CharacterSign::plus ? 0 : 1;
    RatBundlePoint knot = knot_exterior_lift_exact(K, c, gm);
    BundlePoint bpM = to_complex(knot);
    BundlePoint bpW = orbifold_lift(n, bpM.gamma_lambda);
    Cplx ip = inner_product(bpM, bpW);
    if (sign == CharacterSign::plus) return ip;
    return Cplx{Real(1), Real(0)} / ip;
}

inline Cplx cs_invariant(const TorusKnot& K, const CharVarComponent& c, CharacterSign sign) {
    Cplx closed = polar_pi(cs_invariant_exact(K, c, sign));
    long D = static_cast<long>(Real::default_precision());
    Real tol = pow(Real(10), -Real(D - 5));
    if (cabs(closed - cs_invariant_via_pairing(K, c, sign)) > tol)
        throw std::logic_error("closed form and pairing construction disagree");
    return closed;
}

} // namespace torusasym

#endif
