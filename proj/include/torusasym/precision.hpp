#ifndef TORUSASYM_PRECISION_HPP
#define TORUSASYM_PRECISION_HPP

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace torusasym {

using Int  = boost::multiprecision::mpz_int;
using Rat  = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::mpfr_float;

struct PrecisionExhausted : std::runtime_error {
    int demanded, cap;
    PrecisionExhausted(int demanded_, int cap_)
        : std::runtime_error("working precision demand " + std::to_string(demanded_) +
                             " digits exceeds cap " + std::to_string(cap_)),
          demanded(demanded_), cap(cap_) {}
};

inline int max_precision_cap() {
    if (const char* s = std::getenv("TORUSASYM_MAX_PRECISION")) {
        int v = std::atoi(s);
        if (v > 0) return v;
    }
    return 2000;
}

// Sets the global mpfr working precision (decimal digits), restores on scope exit.
class ScopedPrecision {
    unsigned saved_;
public:
    explicit ScopedPrecision(int digits) : saved_(Real::default_precision()) {
        if (digits > max_precision_cap()) throw PrecisionExhausted(digits, max_precision_cap());
        Real::default_precision(static_cast<unsigned>(digits));
    }
    ~ScopedPrecision() { Real::default_precision(saved_); }
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;
};

inline Real pi_value() {
    Real p;
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    return p;
}

// Minimal complex type over Real (MPC is not assumed available).
struct Cplx {
    Real re, im;
    Cplx() : re(0), im(0) {}
    Cplx(Real r) : re(std::move(r)), im(0) {}
    Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Cplx(int r) : re(r), im(0) {}

    Cplx operator-() const { return {-re, -im}; }
    friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cplx operator*(const Cplx& a, const Cplx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cplx operator*(const Real& s, const Cplx& a) { return {s * a.re, s * a.im}; }
    friend Cplx operator/(const Cplx& a, const Cplx& b) {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    Cplx& operator+=(const Cplx& b) { re += b.re; im += b.im; return *this; }
    Cplx& operator-=(const Cplx& b) { re -= b.re; im -= b.im; return *this; }
    Cplx& operator*=(const Cplx& b) { *this = *this * b; return *this; }
    Cplx conj() const { return {re, -im}; }
};

inline Real cabs(const Cplx& a) { return boost::multiprecision::hypot(a.re, a.im); }

inline Cplx cexp(const Cplx& a) {
    Real m = boost::multiprecision::exp(a.re);
    return {m * boost::multiprecision::cos(a.im), m * boost::multiprecision::sin(a.im)};
}

inline Cplx csinh(const Cplx& a) {
    using boost::multiprecision::sinh;
    using boost::multiprecision::cosh;
    using boost::multiprecision::sin;
    using boost::multiprecision::cos;
    return {sinh(a.re) * cos(a.im), cosh(a.re) * sin(a.im)};
}

// r mod 2, result in [0,2)
inline Rat rat_mod2(const Rat& r) {
    Int n = boost::multiprecision::numerator(r), d = boost::multiprecision::denominator(r);
    Int two_d = 2 * d;
    Int m = n % two_d;
    if (m < 0) m += two_d;
    return Rat(m, d);
}

// e^{i*pi*r} with the angle reduced exactly in rational arithmetic first
inline Cplx polar_pi(const Rat& r) {
    Real theta = pi_value() * Real(rat_mod2(r));
    return {boost::multiprecision::cos(theta), boost::multiprecision::sin(theta)};
}

inline Real sin_pi(const Rat& r) {
    return boost::multiprecision::sin(pi_value() * Real(rat_mod2(r)));
}

inline Real cos_pi(const Rat& r) {
    return boost::multiprecision::cos(pi_value() * Real(rat_mod2(r)));
}

// i^e, exact
inline Cplx i_pow(const Int& e) {
    Int m = e % 4;
    if (m < 0) m += 4;
    switch (static_cast<int>(m)) {
        case 0: return {Real(1), Real(0)};
        case 1: return {Real(0), Real(1)};
        case 2: return {Real(-1), Real(0)};
        default: return {Real(0), Real(-1)};
    }
}

inline int parity_sign(const Int& e) { return (e % 2) != 0 ? -1 : 1; }

} // namespace torusasym

#endif
