#ifndef TORUSASYM_EXACT_HPP
#define TORUSASYM_EXACT_HPP

#include "precision.hpp"
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace torusasym {

struct NotCoprime : std::invalid_argument {
    NotCoprime(long p, long q)
        : std::invalid_argument("p=" + std::to_string(p) + ", q=" + std::to_string(q) +
                                " are not coprime (or equal)") {}
};
struct InvalidKnotParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TorusKnot {
    long p, q; // canonical: 1 < p < q, gcd = 1
    long pq() const { return p * q; }
};

inline TorusKnot make_torus_knot(long p, long q) {
    if (p <= 1 || q <= 1) throw InvalidKnotParameter("torus knot parameters must exceed 1");
    if (p > q) std::swap(p, q);
    if (p == q || std::gcd(p, q) != 1) throw NotCoprime(p, q);
    return TorusKnot{p, q};
}

// p*s - q*r = 1 with 0 < s < q (extended Euclid: s = p^{-1} mod q)
inline void bezout_ps_qr(long p, long q, long& s, long& r) {
    long a = q, b = p % q, x0 = 0, x1 = 1;
    while (b != 0) {
        long qu = a / b;
        long tmp = a - qu * b; a = b; b = tmp;
        tmp = x0 - qu * x1; x0 = x1; x1 = tmp;
    }
    s = ((x0 % q) + q) % q;
    r = (p * s - 1) / q;
}

// Laurent polynomial with rational coefficients, symmetric about exponent 0.
struct SymmetricLaurentPolynomial {
    std::map<long, Rat> coeff; // exponent -> coefficient, nonzero entries only

    Rat coefficient(long e) const {
        auto it = coeff.find(e);
        return it == coeff.end() ? Rat(0) : it->second;
    }
    bool is_symmetric() const {
        for (const auto& [e, c] : coeff)
            if (coefficient(-e) != c) return false;
        return true;
    }
    long degree_span() const {
        if (coeff.empty()) return 0;
        return coeff.rbegin()->first - coeff.begin()->first;
    }
    Rat eval_one() const {
        Rat s(0);
        for (const auto& [e, c] : coeff) s += c;
        return s;
    }
    // value at t given as a complex number
    Cplx eval(const Cplx& t) const {
        // split into t^e and t^{-e} parts to avoid forming high inverse powers twice
        Cplx s{Real(0), Real(0)};
        for (const auto& [e, c] : coeff) {
            Cplx tp{Real(1), Real(0)};
            Cplx base = (e >= 0) ? t : Cplx{Real(1), Real(0)} / t;
            for (long i = 0; i < std::labs(e); ++i) tp *= base;
            s += Cplx{Real(c), Real(0)} * tp;
        }
        return s;
    }
    // formal derivative d/dt, another Laurent polynomial
    SymmetricLaurentPolynomial derivative() const {
        SymmetricLaurentPolynomial d;
        for (const auto& [e, c] : coeff)
            if (e != 0) d.coeff[e - 1] = c * e;
        return d;
    }
};

namespace detail {
// dense ascending-exponent integer polynomial helpers for the Alexander division
inline std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> c(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}
inline std::vector<Int> poly_tn_minus_1(long n) { // t^n - 1
    std::vector<Int> v(n + 1, Int(0));
    v[0] = -1; v[n] = 1;
    return v;
}
// exact division, throws if a remainder appears
inline std::vector<Int> poly_div(std::vector<Int> num, const std::vector<Int>& den) {
    std::vector<Int> quo(num.size() - den.size() + 1, Int(0));
    for (long i = static_cast<long>(quo.size()) - 1; i >= 0; --i) {
        Int c = num[i + den.size() - 1] / den.back();
        quo[i] = c;
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (const auto& r : num)
        if (r != 0) throw std::logic_error("inexact polynomial division");
    return quo;
}
} // namespace detail

// Alexander polynomial of T(p,q), recentered so that coefficient(e) = coefficient(-e)
// and value 1 at t = 1:  (t^{pq}-1)(t-1) / ((t^p-1)(t^q-1)) * t^{-(p-1)(q-1)/2}
inline SymmetricLaurentPolynomial alexander_polynomial(const TorusKnot& K) {
    using namespace detail;
    auto num = poly_mul(poly_tn_minus_1(K.pq()), poly_tn_minus_1(1));
    auto den = poly_mul(poly_tn_minus_1(K.p), poly_tn_minus_1(K.q));
    auto quo = poly_div(std::move(num), den);
    long half = (K.p - 1) * (K.q - 1) / 2; // (p-1)(q-1) is even
    SymmetricLaurentPolynomial P;
    for (size_t i = 0; i < quo.size(); ++i)
        if (quo[i] != 0) P.coeff[static_cast<long>(i) - half] = Rat(quo[i]);
    return P;
}

// Taylor coefficients c_0..c_order, exact rationals.
struct RationalSeries {
    std::vector<Rat> c;
    long order() const { return static_cast<long>(c.size()) - 1; }
};

namespace detail {
// series of sinh(a z) up to z^order
inline std::vector<Rat> sinh_series(long a, long order) {
    std::vector<Rat> s(order + 1, Rat(0));
    Rat term(a); // a^{2k+1}/(2k+1)!, k = 0
    for (long m = 1; m <= order; m += 2) {
        s[m] = term;
        term *= Rat(Int(a) * Int(a), Int(m + 1) * Int(m + 2));
    }
    return s;
}
inline std::vector<Rat> series_mul(const std::vector<Rat>& a, const std::vector<Rat>& b, long order) {
    std::vector<Rat> c(order + 1, Rat(0));
    for (long i = 0; i <= order; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; i + j <= order; ++j)
            if (b[j] != 0) c[i + j] += a[i] * b[j];
    }
    return c;
}
// a / b where b has valuation v (b[v] != 0) and a has valuation >= v
inline std::vector<Rat> series_div(const std::vector<Rat>& a, const std::vector<Rat>& b, long v, long order) {
    std::vector<Rat> q(order + 1, Rat(0));
    std::vector<Rat> rem = a;
    for (long n = 0; n <= order; ++n) {
        q[n] = rem[n + v] / b[v];
        if (q[n] == 0) continue;
        for (long j = v; n + j <= order + v && j < static_cast<long>(b.size()); ++j)
            rem[n + j] -= q[n] * b[j];
    }
    return q;
}
} // namespace detail

// Taylor series of z * tau_K(z) = 2 z sinh(pz) sinh(qz) / sinh(pqz); even, c_0 = 0.
inline RationalSeries tau_series(const TorusKnot& K, long order) {
    using namespace detail;
    long work = order + 1; // denominator valuation 1 shifts the working window
    auto sp = sinh_series(K.p, work);
    auto sq = sinh_series(K.q, work);
    auto spq = sinh_series(K.pq(), work);
    auto num = series_mul(sp, sq, work); // valuation 2
    for (auto& x : num) x *= 2;
    // (2 sinh(pz) sinh(qz)) / sinh(pqz) has valuation 1; multiply by z afterwards
    auto quo = series_div(num, spq, 1, work - 1);
    RationalSeries S;
    S.c.assign(order + 1, Rat(0));
    for (long m = 1; m <= order; ++m) S.c[m] = quo[m - 1];
    return S;
}

inline Int int_factorial(long n) {
    Int f(1);
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

// a_n = (2n)! * c_{2n}, the even-derivative values of z*tau at 0
inline std::vector<Rat> a_coefficients(const TorusKnot& K, long n_max) {
    auto S = tau_series(K, 2 * n_max);
    std::vector<Rat> a(n_max + 1, Rat(0));
    for (long n = 0; n <= n_max; ++n) a[n] = Rat(int_factorial(2 * n)) * S.c[2 * n];
    return a;
}

} // namespace torusasym

#endif
