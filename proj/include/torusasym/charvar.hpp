#ifndef TORUSASYM_CHARVAR_HPP
#define TORUSASYM_CHARVAR_HPP

#include "exact.hpp"
#include <algorithm>
#include <stdexcept>
#include <vector>

namespace torusasym {

struct CharVarComponent {
    int ell = 0;              // 1-based, assigned by ascending (k-, k+)
    long alpha = 0, beta = 0; // 1<=alpha<=p-1, 1<=beta<=q-1, alpha = beta (mod 2)
    long k_minus = 0, k_plus = 0;
    long m = 0;               // (k+ - k-)/2
    long l = 0;               // ((k+)^2 - (k-)^2)/(4pq), a positive integer
    long A_diamond = 0;       // == l
    Rat A_triangle;           // (pq - k+)^2 / (4pq)
    int epsilon = 0;          // (-1)^{[k+/p]+[k+/q]}
};

namespace detail {
// true iff k' = ±k (mod 2n)
inline bool congruent_pm(long k1, long k2, long two_n) {
    return (k1 - k2) % two_n == 0 || (k1 + k2) % two_n == 0;
}

inline void check_component_invariants(const TorusKnot& K, const CharVarComponent& c) {
    long p = K.p, q = K.q, pq = K.pq();
    auto fail = [&](const char* what) {
        throw std::logic_error(std::string("component invariant violated: ") + what);
    };
    if (!(1 <= c.alpha && c.alpha <= p - 1 && 1 <= c.beta && c.beta <= q - 1)) fail("alpha/beta range");
    if ((c.alpha - c.beta) % 2 != 0) fail("alpha = beta (mod 2)");
    if (!(0 < c.k_minus && c.k_minus < c.k_plus && c.k_plus < pq)) fail("0 < k- < k+ < pq");
    for (long k : {c.k_minus, c.k_plus})
        if (k % p == 0 || k % q == 0) fail("k divisible by p or q");
    if ((c.k_plus + c.k_minus) % 2 != 0) fail("k+ +- k- even");
    bool split_a = (c.k_plus + c.k_minus) % p == 0 && (c.k_plus - c.k_minus) % q == 0;
    bool split_b = (c.k_plus + c.k_minus) % q == 0 && (c.k_plus - c.k_minus) % p == 0;
    if (!split_a && !split_b) fail("p,q split of k+ +- k-");
    if (c.m != (c.k_plus - c.k_minus) / 2) fail("m");
    long num = c.k_plus * c.k_plus - c.k_minus * c.k_minus;
    if (num % (4 * pq) != 0 || c.l != num / (4 * pq)) fail("l integrality");
    if (c.l <= 0 || c.m <= 0 || 2 * c.m >= pq) fail("m,l positive, m < pq/2");
    if (c.m % p != 0 && c.m % q != 0) fail("p|m or q|m");
    if ((pq * c.l) % c.m != 0) fail("m | pq l");
    // m^2/pq < l < m - m^2/pq, kept exact
    if (!(Rat(c.m * c.m, pq) < Rat(c.l) && Rat(c.l) < Rat(c.m) - Rat(c.m * c.m, pq))) fail("l window");
    if (c.A_diamond != c.l) fail("A_diamond");
    long d = pq - c.k_plus;
    if (c.A_triangle != Rat(d * d, 4 * pq)) fail("A_triangle");
    int eps = ((c.k_plus / p + c.k_plus / q) % 2 != 0) ? -1 : 1;
    if (c.epsilon != eps) fail("epsilon");
}
} // namespace detail

// scan all admissible k and group each with its unique trace-matching partner
inline std::vector<std::pair<long, long>> bifurcation_pairs_bruteforce(const TorusKnot& K) {
    long p = K.p, q = K.q, pq = K.pq();
    std::vector<long> ks;
    for (long k = 1; k < pq; ++k)
        if (k % p != 0 && k % q != 0) ks.push_back(k);
    std::vector<std::pair<long, long>> pairs;
    std::vector<bool> used(pq, false);
    for (long k : ks) {
        if (used[k]) continue;
        long partner = -1;
        for (long k2 : ks) {
            if (k2 == k) continue;
            if (detail::congruent_pm(k, k2, 2 * p) && detail::congruent_pm(k, k2, 2 * q)) {
                if (partner != -1)
                    throw std::logic_error("multiple bifurcation partners for k=" + std::to_string(k));
                partner = k2;
            }
        }
        if (partner == -1)
            throw std::logic_error("no bifurcation partner for k=" + std::to_string(k));
        used[k] = used[partner] = true;
        pairs.emplace_back(std::min(k, partner), std::max(k, partner));
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

namespace detail {
inline CharVarComponent component_from_pair(const TorusKnot& K, long km, long kp) {
    long p = K.p, q = K.q, pq = K.pq();
    CharVarComponent c;
    c.k_minus = km;
    c.k_plus = kp;
    long a = kp % (2 * p);
    c.alpha = std::min(a, 2 * p - a);
    long b = kp % (2 * q);
    c.beta = std::min(b, 2 * q - b);
    c.m = (kp - km) / 2;
    c.l = (kp * kp - km * km) / (4 * pq);
    c.A_diamond = c.l;
    c.A_triangle = Rat((pq - kp) * (pq - kp), 4 * pq);
    c.epsilon = ((kp / p + kp / q) % 2 != 0) ? -1 : 1;
    check_component_invariants(K, c);
    return c;
}
} // namespace detail

inline std::vector<CharVarComponent> enumerate_components(const TorusKnot& K) {
    auto pairs = bifurcation_pairs_bruteforce(K);
    std::vector<CharVarComponent> comps;
    comps.reserve(pairs.size());
    int ell = 1;
    for (auto [km, kp] : pairs) {
        auto c = detail::component_from_pair(K, km, kp);
        c.ell = ell++;
        comps.push_back(std::move(c));
    }
    if (static_cast<long>(comps.size()) != (K.p - 1) * (K.q - 1) / 2)
        throw std::logic_error("component count mismatch");
    return comps;
}

// (k-, k+) for a given parameter pair via the trace-matching congruences
inline std::pair<long, long> attach_points(const TorusKnot& K, long alpha, long beta) {
    long p = K.p, q = K.q, pq = K.pq();
    if (!(1 <= alpha && alpha <= p - 1 && 1 <= beta && beta <= q - 1) || (alpha - beta) % 2 != 0)
        throw InvalidKnotParameter("alpha/beta violate the component conditions");
    std::vector<long> hits;
    for (long k = 1; k < pq; ++k) {
        if (k % p == 0 || k % q == 0) continue;
        if (detail::congruent_pm(k, alpha, 2 * p) && detail::congruent_pm(k, beta, 2 * q))
            hits.push_back(k);
    }
    if (hits.size() != 2)
        throw std::logic_error("trace-matching characterization did not give a unique pair");
    return {hits[0], hits[1]};
}

// closed form for (2,q): k- = 2l-1, k+ = 2q-2l+1
inline CharVarComponent two_bridge_closed_form(long q, long ell) {
    if (q < 3 || q % 2 == 0) throw InvalidKnotParameter("two-bridge form needs odd q >= 3");
    if (ell < 1 || ell > (q - 1) / 2) throw InvalidKnotParameter("component index out of range");
    TorusKnot K = make_torus_knot(2, q);
    auto c = detail::component_from_pair(K, 2 * ell - 1, 2 * q - 2 * ell + 1);
    c.ell = static_cast<int>(ell);
    // cross-check the remark's own expressions
    if (c.m != q - 2 * ell + 1 || c.A_diamond != (q - 2 * ell + 1) / 2 ||
        c.A_triangle != Rat((2 * ell - 1) * (2 * ell - 1), 8 * q))
        throw std::logic_error("two-bridge closed form mismatch");
    return c;
}

} // namespace torusasym

#endif
