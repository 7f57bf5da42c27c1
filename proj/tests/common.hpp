#ifndef TESTS_COMMON_HPP
#define TESTS_COMMON_HPP

#include "torusasym/exact.hpp"

#include <vector>

// golden rows of the published component table
struct GoldenRow {
    long p, q, km, kp, m, Ad, num, den; // A_triangle = num/den
};

inline const std::vector<GoldenRow>& golden_table() {
    static const std::vector<GoldenRow> rows = {
        {3, 4, 1, 7, 3, 1, 25, 48},    {3, 4, 2, 10, 4, 2, 1, 12},
        {3, 4, 5, 11, 3, 2, 1, 48},    {3, 5, 1, 11, 5, 2, 4, 15},
        {3, 5, 2, 8, 3, 1, 49, 60},    {3, 5, 4, 14, 5, 3, 1, 60},
        {3, 5, 7, 13, 3, 2, 1, 15},    {4, 5, 1, 9, 4, 1, 121, 80},
        {4, 5, 2, 18, 8, 4, 1, 20},    {4, 5, 3, 13, 5, 2, 49, 80},
        {4, 5, 6, 14, 4, 2, 9, 20},    {4, 5, 7, 17, 5, 3, 9, 80},
        {4, 5, 11, 19, 4, 3, 1, 80},   {4, 7, 1, 15, 7, 2, 169, 112},
        {4, 7, 2, 26, 12, 6, 1, 28},   {4, 7, 3, 11, 4, 1, 289, 112},
        {4, 7, 5, 19, 7, 3, 81, 112},  {4, 7, 6, 22, 8, 4, 9, 28},
        {4, 7, 9, 23, 7, 4, 25, 112},  {4, 7, 10, 18, 4, 2, 25, 28},
        {4, 7, 13, 27, 7, 5, 1, 112},  {4, 7, 17, 25, 4, 3, 9, 112},
    };
    return rows;
}

// independent oracle for the tail coefficients: series-divide 2 sinh(z) by the
// exponential series of Delta(e^{2z}); shares no series code with tau_series
inline std::vector<torusasym::Rat> a_oracle(const torusasym::TorusKnot& K, long n_max) {
    using namespace torusasym;
    long order = 2 * n_max + 1;
    auto Delta = alexander_polynomial(K);
    std::vector<Rat> D(order + 1, Rat(0));
    for (const auto& [e, c] : Delta.coeff) {
        Rat term = c; // c * (2e)^n / n!
        for (long n = 0; n <= order; ++n) {
            D[n] += term;
            term = term * Rat(2 * e) / (n + 1);
        }
    }
    std::vector<Rat> num(order + 1, Rat(0)); // 2 sinh z
    Rat t(2);
    for (long m = 1; m <= order; m += 2) {
        num[m] = t;
        t /= Rat((m + 1) * (m + 2));
    }
    std::vector<Rat> tau(order + 1, Rat(0)); // num / D, D(0) = Delta(1) = 1
    std::vector<Rat> rem = num;
    for (long n = 0; n <= order; ++n) {
        tau[n] = rem[n] / D[0];
        if (tau[n] == 0) continue;
        for (long j = 0; n + j <= order; ++j) rem[n + j] -= tau[n] * D[j];
    }
    std::vector<Rat> a(n_max + 1, Rat(0));
    for (long n = 1; n <= n_max; ++n) a[n] = Rat(int_factorial(2 * n)) * tau[2 * n - 1];
    return a;
}

inline std::vector<std::pair<long, long>> coprime_pairs(long q_max) {
    std::vector<std::pair<long, long>> v;
    for (long p = 2; p < q_max; ++p)
        for (long q = p + 1; q <= q_max; ++q)
            if (std::gcd(p, q) == 1) v.emplace_back(p, q);
    return v;
}

#endif
