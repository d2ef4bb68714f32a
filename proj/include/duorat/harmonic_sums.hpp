#pragma once

#include <map>
#include <vector>

#include "duorat/arith.hpp"

namespace duorat {

// A point on the unit circle, stored as an exact rational in [0, 1).
struct UnitPoint {
    Rat value;

    explicit UnitPoint(const Rat& x) : value(x - Rat(rat_floor(x))) {}

    // Distance to the nearest integer, exact.
    Rat norm() const { return std::min(value, Rat(1 - value)); }
};

struct EtReport {
    bool hypothesis_ok;  // every ||x_j|| >= 1/L, checked exactly
    double lhs;          // sum_{l<=L} |sum_j e(l x_j)|
    double rhs;          // J/6
};

struct ExpSumReport {
    double s1;
    double s2;
    i64 l;
    i64 p_size;
    double threshold;  // |P|^2 / 7
    bool passes;       // s1 + s2 <= threshold
};

struct DrProfile {
    std::map<i64, int> counts;  // r -> d_r, nonzero entries only
    int max_d;
    i64 argmax_r;  // smallest r attaining max_d; 0 when empty
};

struct S1BoundReport {
    double t_exact;  // (LN/q) * sum_r |sum_{N/2 <= q2 <= N} e(r q2 / q)|
    double cap;      // L N d(q) ln q, trend line only
};

// Erdos-Turan variant: if every point is at least 1/L from the integers,
// the L harmonics carry more than J/6 of mass.
EtReport et_inequality(const std::vector<UnitPoint>& points, i64 l);

// S1 over prime pairs and S2 over prime squares from [N/2, N], with angles
// reduced mod 1 exactly and one complex exponential per distinct angle.
ExpSumReport s_sums_thm6(i64 q, i64 a, i64 n, i64 l);

// d_r = #{(l, p) : l <= L, p in P, l*p = r}.
DrProfile d_r_profile(i64 l, const std::vector<i64>& primes);

S1BoundReport s1_bound_thm7(i64 q, i64 n, i64 l);

// Default scan length floor(q * N^(phi - 2 - eps)) + 1.
i64 default_l(i64 q, i64 n, double phi, double eps);

// Compensated (Kahan) accumulator; summation order is fixed by callers.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

}  // namespace duorat
