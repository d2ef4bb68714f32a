#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "duorat/arith.hpp"

namespace duorat {

// The congruence x*y = c (mod q) with gcd(c, q) = 1, 1 <= c <= q-1.
struct HyperbolaInstance {
    i64 q;
    i64 c;

    HyperbolaInstance(i64 modulus, i64 residue);
};

// Inclusive box of positive integers.
struct Box {
    i64 x_lo, x_hi, y_lo, y_hi;

    Box(i64 xl, i64 xh, i64 yl, i64 yh);
    static Box square(i64 lo, i64 hi) { return Box(lo, hi, lo, hi); }
};

struct HyperbolaSolution {
    i64 x;
    i64 y;
};

struct MinMaxSolution {
    HyperbolaSolution sol;
    double exponent;  // ln(max(x,y)) / ln(q)
};

enum class IntervalClass { good, bad };

struct IntervalClassification {
    IntervalClass cls;
    std::optional<HyperbolaSolution> witness;  // (q1, q2) when good
};

struct CoverageReport {
    i64 covered;
    double fraction;
};

// Every solution in the box, sorted by (x, y). Walks y through the residue
// class c*inverse(x) per coprime x.
std::vector<HyperbolaSolution> solutions_in_box(const HyperbolaInstance& inst, const Box& box,
                                                bool require_coprime_xy);

// Solution with minimal max(x, y) over 1 <= x, y <= q-1; ties go to the
// smallest x. The exponent measures max(x,y) on the q^theta scale.
MinMaxSolution smallest_max_solution(const HyperbolaInstance& inst);

// Scans lifts x*y = c + k*q for k = 0..k_max, factoring each lift and
// testing divisor pairs against the box. Returns the first hit in
// increasing k, then increasing x.
std::optional<HyperbolaSolution> lift_and_factor_search(const HyperbolaInstance& inst, const Box& box,
                                                        i64 k_max);

// As above but yields every hit (in (k, x) order) to the callback; the
// callback returns false to stop. Shared with the reduction search.
void lift_and_factor_scan(const HyperbolaInstance& inst, const Box& box, i64 k_max,
                          const std::function<bool(i64 k, const HyperbolaSolution&)>& visit);

// Distinct residues {x*y mod m} with x and y ranging over [lo, hi] windows.
CoverageReport coverage_count(i64 m, i64 x_lo, i64 x_hi, i64 y_lo, i64 y_hi, bool require_coprime_xy);

// Good iff some coprime pair q1, q2 in [ceil(N/4), N] has q1*q2 = inverse(a)
// mod q; the witness enumerates q1 ascending, then q2.
IntervalClassification classify_interval(i64 a, i64 q, i64 n);

}  // namespace duorat
