#pragma once

#include <optional>
#include <random>

#include "duorat/duo_approx.hpp"
#include "duorat/hyperbola.hpp"

namespace duorat {

struct Conj2Row {
    i64 q;
    i64 worst_c;  // smallest c attaining the worst exponent
    i64 x, y;     // min-max witness for worst_c
    i64 max_xy;
    double exponent;  // ln(max_xy) / ln(q)
};

struct Conj2Report {
    std::vector<Conj2Row> rows;  // one per q, ascending
    double min_exponent;
    double max_exponent;
    double mean_exponent;
};

// For every q in [q_lo, q_hi] and every c coprime to q, the smallest-max
// solution level; reported per q as the worst c. Row-parallel and
// order-independent in the worker count.
Conj2Report conj2_sweep(i64 q_lo, i64 q_hi, int jobs = 1);

// Minimal max(x, y) for every coprime c mod q at once, (c, level) pairs in
// ascending c. One pass over pairs in increasing max covers all targets.
std::vector<std::pair<i64, i64>> conj2_levels(i64 q);

struct Conj3Result {
    bool holds;
    std::optional<HyperbolaSolution> witness;
    i64 box_lo, box_hi;  // [ceil(C*N), floor(2*C*N)]
};

// Searches the Conjecture-3 box with coprime x, y. theta and c_theta are
// exact rationals; the N >= q^theta precondition is checked exactly.
Conj3Result conj3_check(i64 q, i64 c, const Rat& theta, const Rat& c_theta, i64 n);

struct Conj0Result {
    DuoApprox best;  // oracle witness
    double ratio;    // error * (q1 q2)^beta * N^(2-beta)
};

Conj0Result conj0_quality(const Rat& alpha, const Int& n, double beta);

struct Thm4Row {
    i64 q;
    i64 phi;
    i64 bad_count;
};

struct Thm4Result {
    std::vector<Thm4Row> rows;                  // per q in (N, q_cap]
    std::vector<std::pair<i64, i64>> bad_pairs;  // (a, q), ascending
    Rat bad_weight;                              // sum of 2/q over bad pairs, exact
    double bad_measure;                          // bad_weight / N^(2-eps)
    double reference;                            // 1 / sqrt(ln N)
};

// Classifies every interval with N < q <= q_cap and sums the bad measure.
// The exact part of the measure is bad_weight; the N^(2-eps) scale is
// irrational in general and applied in floating point.
Thm4Result thm4_bad_measure(i64 n, const Rat& eps, i64 q_cap, int jobs = 1);

// Deterministic uniform rationals in [0, 1) with denominator <= max_den.
class AlphaSampler {
public:
    explicit AlphaSampler(std::uint64_t seed) : rng_(seed) {}

    Rat next(i64 max_den = 1'000'000) {
        const i64 den = 1 + static_cast<i64>(rng_() % static_cast<std::uint64_t>(max_den));
        const i64 num = static_cast<i64>(rng_() % static_cast<std::uint64_t>(den));
        return make_rat(num, den);
    }

    std::uint64_t raw() { return rng_(); }

private:
    std::mt19937_64 rng_;
};

// Runs fn(0..count-1) on `jobs` threads; results must be keyed by index so
// output is identical for any worker count.
void parallel_for_index(i64 count, int jobs, const std::function<void(i64)>& fn);

}  // namespace duorat
