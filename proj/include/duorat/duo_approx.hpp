#pragma once

#include <optional>

#include "duorat/single_approx.hpp"

namespace duorat {

enum class DuoMethod { reduction, prime_grid, trivial, oracle };

const char* duo_method_name(DuoMethod m);

// alpha ~ a1/q1 + a2/q2 with both denominators bounded by the producing
// call's N. The stored error is the exact |alpha - a1/q1 - a2/q2|.
struct DuoApprox {
    Int a1;
    Int q1;
    Int a2;
    Int q2;
    Rat error;
    DuoMethod method;

    Rat value() const { return make_rat(a1, q1) + make_rat(a2, q2); }
    Int combined_den() const { return q1 * q2; }
    Int combined_num() const { return a1 * q2 + a2 * q1; }
};

// How a reduction-produced approximant was found: starting from the single
// approximant a/q, the pair solves q1*q2 = r*inverse(a) (mod q) and
// b = (a*q1*q2 - r)/q divides out exactly.
struct ReductionTrace {
    SingleApprox single;
    Int r;
    Int b;
    Int q1;
    Int q2;
};

struct DuoReductionResult {
    DuoApprox result;
    std::optional<ReductionTrace> trace;  // present when the winner came from the reduction
};

// Default r-scan window, max(1, ceil(q/N^2) * N^(1/10)).
Int default_r_max(const Int& q, const Int& n);

// Congruence-reduction construction with trivial and prime-grid fallbacks;
// the returned approximant is the best over everything attempted. With
// distinct_primes, candidates are restricted to prime pairs q1 != q2.
DuoReductionResult duo_from_reduction(const Rat& alpha, const Int& n, const Int& r_max,
                                      bool distinct_primes = false);

// Exact oracle: minimizes |alpha - k/L| over all reachable denominators
// L = lcm(q1, q2), q1, q2 <= N. Ties: smallest L, then smallest k.
DuoApprox brute_best_duo(const Rat& alpha, const Int& n);

// Best fraction with denominator q1*q2, the two largest distinct primes in
// [ceil(N/4), N]; numerators restricted to k coprime to q1*q2 (or 0).
// Error is at most 3/(q1*q2).
DuoApprox prime_grid_approx(const Rat& alpha, const Int& n);

// dirichlet_approx(alpha, N) plus 0/1.
DuoApprox trivial_duo(const Rat& alpha, const Int& n);

struct LowerBoundCheck {
    Rat min_error;  // exact oracle minimum for alpha = a/p
    Rat bound;      // 1/(p*N^2)
    bool holds;
    DuoApprox best;
};

// For alpha = a/p with p prime in (N, 2N], the oracle minimum must sit
// above 1/(p*N^2).
LowerBoundCheck verify_lower_bound(const Int& a, const Int& p, const Int& n);

}  // namespace duorat
