#include "duorat/duo_approx.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "duorat/guards.hpp"
#include "duorat/hyperbola.hpp"

namespace duorat {

namespace {

// Tie-break everywhere: error, then combined denominator, then combined
// numerator; on a full tie the earlier candidate stays.
bool strictly_better(const DuoApprox& cand, const DuoApprox& best) {
    if (cand.error != best.error) return cand.error < best.error;
    const Int cd = cand.combined_den(), bd = best.combined_den();
    if (cd != bd) return cd < bd;
    return cand.combined_num() < best.combined_num();
}

struct LcmTable {
    std::vector<i64> values;                                // distinct lcms, ascending
    std::unordered_map<i64, std::pair<i64, i64>> witness;   // lcm -> first (q1, q2)
};

// Reachable denominators for the oracle, memoized per N.
const LcmTable& lcm_table(i64 n) {
    static std::mutex mutex;
    static std::map<i64, LcmTable> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    LcmTable table;
    for (i64 q1 = 1; q1 <= n; ++q1) {
        for (i64 q2 = q1; q2 <= n; ++q2) {
            const i64 l = q1 / gcd_i64(q1, q2) * q2;
            if (table.witness.emplace(l, std::make_pair(q1, q2)).second) table.values.push_back(l);
        }
    }
    std::sort(table.values.begin(), table.values.end());
    return cache.emplace(n, std::move(table)).first->second;
}

// Split k/L into a1/q1 + a2/q2 where L = lcm(q1, q2): with q1 = g*u,
// q2 = g*v, gcd(u, v) = 1, solve a1*v + a2*u = k, 0 <= a1 < u.
DuoApprox from_lcm_multiple(const Rat& alpha, i64 q1, i64 q2, const Int& k, DuoMethod method) {
    const i64 g = gcd_i64(q1, q2);
    const Int u(static_cast<long>(q1 / g)), v(static_cast<long>(q2 / g));
    const auto [a1, a2] = split_fraction(k, u, v);
    DuoApprox d{a1, Int(static_cast<long>(q1)), a2, Int(static_cast<long>(q2)), Rat(0), method};
    d.error = rat_abs(alpha - d.value());
    return d;
}

}  // namespace

const char* duo_method_name(DuoMethod m) {
    switch (m) {
        case DuoMethod::reduction: return "reduction";
        case DuoMethod::prime_grid: return "prime_grid";
        case DuoMethod::trivial: return "trivial";
        case DuoMethod::oracle: return "oracle";
    }
    return "unknown";
}

Int default_r_max(const Int& q, const Int& n) {
    const double scale = std::pow(to_double(n), 0.1);
    const Int base = ceil_div(q, n * n);
    const Int r(static_cast<long>(std::ceil(to_double(base) * scale)));
    return std::max(Int(1), r);
}

DuoApprox trivial_duo(const Rat& alpha, const Int& n) {
    const SingleApprox s = dirichlet_approx(alpha, n);
    return {s.a, s.q, Int(0), Int(1), s.error, DuoMethod::trivial};
}

DuoApprox prime_grid_approx(const Rat& alpha, const Int& n) {
    if (n < 12) throw_error(errc::range_too_small, "prime_grid_approx needs N >= 12");
    const Int lo = ceil_div(n, Int(4));
    const std::vector<i64> primes = primes_in_range(make_rat(lo, 1), make_rat(n, 1));
    if (primes.size() < 2) {
        throw_error(errc::range_too_small, "fewer than two primes in [ceil(N/4), N]");
    }
    const i64 q1 = primes[primes.size() - 2];
    const i64 q2 = primes[primes.size() - 1];
    const Int qq(static_cast<long>(q1 * q2));

    // Successive admissible numerators are at most 3 apart, so the window
    // around floor(alpha * q1 * q2) always contains the minimizer.
    const Int k0 = rat_floor(alpha * qq);
    bool have = false;
    Int best_k = 0;
    Rat best_err;
    for (Int k = k0 - 3; k <= k0 + 4; ++k) {
        if (k != 0 && int_gcd(k, qq) != 1) continue;
        const Rat err = rat_abs(alpha - make_rat(k, qq));
        if (!have || err < best_err) {
            best_k = k;
            best_err = err;
            have = true;
        }
    }
    const auto [a1, a2] = split_fraction(best_k, Int(static_cast<long>(q1)), Int(static_cast<long>(q2)));
    DuoApprox d{a1, Int(static_cast<long>(q1)), a2, Int(static_cast<long>(q2)), best_err,
                DuoMethod::prime_grid};
    if (d.error * qq > 3) throw std::logic_error("prime_grid_approx: 3/(q1 q2) bound violated");
    return d;
}

DuoApprox brute_best_duo(const Rat& alpha, const Int& n) {
    if (n < 1) throw_error(errc::precondition_violated, "brute_best_duo needs N >= 1");
    guard_check(to_i64(n), guards::kOracleN, "brute_best_duo N");
    const LcmTable& table = lcm_table(to_i64(n));

    bool have = false;
    i64 best_l = 0;
    Int best_k;
    Rat best_err;
    for (i64 l : table.values) {
        const Int lz(static_cast<long>(l));
        const Int k = rat_round_nearest(alpha * lz);  // halves round to the smaller k
        const Rat err = rat_abs(alpha - make_rat(k, lz));
        if (!have || err < best_err) {
            best_l = l;
            best_k = k;
            best_err = err;
            have = true;
        }
    }
    const auto [q1, q2] = table.witness.at(best_l);
    return from_lcm_multiple(alpha, q1, q2, best_k, DuoMethod::oracle);
}

DuoReductionResult duo_from_reduction(const Rat& alpha, const Int& n, const Int& r_max,
                                      bool distinct_primes) {
    if (n < 1) throw_error(errc::precondition_violated, "duo_from_reduction needs N >= 1");
    if (r_max < 1) throw_error(errc::precondition_violated, "duo_from_reduction needs r_max >= 1");
    guard_check(to_i64(n), 1'000'000, "duo_from_reduction N");  // keeps q <= N^2 <= 10^12
    const i64 ni = to_i64(n);

    const SingleApprox single = dirichlet_approx(alpha, n * n);

    std::optional<DuoApprox> best;
    std::optional<ReductionTrace> best_trace;
    auto consider = [&](const DuoApprox& cand, std::optional<ReductionTrace> trace) {
        if (!best || strictly_better(cand, *best)) {
            best = cand;
            best_trace = std::move(trace);
        }
    };

    // The q <= N case is already a valid duo (a/q + 0/1), so the congruence
    // scan only runs when the single approximant overshoots N.
    if (single.q > n) {
        const i64 q = to_i64(single.q);
        const Int abar = mod_inverse(single.a, single.q);
        const Box box = Box::square(1, ni);
        for (Int r = 1; r <= r_max; ++r) {
            if (int_gcd(r, single.q) != 1) continue;  // instance needs gcd(c, q) = 1
            Int c_z = (r * abar) % single.q;
            const i64 c = to_i64(c_z);
            if (c > ni * ni) continue;  // smallest lift already exceeds the box
            const i64 k_lift_max = (ni * ni - c) / q;
            const HyperbolaInstance inst(q, c);
            lift_and_factor_scan(inst, box, k_lift_max, [&](i64, const HyperbolaSolution& s) {
                if (gcd_i64(s.x, s.y) != 1) return true;
                if (distinct_primes && (s.x == s.y || !is_prime(s.x) || !is_prime(s.y))) return true;
                const Int q1(static_cast<long>(s.x)), q2(static_cast<long>(s.y));
                const Int b = (single.a * q1 * q2 - r) / single.q;
                const auto [a1, a2] = split_fraction(b, q1, q2);
                DuoApprox cand{a1, q1, a2, q2, Rat(0), DuoMethod::reduction};
                cand.error = rat_abs(alpha - cand.value());
                consider(cand, ReductionTrace{single, r, b, q1, q2});
                return true;
            });
        }
    }

    if (!distinct_primes) consider(trivial_duo(alpha, n), std::nullopt);
    if (n >= 12) consider(prime_grid_approx(alpha, n), std::nullopt);
    if (!best) {
        throw_error(errc::range_too_small,
                    "distinct-primes mode found no prime-pair candidate (needs N >= 12 or a reduction hit)");
    }
    if (best->method != DuoMethod::reduction) best_trace.reset();
    return {*best, best_trace};
}

LowerBoundCheck verify_lower_bound(const Int& a, const Int& p, const Int& n) {
    if (n < 1) throw_error(errc::precondition_violated, "verify_lower_bound needs N >= 1");
    if (!p.fits_slong_p() || !is_prime(to_i64(p))) {
        throw_error(errc::precondition_violated, "p = " + p.get_str() + " is not prime");
    }
    if (p <= n || p > 2 * n) {
        throw_error(errc::precondition_violated,
                    "need N < p <= 2N, got p = " + p.get_str() + ", N = " + n.get_str());
    }
    if (int_gcd(a, p) != 1) throw_error(errc::not_coprime, "gcd(a, p) > 1");

    const DuoApprox best = brute_best_duo(make_rat(a, p), n);
    const Rat bound = make_rat(Int(1), p * n * n);
    return {best.error, bound, best.error >= bound, best};
}

}  // namespace duorat
