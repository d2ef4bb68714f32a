#include "duorat/lab.hpp"

#include <atomic>
#include <cmath>
#include <set>
#include <thread>

#include "duorat/guards.hpp"

namespace duorat {

void parallel_for_index(i64 count, int jobs, const std::function<void(i64)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (i64 i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<i64> next{0};
    std::vector<std::thread> workers;
    const int n_workers = static_cast<int>(std::min<i64>(jobs, count));
    workers.reserve(static_cast<std::size_t>(n_workers));
    for (int w = 0; w < n_workers; ++w) {
        workers.emplace_back([&]() {
            for (;;) {
                const i64 i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (std::thread& t : workers) t.join();
}

namespace {

Conj2Row conj2_row(i64 q) {
    i64 worst_c = 1, worst_level = 1;
    for (const auto& [c, level] : conj2_levels(q)) {
        if (level > worst_level) {
            worst_level = level;
            worst_c = c;
        }
    }
    const MinMaxSolution witness = smallest_max_solution(HyperbolaInstance(q, worst_c));
    return {q, worst_c, witness.sol.x, witness.sol.y, std::max(witness.sol.x, witness.sol.y),
            witness.exponent};
}

}  // namespace

std::vector<std::pair<i64, i64>> conj2_levels(i64 q) {
    if (q < 2) throw_error(errc::precondition_violated, "conj2_levels needs q >= 2");
    guard_check(q, guards::kSweepQ, "conj2 modulus");
    // First-coverage level of every coprime residue class: process pairs in
    // increasing max(x, y), marking c = x*y the first time it appears.
    std::vector<bool> coprime(static_cast<std::size_t>(q));
    i64 targets = 0;
    for (i64 v = 0; v < q; ++v) {
        coprime[static_cast<std::size_t>(v)] = gcd_i64(v, q) == 1;
        if (v >= 1 && coprime[static_cast<std::size_t>(v)]) ++targets;
    }
    std::vector<i64> first_level(static_cast<std::size_t>(q), 0);
    i64 uncovered = targets;
    for (i64 m = 1; m < q && uncovered > 0; ++m) {
        if (!coprime[static_cast<std::size_t>(m)]) continue;
        for (i64 x = 1; x <= m && uncovered > 0; ++x) {
            if (!coprime[static_cast<std::size_t>(x)]) continue;
            const i64 c = mul_mod(x, m, q);  // covers both (x, m) and (m, x)
            if (first_level[static_cast<std::size_t>(c)] == 0) {
                first_level[static_cast<std::size_t>(c)] = m;
                --uncovered;
            }
        }
    }
    std::vector<std::pair<i64, i64>> levels;
    levels.reserve(static_cast<std::size_t>(targets));
    for (i64 c = 1; c < q; ++c) {
        if (coprime[static_cast<std::size_t>(c)]) {
            levels.emplace_back(c, first_level[static_cast<std::size_t>(c)]);
        }
    }
    return levels;
}

Conj2Report conj2_sweep(i64 q_lo, i64 q_hi, int jobs) {
    if (q_lo < 2) q_lo = 2;
    if (q_hi < q_lo) throw_error(errc::precondition_violated, "empty q range");
    guard_check(q_hi, guards::kSweepQ, "conj2_sweep q_hi");

    Conj2Report report;
    report.rows.resize(static_cast<std::size_t>(q_hi - q_lo + 1));
    parallel_for_index(q_hi - q_lo + 1, jobs,
                       [&](i64 i) { report.rows[static_cast<std::size_t>(i)] = conj2_row(q_lo + i); });

    report.min_exponent = report.rows.front().exponent;
    report.max_exponent = report.rows.front().exponent;
    double sum = 0.0;
    for (const Conj2Row& row : report.rows) {
        report.min_exponent = std::min(report.min_exponent, row.exponent);
        report.max_exponent = std::max(report.max_exponent, row.exponent);
        sum += row.exponent;
    }
    report.mean_exponent = sum / static_cast<double>(report.rows.size());
    return report;
}

Conj3Result conj3_check(i64 q, i64 c, const Rat& theta, const Rat& c_theta, i64 n) {
    if (theta * 2 <= 1 || theta > 1) {
        throw_error(errc::precondition_violated, "theta must satisfy 1/2 < theta <= 1");
    }
    if (theta.get_den() > 10000) {
        throw_error(errc::precondition_violated, "theta denominator capped at 10^4 (it becomes an exponent)");
    }
    if (c_theta <= 0) throw_error(errc::precondition_violated, "C_theta must be positive");
    // N >= q^theta, checked exactly: N^v >= q^u for theta = u/v.
    Int n_pow, q_pow;
    mpz_pow_ui(n_pow.get_mpz_t(), Int(static_cast<long>(n)).get_mpz_t(),
               static_cast<unsigned long>(theta.get_den().get_ui()));
    mpz_pow_ui(q_pow.get_mpz_t(), Int(static_cast<long>(q)).get_mpz_t(),
               static_cast<unsigned long>(theta.get_num().get_ui()));
    if (n_pow < q_pow) {
        throw_error(errc::precondition_violated,
                    "N = " + std::to_string(n) + " is below q^theta for q = " + std::to_string(q));
    }

    const Rat cn = c_theta * static_cast<long>(n);
    const i64 lo = to_i64(rat_ceil(cn));
    const i64 hi = to_i64(rat_floor(cn * 2));
    if (lo > hi || lo < 1) {
        throw_error(errc::precondition_violated, "degenerate box [C N, 2 C N]");
    }
    const HyperbolaInstance inst(q, c);
    const std::vector<HyperbolaSolution> sols = solutions_in_box(inst, Box::square(lo, hi), true);
    if (sols.empty()) return {false, std::nullopt, lo, hi};
    return {true, sols.front(), lo, hi};
}

Conj0Result conj0_quality(const Rat& alpha, const Int& n, double beta) {
    if (beta < 0.0 || beta > 1.0) {
        throw_error(errc::precondition_violated, "beta must lie in [0, 1]");
    }
    const DuoApprox best = brute_best_duo(alpha, n);
    const double qq = to_double(Int(best.q1 * best.q2));
    const double nn = to_double(n);
    const double ratio = to_double(best.error) * std::pow(qq, beta) * std::pow(nn, 2.0 - beta);
    return {best, ratio};
}

Thm4Result thm4_bad_measure(i64 n, const Rat& eps, i64 q_cap, int jobs) {
    if (n < 2) throw_error(errc::precondition_violated, "thm4_bad_measure needs N >= 2");
    if (eps <= 0 || eps >= 2) throw_error(errc::precondition_violated, "eps must lie in (0, 2)");
    if (eps.get_den() > 10000) {
        throw_error(errc::precondition_violated, "eps denominator capped at 10^4 (it becomes an exponent)");
    }
    guard_check(q_cap, guards::kSweepQ, "thm4_bad_measure q_cap");
    // q_cap <= N^(2 - eps), checked exactly via q_cap^v <= N^(2v - u).
    {
        const unsigned long v = static_cast<unsigned long>(eps.get_den().get_ui());
        const Int u = eps.get_num();
        Int lhs, rhs;
        mpz_pow_ui(lhs.get_mpz_t(), Int(static_cast<long>(q_cap)).get_mpz_t(), v);
        const Int exp2v = 2 * static_cast<long>(v) - u;
        mpz_pow_ui(rhs.get_mpz_t(), Int(static_cast<long>(n)).get_mpz_t(),
                   static_cast<unsigned long>(exp2v.get_ui()));
        if (lhs > rhs) {
            throw_error(errc::precondition_violated, "q_cap exceeds N^(2-eps)");
        }
    }

    Thm4Result result;
    result.bad_weight = Rat(0);
    const i64 q_count = std::max<i64>(0, q_cap - n);
    result.rows.resize(static_cast<std::size_t>(q_count));
    std::vector<std::vector<i64>> bad_by_q(static_cast<std::size_t>(q_count));

    parallel_for_index(q_count, jobs, [&](i64 idx) {
        const i64 q = n + 1 + idx;
        // Products q1*q2 mod q over coprime pairs from [ceil(N/4), N],
        // computed once; a is bad iff its inverse misses the set.
        const i64 lo = (n + 3) / 4;
        std::set<i64> products;
        for (i64 q1 = lo; q1 <= n; ++q1) {
            if (gcd_i64(q1, q) != 1) continue;
            for (i64 q2 = q1; q2 <= n; ++q2) {
                if (gcd_i64(q1, q2) != 1) continue;
                products.insert(mul_mod(q1 % q, q2 % q, q));
            }
        }
        i64 phi = 0;
        std::vector<i64>& bad = bad_by_q[static_cast<std::size_t>(idx)];
        for (i64 a = 1; a < q; ++a) {
            if (gcd_i64(a, q) != 1) continue;
            ++phi;
            if (!products.contains(mod_inverse_i64(a, q))) bad.push_back(a);
        }
        result.rows[static_cast<std::size_t>(idx)] = {q, phi, static_cast<i64>(bad.size())};
    });

    for (i64 idx = 0; idx < q_count; ++idx) {
        const i64 q = n + 1 + idx;
        for (i64 a : bad_by_q[static_cast<std::size_t>(idx)]) {
            result.bad_pairs.emplace_back(a, q);
            result.bad_weight += make_rat(2, q);
        }
    }
    result.bad_measure =
        to_double(result.bad_weight) * std::pow(static_cast<double>(n), to_double(eps) - 2.0);
    result.reference = 1.0 / std::sqrt(std::log(static_cast<double>(n)));
    return result;
}

}  // namespace duorat
