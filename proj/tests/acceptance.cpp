// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Budgets and tolerances are pinned in code next to each check.

#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "duorat/characters.hpp"
#include "duorat/duo_approx.hpp"
#include "duorat/harmonic_sums.hpp"
#include "duorat/hyperbola.hpp"
#include "duorat/lab.hpp"
#include "duorat/single_approx.hpp"

using namespace duorat;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool time_budget_ok(double elapsed, double budget, std::string& detail) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f s (budget %.0f s)", elapsed, budget);
    detail += std::string(", ") + buf;
    return elapsed < budget;
}

// 1. Dirichlet guarantee (exact, 10^4 alphas x N in {10,100,1000}, < 10 s)
bool criterion_dirichlet(std::string& detail) {
    const auto start = Clock::now();
    AlphaSampler sampler(20240001);
    long checked = 0;
    for (int i = 0; i < 10000; ++i) {
        const Rat alpha = sampler.next(1000000);
        for (const long n : {10L, 100L, 1000L}) {
            const SingleApprox s = dirichlet_approx(alpha, n);
            if (s.q < 1 || s.q > n) return false;
            if (s.error > make_rat(Int(1), s.q * Int(n))) return false;
            ++checked;
        }
    }
    detail = std::to_string(checked) + " checks";
    return time_budget_ok(seconds_since(start), 10.0, detail);
}

// 2. Lower-bound law: oracle error >= 1/(p N^2) exactly, < 60 s
bool criterion_lower_bound(std::string& detail) {
    const auto start = Clock::now();
    std::mt19937_64 rng(20240002);
    long checked = 0;
    for (i64 n = 4; n <= 24; ++n) {
        for (i64 p : primes_in_range(n + 1, 2 * n)) {
            for (int j = 0; j < 5; ++j) {
                const i64 a = 1 + static_cast<i64>(rng() % static_cast<std::uint64_t>(p - 1));
                const LowerBoundCheck check = verify_lower_bound(a, p, n);
                if (!check.holds) return false;
                ++checked;
            }
        }
    }
    detail = std::to_string(checked) + " (N, p, a) triples";
    return time_budget_ok(seconds_since(start), 60.0, detail);
}

// 3. Construction bounds: trivial <= 1/(q1 N), prime grid <= 3/(q1 q2), exact
bool criterion_construction_bounds(std::string& detail) {
    std::mt19937_64 rng(20240003);
    AlphaSampler sampler(20240003);
    for (int i = 0; i < 1000; ++i) {
        const Rat alpha = sampler.next(1000000);
        const i64 n = 12 + static_cast<i64>(rng() % 189);
        const Int nz(static_cast<long>(n));
        const DuoApprox t = trivial_duo(alpha, nz);
        if (t.error * t.q1 * nz > 1) return false;
        const DuoApprox g = prime_grid_approx(alpha, nz);
        if (g.error * g.q1 * g.q2 > 3) return false;
    }
    detail = "1000 random (alpha, N in [12, 200])";
    return true;
}

// 4. Reduction optimality gap: oracle <= reduction <= fallbacks
bool criterion_reduction_gap(std::string& detail) {
    long checked = 0;
    for (i64 q : primes_in_range(2, 400)) {
        for (i64 a = 1; a < q; ++a) {
            const Rat alpha = make_rat(a, q);
            for (const i64 n : {8L, 16L, 32L}) {
                const Int nz(static_cast<long>(n));
                const DuoReductionResult red =
                    duo_from_reduction(alpha, nz, default_r_max(Int(static_cast<long>(q)), nz));
                if (red.result.error > trivial_duo(alpha, nz).error) return false;
                if (n >= 12 && red.result.error > prime_grid_approx(alpha, nz).error) return false;
                if (brute_best_duo(alpha, nz).error > red.result.error) return false;
                ++checked;
            }
        }
    }
    detail = std::to_string(checked) + " (alpha, N) cases, zero ordering violations";
    return true;
}

// 5. Hyperbola oracle equivalence via box shrinking, < 120 s
bool criterion_hyperbola_oracle(std::string& detail) {
    const auto start = Clock::now();
    long checked = 0;
    for (i64 q = 2; q <= 300; ++q) {
        for (i64 c = 1; c < q; ++c) {
            if (gcd_i64(c, q) != 1) continue;
            const HyperbolaInstance inst(q, c);
            const MinMaxSolution oracle = smallest_max_solution(inst);
            const i64 best = std::max(oracle.sol.x, oracle.sol.y);
            const auto hit = lift_and_factor_search(inst, Box::square(1, best), q - 1);
            if (!hit || std::max(hit->x, hit->y) != best) return false;
            if (best > 1 && lift_and_factor_search(inst, Box::square(1, best - 1), q - 1)) return false;
            ++checked;
        }
    }
    detail = std::to_string(checked) + " (q, c) instances";
    return time_budget_ok(seconds_since(start), 120.0, detail);
}

// 6. Counting identity |direct - via_characters| <= 1e-6
bool criterion_counting_identity(std::string& detail) {
    std::mt19937_64 rng(20240006);
    long checked = 0;
    for (i64 q = 2; q <= 100; ++q) {
        std::set<i64> a_values{1, q - 1};
        for (int tries = 0; tries < 20 && a_values.size() < 3; ++tries) {
            const i64 a = 1 + static_cast<i64>(rng() % static_cast<std::uint64_t>(q));
            if (gcd_i64(a, q) == 1) a_values.insert(a);
        }
        for (const i64 n : {10L, 20L, 40L}) {
            std::vector<i64> primes;
            for (i64 p : primes_in_range(make_rat(n, 2), make_rat(n, 1))) {
                if (gcd_i64(p, q) == 1) primes.push_back(p);
            }
            for (i64 a : a_values) {
                for (const i64 b : {i64{1}, q / 2, q}) {
                    if (b < 1) continue;
                    const CountComparison cmp = solution_count_via_characters(q, a, primes, b);
                    if (cmp.discrepancy > 1e-6) return false;
                    ++checked;
                }
            }
        }
    }
    detail = std::to_string(checked) + " (q, a, N, B) tuples";
    return true;
}

// 7. Orthogonality deviation <= 1e-9 * phi(q) for q <= 200
bool criterion_orthogonality(std::string& detail) {
    for (i64 q = 1; q <= 200; ++q) {
        const CharacterTable table(q);
        if (orthogonality_check(q) > 1e-9 * static_cast<double>(table.size())) return false;
    }
    detail = "q = 1..200";
    return true;
}

// 8. Polya-Vinogradov: max partial sum <= sqrt(q) ln q, every non-principal chi
bool criterion_polya_vinogradov(std::string& detail) {
    long checked = 0;
    for (i64 q = 3; q <= 500; ++q) {
        const CharacterTable table(q);
        const double pv = std::sqrt(static_cast<double>(q)) * std::log(static_cast<double>(q));
        for (i64 chi = 1; chi < table.size(); ++chi) {
            if (char_sum_max(table, chi).max_partial > pv) return false;
            ++checked;
        }
    }
    detail = std::to_string(checked) + " characters";
    return true;
}

// 9. Erdos-Turan lemma on 10^4 hypothesis-satisfying point sets
bool criterion_erdos_turan(std::string& detail) {
    std::mt19937_64 rng(20240009);
    long tested = 0;
    while (tested < 10000) {
        const int j = 1 + static_cast<int>(rng() % 50);
        std::vector<UnitPoint> points;
        Rat min_norm(1);
        for (int i = 0; i < j; ++i) {
            const i64 den = 2 + static_cast<i64>(rng() % 63);
            const i64 num = 1 + static_cast<i64>(rng() % static_cast<std::uint64_t>(den - 1));
            points.emplace_back(make_rat(num, den));
            min_norm = std::min(min_norm, points.back().norm());
        }
        if (min_norm == 0) continue;
        const i64 l = to_i64(rat_ceil(Rat(1) / min_norm)) + static_cast<i64>(rng() % 4);
        const EtReport rep = et_inequality(points, l);
        if (!rep.hypothesis_ok) return false;
        if (!(rep.lhs > rep.rhs)) return false;
        ++tested;
    }
    detail = "10000 point sets";
    return true;
}

// 10. Lemma charlem budget: |count - B phi/q| <= 2 d(q), q <= 2000
bool criterion_charlem(std::string& detail) {
    std::mt19937_64 rng(20240010);
    long checked = 0;
    for (i64 q = 1; q <= 2000; ++q) {
        const Int budget = 2 * arithmetic_functions(q).divisor_count;
        for (int i = 0; i < 50; ++i) {
            // random real B in [1, 2000], eighth-integer grid
            const i64 eighths = 8 + static_cast<i64>(rng() % (1999 * 8 + 1));
            const Rat b = make_rat(eighths, 8);
            const CoprimeCount cc = coprime_count(q, b);
            if (rat_abs(Rat(cc.count) - cc.main_term) > Rat(budget)) return false;
            ++checked;
        }
    }
    detail = std::to_string(checked) + " (q, B) pairs";
    return true;
}

// 11. d_r <= 3 for prime windows, L = N^2, r <= LN
bool criterion_dr_bound(std::string& detail) {
    for (const i64 n : {20L, 50L, 100L}) {
        const auto primes = primes_in_range(make_rat(n, 2), make_rat(n, 1));
        const DrProfile prof = d_r_profile(n * n, primes);
        for (const auto& [r, d] : prof.counts) {
            if (r <= n * n * n && d > 3) return false;
        }
    }
    detail = "N in {20, 50, 100}";
    return true;
}

// 12. Cauchy-Schwarz chain: S2^2 <= L q #{q1^2 = q2^2 (mod q)} within 1e-6
bool criterion_cs_chain(std::string& detail) {
    std::mt19937_64 rng(20240012);
    int sampled = 0;
    while (sampled < 200) {
        const i64 q = 2 + static_cast<i64>(rng() % 499);
        const i64 a = 1 + static_cast<i64>(rng() % static_cast<std::uint64_t>(q - 1));
        if (gcd_i64(a, q) != 1) continue;
        const i64 n = 4 + static_cast<i64>(rng() % 97);
        const i64 l = 1 + static_cast<i64>(rng() % static_cast<std::uint64_t>(std::min<i64>(20, q)));
        const ExpSumReport rep = s_sums_thm6(q, a, n, l);
        const auto primes = primes_in_range(make_rat(n, 2), make_rat(n, 1));
        i64 pairs = 0;
        for (i64 p1 : primes) {
            for (i64 p2 : primes) {
                if (mul_mod(p1 % q, p1 % q, q) == mul_mod(p2 % q, p2 % q, q)) ++pairs;
            }
        }
        const double cap = static_cast<double>(l) * static_cast<double>(q) * static_cast<double>(pairs);
        if (rep.s2 * rep.s2 > cap * (1.0 + 1e-6) + 1e-9) return false;
        ++sampled;
    }
    detail = "200 sampled (q, a, N, L) tuples";
    return true;
}

// 13. CLI determinism: byte-identical output for jobs 1 vs 4, fixed seed
std::string capture(const std::string& args) {
    const std::string cmd = std::string(DUORAT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return "<popen failed>";
    std::string output;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), got);
    pclose(pipe);
    return output;
}

bool criterion_cli_determinism(std::string& detail) {
    const std::vector<std::string> commands = {
        "approx single --alpha 318310/1000000 --n 50 --best",
        "approx duo --alpha 5/7 --n 24 --format json",
        "approx duo --alpha 0.7182818 --n 40 --format csv",
        "hyperbola solve --q 97 --c 13 --box 1,96,1,96 --coprime",
        "hyperbola coverage --m 60 --x-range 1,30 --y-range 100,220",
        "hyperbola classify --a 9 --q 11 --n 8",
        "sums s1s2 --q 101 --a 7 --n 40 --l 11",
        "sums thm7 --q 60 --n 24 --l 3",
        "chars count --q 61 --a 13 --n 30 --b 30",
        "chars pv --q 36 --format csv",
        "lab conj0 --n 24 --samples 6 --seed 31415",
        "lab conj2 --q-lo 2 --q-hi 150",
        "lab conj3 --q 101 --c 17 --theta 0.75 --c-theta 1 --n 40",
        "lab thm4 --n 8 --eps 0.5 --q-cap 20 --format csv",
    };
    int compared = 0;
    for (const std::string& cmd : commands) {
        const std::string one = capture(cmd + " --jobs 1");
        const std::string four = capture(cmd + " --jobs 4");
        const std::string again = capture(cmd + " --jobs 4");
        if (one.empty() || one != four || four != again) {
            detail = "mismatch for: " + cmd;
            return false;
        }
        ++compared;
    }
    detail = std::to_string(compared) + " commands, jobs {1, 4}";
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "Dirichlet guarantee q <= N, |alpha - a/q| <= 1/(qN)", criterion_dirichlet},
        {2, "lower-bound law error >= 1/(p N^2) for prime p in (N, 2N]", criterion_lower_bound},
        {3, "construction bounds 1/(q1 N) and 3/(q1 q2)", criterion_construction_bounds},
        {4, "reduction optimality: oracle <= reduction <= fallbacks", criterion_reduction_gap},
        {5, "hyperbola oracle equivalence (lift route vs min-max)", criterion_hyperbola_oracle},
        {6, "counting identity direct vs characters <= 1e-6", criterion_counting_identity},
        {7, "orthogonality deviation <= 1e-9 phi(q)", criterion_orthogonality},
        {8, "Polya-Vinogradov partial sums <= sqrt(q) ln q", criterion_polya_vinogradov},
        {9, "Erdos-Turan harmonic mass > J/6", criterion_erdos_turan},
        {10, "coprime count within 2 d(q) of B phi(q)/q", criterion_charlem},
        {11, "d_r <= 3 on prime windows", criterion_dr_bound},
        {12, "Cauchy-Schwarz chain S2^2 <= L q (pair count)", criterion_cs_chain},
        {13, "CLI determinism across worker counts", criterion_cli_determinism},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name,
                    detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failed;
    }
    if (failed > 0) std::printf("%d criterion(s) failed\n", failed);
    return failed == 0 ? 0 : 1;
}
