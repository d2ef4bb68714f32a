#include "duorat/harmonic_sums.hpp"

#include <cmath>
#include <numbers>

#include "duorat/guards.hpp"

namespace duorat {

namespace {

// e(x) for an exact angle in [0, 1); the only rounding in the module
// happens here, after all congruence arithmetic is done.
inline void accumulate_e(KahanSum& re, KahanSum& im, double angle, double weight = 1.0) {
    const double t = 2.0 * std::numbers::pi * angle;
    re.add(weight * std::cos(t));
    im.add(weight * std::sin(t));
}

inline double magnitude(const KahanSum& re, const KahanSum& im) {
    return std::hypot(re.sum, im.sum);
}

// Residue histogram evaluated at multiples l*res/q; entries stay sorted by
// residue so the summation order never varies.
double harmonic_sum(const std::vector<std::pair<i64, i64>>& entries, i64 q, i64 l_count) {
    KahanSum total;
    for (i64 l = 1; l <= l_count; ++l) {
        KahanSum re, im;
        for (const auto& [res, cnt] : entries) {
            const i64 angle_num = mul_mod(l % q, res, q);
            accumulate_e(re, im, static_cast<double>(angle_num) / static_cast<double>(q),
                         static_cast<double>(cnt));
        }
        total.add(magnitude(re, im));
    }
    return total.sum;
}

}  // namespace

EtReport et_inequality(const std::vector<UnitPoint>& points, i64 l_count) {
    if (points.empty()) throw_error(errc::precondition_violated, "et_inequality needs points");
    if (l_count < 1) throw_error(errc::precondition_violated, "et_inequality needs L >= 1");
    guard_check(l_count * static_cast<i64>(points.size()), guards::kWork, "et_inequality work");

    const Rat one_over_l = make_rat(Int(1), Int(static_cast<long>(l_count)));
    bool hypothesis_ok = true;
    for (const UnitPoint& p : points) {
        if (p.norm() < one_over_l) hypothesis_ok = false;
    }

    KahanSum total;
    for (i64 l = 1; l <= l_count; ++l) {
        // Group exact angles first; equal angles collapse to one exponential.
        std::map<Rat, long> groups;
        for (const UnitPoint& p : points) {
            const Rat scaled = p.value * static_cast<long>(l);
            const Rat angle = scaled - Rat(rat_floor(scaled));
            ++groups[angle];
        }
        KahanSum re, im;
        for (const auto& [angle, cnt] : groups) {
            accumulate_e(re, im, to_double(angle), static_cast<double>(cnt));
        }
        total.add(magnitude(re, im));
    }
    return {hypothesis_ok, total.sum, static_cast<double>(points.size()) / 6.0};
}

ExpSumReport s_sums_thm6(i64 q, i64 a, i64 n, i64 l_count) {
    if (q < 1 || n < 1 || l_count < 0) {
        throw_error(errc::precondition_violated, "s_sums_thm6 needs q, N >= 1 and L >= 0");
    }
    if (gcd_i64(a, q) != 1) {
        throw_error(errc::not_coprime, "gcd(a, q) = " + std::to_string(gcd_i64(a, q)));
    }
    const std::vector<i64> primes = primes_in_range(make_rat(n, 2), make_rat(n, 1));
    const i64 p_size = static_cast<i64>(primes.size());
    guard_check(l_count * std::max<i64>(p_size * p_size, 1), guards::kWork, "s_sums_thm6 work L*|P|^2");

    i64 am = a % q;
    if (am < 0) am += q;

    // Histogram of a*q1*q2 mod q over ordered pairs, and of a*q1^2 mod q.
    std::map<i64, i64> pair_hist, square_hist;
    for (i64 p1 : primes) {
        const i64 s = mul_mod(am, p1 % q, q);
        for (i64 p2 : primes) ++pair_hist[mul_mod(s, p2 % q, q)];
        ++square_hist[mul_mod(s, p1 % q, q)];
    }
    const std::vector<std::pair<i64, i64>> pairs(pair_hist.begin(), pair_hist.end());
    const std::vector<std::pair<i64, i64>> squares(square_hist.begin(), square_hist.end());

    ExpSumReport report;
    report.s1 = harmonic_sum(pairs, q, l_count);
    report.s2 = harmonic_sum(squares, q, l_count);
    report.l = l_count;
    report.p_size = p_size;
    report.threshold = static_cast<double>(p_size) * static_cast<double>(p_size) / 7.0;
    report.passes = report.s1 + report.s2 <= report.threshold;
    return report;
}

DrProfile d_r_profile(i64 l_count, const std::vector<i64>& primes) {
    if (l_count < 1) throw_error(errc::precondition_violated, "d_r_profile needs L >= 1");
    guard_check(l_count * static_cast<i64>(primes.size()), guards::kWork, "d_r_profile work");
    DrProfile profile{{}, 0, 0};
    for (i64 p : primes) {
        for (i64 l = 1; l <= l_count; ++l) ++profile.counts[l * p];
    }
    for (const auto& [r, d] : profile.counts) {
        if (d > profile.max_d) {
            profile.max_d = d;
            profile.argmax_r = r;
        }
    }
    return profile;
}

S1BoundReport s1_bound_thm7(i64 q, i64 n, i64 l_count) {
    if (q < 1 || n < 1 || l_count < 0) {
        throw_error(errc::precondition_violated, "s1_bound_thm7 needs q, N >= 1 and L >= 0");
    }
    const i64 lo = (n + 1) / 2;  // ceil(N/2)
    guard_check(q * std::max<i64>(n - lo + 1, 1), guards::kWork, "s1_bound_thm7 work q*|range|");

    double t_exact = 0.0;
    if (l_count > 0) {
        KahanSum outer;
        for (i64 r = 1; r <= q; ++r) {
            KahanSum re, im;
            for (i64 q2 = lo; q2 <= n; ++q2) {
                accumulate_e(re, im, static_cast<double>(mul_mod(r, q2 % q, q)) / static_cast<double>(q));
            }
            outer.add(magnitude(re, im));
        }
        t_exact = static_cast<double>(l_count) * static_cast<double>(n) / static_cast<double>(q) * outer.sum;
    }

    const ArithInfo info = arithmetic_functions(Int(static_cast<long>(q)));
    const double cap = static_cast<double>(l_count) * static_cast<double>(n) *
                       to_double(info.divisor_count) * std::log(static_cast<double>(q));
    return {t_exact, cap};
}

i64 default_l(i64 q, i64 n, double phi, double eps) {
    const double value = static_cast<double>(q) * std::pow(static_cast<double>(n), phi - 2.0 - eps);
    return static_cast<i64>(std::floor(value)) + 1;
}

}  // namespace duorat
