#include "duorat/hyperbola.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "duorat/guards.hpp"

namespace duorat {

HyperbolaInstance::HyperbolaInstance(i64 modulus, i64 residue) : q(modulus) {
    if (q < 2) throw_error(errc::precondition_violated, "hyperbola modulus must be >= 2");
    c = residue % q;
    if (c < 0) c += q;
    if (c == 0 || gcd_i64(c, q) != 1) {
        throw_error(errc::not_coprime, "gcd(c, q) = " + std::to_string(gcd_i64(residue, q)) +
                                           " for c = " + std::to_string(residue) +
                                           ", q = " + std::to_string(q));
    }
}

Box::Box(i64 xl, i64 xh, i64 yl, i64 yh) : x_lo(xl), x_hi(xh), y_lo(yl), y_hi(yh) {
    if (x_lo < 1 || y_lo < 1 || x_lo > x_hi || y_lo > y_hi) {
        throw_error(errc::precondition_violated, "box bounds must satisfy 1 <= lo <= hi");
    }
    guard_check(x_hi - x_lo + 1, guards::kWork, "box x span");
    guard_check(y_hi - y_lo + 1, guards::kWork, "box y span");
}

std::vector<HyperbolaSolution> solutions_in_box(const HyperbolaInstance& inst, const Box& box,
                                                bool require_coprime_xy) {
    std::vector<HyperbolaSolution> out;
    for (i64 x = box.x_lo; x <= box.x_hi; ++x) {
        if (gcd_i64(x, inst.q) != 1) continue;
        const i64 y0 = mul_mod(inst.c, mod_inverse_i64(x, inst.q), inst.q);
        // First y >= y_lo in the class y0 (mod q).
        i64 y = y0 + ((box.y_lo - y0) / inst.q) * inst.q;
        while (y < box.y_lo) y += inst.q;
        for (; y <= box.y_hi; y += inst.q) {
            if (require_coprime_xy && gcd_i64(x, y) != 1) continue;
            out.push_back({x, y});
        }
    }
    return out;
}

MinMaxSolution smallest_max_solution(const HyperbolaInstance& inst) {
    HyperbolaSolution best{1, inst.c};  // (1, c) always solves
    i64 best_max = inst.c;
    for (i64 x = 2; x < best_max && x < inst.q; ++x) {
        if (gcd_i64(x, inst.q) != 1) continue;
        const i64 y = mul_mod(inst.c, mod_inverse_i64(x, inst.q), inst.q);
        const i64 m = std::max(x, y);
        if (m < best_max) {
            best = {x, y};
            best_max = m;
        }
    }
    const double expo =
        best_max <= 1 ? 0.0 : std::log(static_cast<double>(best_max)) / std::log(static_cast<double>(inst.q));
    return {best, expo};
}

void lift_and_factor_scan(const HyperbolaInstance& inst, const Box& box, i64 k_max,
                          const std::function<bool(i64, const HyperbolaSolution&)>& visit) {
    if (k_max < 0) throw_error(errc::precondition_violated, "k_max must be >= 0");
    // No divisor pair fits once the lift passes x_hi * y_hi (overflow-safe).
    const i64 cap = box.x_hi > std::numeric_limits<i64>::max() / box.y_hi
                        ? std::numeric_limits<i64>::max()
                        : box.x_hi * box.y_hi;
    i64 m = inst.c;
    for (i64 k = 0; k <= k_max && m <= cap; ++k) {
        for (i64 x : divisors_sorted(m)) {
            if (x < box.x_lo || x > box.x_hi) continue;
            const i64 y = m / x;
            if (y < box.y_lo || y > box.y_hi) continue;
            if (!visit(k, {x, y})) return;
        }
        if (m > cap - inst.q) break;
        m += inst.q;
    }
}

std::optional<HyperbolaSolution> lift_and_factor_search(const HyperbolaInstance& inst, const Box& box,
                                                        i64 k_max) {
    std::optional<HyperbolaSolution> hit;
    lift_and_factor_scan(inst, box, k_max, [&](i64, const HyperbolaSolution& s) {
        hit = s;
        return false;
    });
    return hit;
}

CoverageReport coverage_count(i64 m, i64 x_lo, i64 x_hi, i64 y_lo, i64 y_hi, bool require_coprime_xy) {
    if (m < 1) throw_error(errc::precondition_violated, "modulus must be >= 1");
    const Box box(x_lo, x_hi, y_lo, y_hi);
    const i64 x_span = x_hi - x_lo + 1;
    const i64 y_span = y_hi - y_lo + 1;
    // Without the coprimality filter both axes repeat mod m, so at most m
    // values of each matter. With it, gcd(x, y) depends on the raw values.
    const i64 x_steps = require_coprime_xy ? x_span : std::min(x_span, m);
    const i64 y_steps = require_coprime_xy ? y_span : std::min(y_span, m);
    guard_check(x_steps * y_steps, guards::kWork, "coverage enumeration");

    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    i64 covered = 0;
    for (i64 xi = 0; xi < x_steps && covered < m; ++xi) {
        const i64 x = x_lo + xi;
        for (i64 yi = 0; yi < y_steps && covered < m; ++yi) {
            const i64 y = y_lo + yi;
            if (require_coprime_xy && gcd_i64(x, y) != 1) continue;
            const i64 r = mul_mod(x % m, y % m, m);
            if (!seen[static_cast<std::size_t>(r)]) {
                seen[static_cast<std::size_t>(r)] = true;
                ++covered;
            }
        }
    }
    return {covered, static_cast<double>(covered) / static_cast<double>(m)};
}

IntervalClassification classify_interval(i64 a, i64 q, i64 n) {
    if (q < 2) throw_error(errc::precondition_violated, "classify_interval needs q >= 2");
    if (n < 1) throw_error(errc::precondition_violated, "classify_interval needs N >= 1");
    if (gcd_i64(a, q) != 1) {
        throw_error(errc::not_coprime, "gcd(a, q) = " + std::to_string(gcd_i64(a, q)));
    }
    const i64 target = mod_inverse_i64(a, q);
    const i64 lo = (n + 3) / 4;  // ceil(N/4)
    guard_check(n - lo + 1, guards::kWork, "classify_interval span");
    for (i64 q1 = lo; q1 <= n; ++q1) {
        if (gcd_i64(q1, q) != 1) continue;
        // q2 must lie in the residue class target * inverse(q1) (mod q).
        const i64 q2_res = mul_mod(target, mod_inverse_i64(q1, q), q);
        i64 q2 = q2_res + ((lo - q2_res) / q) * q;
        while (q2 < lo) q2 += q;
        for (; q2 <= n; q2 += q) {
            if (gcd_i64(q1, q2) != 1) continue;
            return {IntervalClass::good, HyperbolaSolution{q1, q2}};
        }
    }
    return {IntervalClass::bad, std::nullopt};
}

}  // namespace duorat
