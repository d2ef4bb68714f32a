#include "duorat/single_approx.hpp"

#include <stdexcept>

#include "duorat/guards.hpp"

namespace duorat {

std::vector<SingleApprox> convergents(const Rat& alpha) {
    std::vector<SingleApprox> out;
    // Euclid on (num, den): alpha = [a0; a1, a2, ...], h/k recurrences.
    Int num = alpha.get_num(), den = alpha.get_den();
    Int h_prev = 0, k_prev = 1;  // h_{-2}/k_{-2}
    Int h = 1, k = 0;            // h_{-1}/k_{-1}; first step lands on a0/1
    Int r0 = num, r1 = den;
    while (r1 != 0) {
        const Int a = floor_div(r0, r1);
        const Int r2 = r0 - a * r1;
        r0 = r1;
        r1 = r2;
        const Int h_next = a * h + h_prev;
        const Int k_next = a * k + k_prev;
        h_prev = h;
        k_prev = k;
        h = h_next;
        k = k_next;
        out.push_back({h, k, rat_abs(alpha - make_rat(h, k))});
    }
    return out;
}

SingleApprox dirichlet_approx(const Rat& alpha, const Int& n) {
    if (n < 1) throw_error(errc::precondition_violated, "dirichlet_approx needs N >= 1");
    const std::vector<SingleApprox> conv = convergents(alpha);
    SingleApprox best = conv.front();  // q = 1 entry always exists
    for (const SingleApprox& c : conv) {
        if (c.q <= n) best = c;
    }
    // Theorem guarantee, checked exactly: |alpha - a/q| <= 1/(qN).
    if (best.error > make_rat(Int(1), best.q * n)) {
        throw std::logic_error("dirichlet_approx: convergent violates the 1/(qN) bound");
    }
    return best;
}

SingleApprox best_single(const Rat& alpha, const Int& n) {
    if (n < 1) throw_error(errc::precondition_violated, "best_single needs N >= 1");
    guard_check(to_i64(n), guards::kWork, "best_single N");
    SingleApprox best;
    bool have = false;
    for (Int q = 1; q <= n; ++q) {
        // Optimal numerator for this q; exact halves take the smaller a.
        const Int a = rat_round_nearest(alpha * q);
        const Rat err = rat_abs(alpha - make_rat(a, q));
        if (!have || err < best.error) {
            const Rat v = make_rat(a, q);  // store reduced
            best = {v.get_num(), v.get_den(), err};
            have = true;
        }
    }
    return best;
}

}  // namespace duorat
