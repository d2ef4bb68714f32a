#pragma once

#include <vector>

#include "duorat/rational.hpp"

namespace duorat {

// One rational approximant a/q of a target value, with its exact error.
struct SingleApprox {
    Int a;
    Int q;
    Rat error;  // |alpha - a/q|, exact

    Rat value() const { return make_rat(a, q); }
};

// Continued-fraction convergents of alpha, ending at alpha itself.
// Errors are strictly decreasing and reach 0 at the last entry.
std::vector<SingleApprox> convergents(const Rat& alpha);

// Last convergent with q <= N. Satisfies |alpha - a/q| <= 1/(qN) exactly;
// the inequality is re-checked in rational arithmetic before returning.
SingleApprox dirichlet_approx(const Rat& alpha, const Int& n);

// Exhaustive minimum of |alpha - a/q| over 1 <= q <= N, a = nearest integer
// to alpha*q. Ties: smaller q, then smaller a.
SingleApprox best_single(const Rat& alpha, const Int& n);

}  // namespace duorat
