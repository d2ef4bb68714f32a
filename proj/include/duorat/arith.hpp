#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "duorat/rational.hpp"

namespace duorat {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// Ordered prime factorization; primes strictly increasing, exponents >= 1.
struct FactorMap {
    std::vector<std::pair<Int, unsigned>> entries;

    Int reconstruct() const {
        Int n = 1;
        for (const auto& [p, e] : entries)
            for (unsigned i = 0; i < e; ++i) n *= p;
        return n;
    }
};

struct ArithInfo {
    Int phi;
    int mobius = 0;  // -1, 0, 1
    Int divisor_count;
    int omega = 0;  // distinct prime divisors
    FactorMap factors;
};

struct CoprimeCount {
    Int count;
    Rat main_term;    // B * phi(q) / q
    Int error_bound;  // 2 * d(q)
};

// Multiplicative inverse of a mod q, in [1, q-1]. Requires q >= 2.
Int mod_inverse(const Int& a, const Int& q);

// a1*q2 + a2*q1 = b with 0 <= a1 < q1, i.e. b/(q1*q2) = a1/q1 + a2/q2.
// Requires gcd(q1, q2) = 1.
std::pair<Int, Int> split_fraction(const Int& b, const Int& q1, const Int& q2);

// Trial division against the cached sieve; exact for n <= 10^12.
FactorMap factorize(const Int& n);
ArithInfo arithmetic_functions(const Int& n);

bool is_prime(i64 n);

// All divisors of n in increasing order.
std::vector<i64> divisors_sorted(i64 n);
FactorMap factorize_i64(i64 n);

// Primes p with lo <= p <= hi, inclusive rational endpoints.
std::vector<i64> primes_in_range(const Rat& lo, const Rat& hi);
std::vector<i64> primes_in_range(i64 lo, i64 hi);

// #{1 <= n <= B : gcd(n, q) = 1} by Moebius inclusion-exclusion over the
// squarefree divisors of q, with the B*phi(q)/q main term and 2*d(q) budget.
CoprimeCount coprime_count(const Int& q, const Rat& B);

inline i64 gcd_i64(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline i64 mul_mod(i64 a, i64 b, i64 m) {
    return static_cast<i64>(static_cast<__int128>(a) * b % m);
}

// Inverse of a mod m for machine-size m; requires gcd(a, m) = 1, m >= 2.
i64 mod_inverse_i64(i64 a, i64 m);

}  // namespace duorat
