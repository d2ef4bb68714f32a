#include "duorat/arith.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "duorat/guards.hpp"

namespace duorat {

namespace {

// Process-wide base-prime cache. Grown on demand and only appended to, so
// concurrent readers behind the mutex always see the same prefix.
class SieveCache {
public:
    // Primes up to at least `limit`, ascending.
    const std::vector<i64>& primes_up_to(i64 limit) {
        std::lock_guard<std::mutex> lock(mutex_);
        if (limit > sieved_to_) grow(limit);
        return primes_;
    }

private:
    void grow(i64 limit) {
        i64 target = std::max<i64>(limit, 1 << 10);
        target = std::max(target, sieved_to_ * 2);
        std::vector<bool> composite(static_cast<std::size_t>(target) + 1, false);
        primes_.clear();
        for (i64 p = 2; p <= target; ++p) {
            if (composite[static_cast<std::size_t>(p)]) continue;
            primes_.push_back(p);
            for (i64 m = p * p; m <= target; m += p) composite[static_cast<std::size_t>(m)] = true;
        }
        sieved_to_ = target;
    }

    std::mutex mutex_;
    std::vector<i64> primes_;
    i64 sieved_to_ = 0;
};

SieveCache& sieve_cache() {
    static SieveCache cache;
    return cache;
}

i64 isqrt_i64(i64 n) {
    if (n < 0) return 0;
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace

Int mod_inverse(const Int& a, const Int& q) {
    if (q < 2) throw_error(errc::precondition_violated, "mod_inverse needs q >= 2, got q = " + q.get_str());
    Int inv;
    const int ok = mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t());
    if (ok == 0) {
        throw_error(errc::not_coprime,
                    "gcd(" + a.get_str() + ", " + q.get_str() + ") = " + int_gcd(a, q).get_str());
    }
    return inv;  // mpz_invert yields a residue in [0, q-1]; an inverse is never 0
}

std::pair<Int, Int> split_fraction(const Int& b, const Int& q1, const Int& q2) {
    if (q1 < 1 || q2 < 1) throw_error(errc::precondition_violated, "split_fraction needs positive denominators");
    if (int_gcd(q1, q2) != 1) {
        throw_error(errc::not_coprime, "gcd(q1, q2) = " + int_gcd(q1, q2).get_str());
    }
    Int a1 = 0;
    if (q1 > 1) {
        const Int inv_q2 = mod_inverse(q2, q1);
        Int bm = b % q1;
        if (bm < 0) bm += q1;
        a1 = (bm * inv_q2) % q1;
        if (a1 < 0) a1 += q1;
    }
    const Int a2 = (b - a1 * q2) / q1;
    return {a1, a2};
}

FactorMap factorize_i64(i64 n) {
    FactorMap fm;
    if (n < 1) throw_error(errc::precondition_violated, "factorize needs n >= 1");
    const i64 root = isqrt_i64(n);
    const auto& primes = sieve_cache().primes_up_to(root);
    for (i64 p : primes) {
        if (p > root || p * p > n) break;
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            fm.entries.emplace_back(Int(static_cast<long>(p)), e);
        }
    }
    if (n > 1) fm.entries.emplace_back(Int(static_cast<long>(n)), 1u);
    return fm;
}

FactorMap factorize(const Int& n) {
    if (n < 1) throw_error(errc::precondition_violated, "factorize needs n >= 1");
    if (!n.fits_slong_p() || n > Int(static_cast<long>(guard_cap(guards::kFactor)))) {
        throw_error(errc::range_too_large, "factoring bound exceeded for n = " + n.get_str());
    }
    return factorize_i64(static_cast<i64>(n.get_si()));
}

ArithInfo arithmetic_functions(const Int& n) {
    ArithInfo info;
    info.factors = factorize(n);
    info.phi = 1;
    info.divisor_count = 1;
    info.mobius = 1;
    info.omega = static_cast<int>(info.factors.entries.size());
    for (const auto& [p, e] : info.factors.entries) {
        Int pe = 1;
        for (unsigned i = 0; i + 1 < e; ++i) pe *= p;
        info.phi *= pe * (p - 1);
        info.divisor_count *= static_cast<long>(e + 1);
        info.mobius = (e > 1) ? 0 : -info.mobius;
    }
    return info;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    const i64 root = isqrt_i64(n);
    const auto& primes = sieve_cache().primes_up_to(root);
    for (i64 p : primes) {
        if (p > root) break;
        if (n % p == 0) return n == p;
    }
    return true;
}

std::vector<i64> divisors_sorted(i64 n) {
    const FactorMap fm = factorize_i64(n);
    std::vector<i64> divs{1};
    for (const auto& [pz, e] : fm.entries) {
        const i64 p = static_cast<i64>(pz.get_si());
        const std::size_t base = divs.size();
        i64 pe = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<i64> primes_in_range(const Rat& lo, const Rat& hi) {
    if (hi < 0) throw_error(errc::precondition_violated, "primes_in_range needs hi >= 0");
    if (hi < lo) return {};
    Int lo_z = rat_ceil(lo);
    if (lo_z < 2) lo_z = 2;
    const Int hi_z = rat_floor(hi);
    if (hi_z < lo_z) return {};
    guard_check(to_i64(hi_z), guards::kSieve, "prime range endpoint");
    const i64 a = to_i64(lo_z), b = to_i64(hi_z);

    const auto& base = sieve_cache().primes_up_to(isqrt_i64(b));
    std::vector<bool> composite(static_cast<std::size_t>(b - a + 1), false);
    for (i64 p : base) {
        if (p * p > b) break;
        i64 start = std::max(p * p, ((a + p - 1) / p) * p);
        for (i64 m = start; m <= b; m += p) composite[static_cast<std::size_t>(m - a)] = true;
    }
    std::vector<i64> out;
    for (i64 v = a; v <= b; ++v) {
        if (v >= 2 && !composite[static_cast<std::size_t>(v - a)]) out.push_back(v);
    }
    return out;
}

std::vector<i64> primes_in_range(i64 lo, i64 hi) {
    return primes_in_range(make_rat(lo, 1), make_rat(hi, 1));
}

CoprimeCount coprime_count(const Int& q, const Rat& B) {
    if (q < 1) throw_error(errc::precondition_violated, "coprime_count needs q >= 1");
    if (B < 1) throw_error(errc::precondition_violated, "coprime_count needs B >= 1");
    const ArithInfo info = arithmetic_functions(q);
    const Int b_floor = rat_floor(B);

    // Sum of mu(d) * floor(B/d) over squarefree divisors d | q.
    Int count = 0;
    const std::size_t k = info.factors.entries.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        Int d = 1;
        int sign = 1;
        for (std::size_t i = 0; i < k; ++i) {
            if (mask & (std::size_t{1} << i)) {
                d *= info.factors.entries[i].first;
                sign = -sign;
            }
        }
        count += sign * floor_div(b_floor, d);
    }

    CoprimeCount result;
    result.count = count;
    result.main_term = B * make_rat(info.phi, q);
    result.error_bound = 2 * info.divisor_count;
    return result;
}

i64 mod_inverse_i64(i64 a, i64 m) {
    if (m < 2) throw_error(errc::precondition_violated, "mod_inverse needs modulus >= 2");
    i64 r0 = m, r1 = a % m;
    if (r1 < 0) r1 += m;
    i64 t0 = 0, t1 = 1;
    while (r1 != 0) {
        const i64 q = r0 / r1;
        const i64 r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        const i64 t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) {
        throw_error(errc::not_coprime,
                    "gcd(" + std::to_string(a) + ", " + std::to_string(m) + ") = " + std::to_string(r0));
    }
    if (t0 < 0) t0 += m;
    return t0;
}

}  // namespace duorat
