#include "duorat/characters.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "duorat/guards.hpp"
#include "duorat/harmonic_sums.hpp"

namespace duorat {

namespace {

i64 pow_mod(i64 base, i64 exp, i64 m) {
    i64 result = 1 % m;
    i64 b = base % m;
    if (b < 0) b += m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, b, m);
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    return result;
}

// Smallest primitive root mod the odd prime p.
i64 primitive_root_mod_p(i64 p) {
    const FactorMap fm = factorize_i64(p - 1);
    for (i64 g = 2; g < p; ++g) {
        bool ok = true;
        for (const auto& [lz, e] : fm.entries) {
            const i64 l = static_cast<i64>(lz.get_si());
            if (pow_mod(g, (p - 1) / l, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

// Primitive root mod p^k for odd p; a root mod p^2 stays primitive for all k.
i64 primitive_root_mod_pk(i64 p, i64 pk) {
    i64 g = primitive_root_mod_p(p);
    if (pk > p && pow_mod(g, p - 1, p * p) == 1) g += p;
    return g;
}

void fill_dlog_cyclic(CharGenerator& gen, i64 local_gen) {
    gen.dlog.assign(static_cast<std::size_t>(gen.prime_power), -1);
    i64 v = 1 % gen.prime_power;
    for (i64 t = 0; t < gen.order; ++t) {
        gen.dlog[static_cast<std::size_t>(v)] = t;
        v = mul_mod(v, local_gen, gen.prime_power);
    }
}

i64 crt_lift(i64 value, i64 m, i64 q) {
    // x = value (mod m), x = 1 (mod q/m); gcd(m, q/m) = 1.
    const i64 other = q / m;
    if (other == 1) return value % q;
    const i64 inv = mod_inverse_i64(m % other, other);
    // x = value + m * t with t = (1 - value) * inv (mod other)
    i64 delta = (1 - value) % other;
    if (delta < 0) delta += other;
    const i64 t = mul_mod(delta, inv, other);
    return (value + m * t) % q;
}

}  // namespace

CharacterTable::CharacterTable(i64 q) : q_(q) {
    if (q < 1) throw_error(errc::precondition_violated, "character table needs q >= 1");
    guard_check(q, guards::kCharTable, "character table modulus");

    const FactorMap fm = factorize_i64(q);
    for (const auto& [pz, e] : fm.entries) {
        const i64 p = static_cast<i64>(pz.get_si());
        i64 pk = 1;
        for (unsigned i = 0; i < e; ++i) pk *= p;
        if (p == 2) {
            if (e == 1) continue;  // trivial unit group
            if (e == 2) {
                CharGenerator gen{crt_lift(3, 4, q), 2, 4, {}};
                fill_dlog_cyclic(gen, 3);
                generators_.push_back(std::move(gen));
                continue;
            }
            // 2^e, e >= 3: <-1> x <5>, orders 2 and 2^(e-2).
            CharGenerator sign{crt_lift(pk - 1, pk, q), 2, pk, {}};
            CharGenerator five{crt_lift(5, pk, q), pk / 4, pk, {}};
            sign.dlog.assign(static_cast<std::size_t>(pk), -1);
            five.dlog.assign(static_cast<std::size_t>(pk), -1);
            i64 v = 1;
            for (i64 t = 0; t < five.order; ++t) {
                sign.dlog[static_cast<std::size_t>(v)] = 0;
                five.dlog[static_cast<std::size_t>(v)] = t;
                sign.dlog[static_cast<std::size_t>(pk - v)] = 1;
                five.dlog[static_cast<std::size_t>(pk - v)] = t;
                v = mul_mod(v, 5, pk);
            }
            generators_.push_back(std::move(sign));
            generators_.push_back(std::move(five));
            continue;
        }
        const i64 order = pk / p * (p - 1);  // phi(p^k)
        const i64 g = primitive_root_mod_pk(p, pk);
        CharGenerator gen{crt_lift(g, pk, q), order, pk, {}};
        fill_dlog_cyclic(gen, g);
        generators_.push_back(std::move(gen));
    }

    num_characters_ = 1;
    lambda_ = 1;
    for (const CharGenerator& gen : generators_) {
        num_characters_ *= gen.order;
        lambda_ = lambda_ / gcd_i64(lambda_, gen.order) * gen.order;
    }
    strides_.assign(generators_.size(), 1);
    for (std::size_t i = generators_.size(); i-- > 1;) {
        strides_[i - 1] = strides_[i] * generators_[i].order;
    }
    roots_.resize(static_cast<std::size_t>(lambda_));
    for (i64 j = 0; j < lambda_; ++j) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(lambda_);
        roots_[static_cast<std::size_t>(j)] = {std::cos(t), std::sin(t)};
    }
}

std::vector<i64> CharacterTable::exponents(i64 chi_index) const {
    if (chi_index < 0 || chi_index >= num_characters_) {
        throw_error(errc::precondition_violated, "character index out of range");
    }
    std::vector<i64> e(generators_.size());
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        e[i] = (chi_index / strides_[i]) % generators_[i].order;
    }
    return e;
}

bool CharacterTable::angle_of(i64 chi_index, i64 n, i64& angle_num) const {
    if (chi_index < 0 || chi_index >= num_characters_) {
        throw_error(errc::precondition_violated, "character index out of range");
    }
    i64 nm = n % q_;
    if (nm < 0) nm += q_;
    if (q_ > 1 && gcd_i64(nm, q_) != 1) return false;
    i64 num = 0;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const CharGenerator& gen = generators_[i];
        const i64 e_i = (chi_index / strides_[i]) % gen.order;
        const i64 t_i = gen.dlog[static_cast<std::size_t>(nm % gen.prime_power)];
        num = (num + mul_mod(e_i, t_i, gen.order) * (lambda_ / gen.order)) % lambda_;
    }
    angle_num = num;
    return true;
}

std::complex<double> CharacterTable::eval(i64 chi_index, i64 n) const {
    i64 num;
    if (!angle_of(chi_index, n, num)) return {0.0, 0.0};
    return roots_[static_cast<std::size_t>(num)];
}

CharacterTable character_table(i64 q) { return CharacterTable(q); }

double orthogonality_check(i64 q) {
    guard_check(q, guards::kOrthoQ, "orthogonality modulus");
    const CharacterTable table(q);
    const double phi = static_cast<double>(table.size());
    double worst = 0.0;
    for (i64 chi = 0; chi < table.size(); ++chi) {
        KahanSum re, im;
        for (i64 n = 0; n < q; ++n) {
            const std::complex<double> v = table.eval(chi, n);
            re.add(v.real());
            im.add(v.imag());
        }
        const double expected = table.is_principal(chi) ? phi : 0.0;
        worst = std::max(worst, std::hypot(re.sum - expected, im.sum));
    }
    return worst;
}

CountComparison solution_count_via_characters(i64 q, i64 a, const std::vector<i64>& primes, i64 b_limit) {
    if (q < 2) throw_error(errc::precondition_violated, "solution count needs q >= 2");
    if (b_limit < 1 || b_limit > q) {
        throw_error(errc::precondition_violated, "need 1 <= B <= q");
    }
    if (gcd_i64(a, q) != 1) throw_error(errc::not_coprime, "gcd(a, q) > 1");
    for (i64 p : primes) {
        if (gcd_i64(p, q) != 1) {
            throw_error(errc::not_coprime, "prime " + std::to_string(p) + " shares a factor with q");
        }
    }
    i64 am = a % q;
    if (am < 0) am += q;

    // Direct enumeration over ordered pairs.
    i64 direct = 0;
    for (i64 p1 : primes) {
        for (i64 p2 : primes) {
            if (p1 == p2) continue;
            const i64 s = mul_mod(mul_mod(am, p1 % q, q), p2 % q, q);
            if (s >= 1 && s <= b_limit) ++direct;
        }
    }

    const CharacterTable table(q);
    guard_check(table.size() * (static_cast<i64>(primes.size()) + b_limit), guards::kWork,
                "character counting work");

    // (1/phi) sum_chi chi(a) [W^2 - W_2] conj-sum over B, with
    // W = sum_p chi(p), W_2 = sum_p chi(p^2).
    KahanSum total_re, total_im;
    for (i64 chi = 0; chi < table.size(); ++chi) {
        std::complex<double> w{0.0, 0.0}, w2{0.0, 0.0}, u{0.0, 0.0};
        for (i64 p : primes) {
            w += table.eval(chi, p % q);
            w2 += table.eval(chi, mul_mod(p % q, p % q, q));
        }
        for (i64 b = 1; b <= b_limit; ++b) u += std::conj(table.eval(chi, b));
        const std::complex<double> term = table.eval(chi, am) * (w * w - w2) * u;
        total_re.add(term.real());
        total_im.add(term.imag());
    }
    const double phi = static_cast<double>(table.size());
    const double via = total_re.sum / phi;

    const CoprimeCount bq = coprime_count(Int(static_cast<long>(q)), make_rat(b_limit, 1));
    const double p_size = static_cast<double>(primes.size());
    const double main_term = p_size * (p_size - 1.0) * bq.count.get_d() / phi;

    return {direct, via, main_term, std::abs(static_cast<double>(direct) - via)};
}

CharSumReport char_sum_max(const CharacterTable& table, i64 chi_index) {
    if (table.is_principal(chi_index)) {
        throw_error(errc::principal_character, "char_sum_max needs a non-principal character");
    }
    const i64 q = table.modulus();
    KahanSum re, im;
    double max_partial = 0.0, glh_ratio_max = 0.0;
    i64 argmax_m = 1;
    for (i64 n = 1; n <= q; ++n) {
        const std::complex<double> v = table.eval(chi_index, n);
        re.add(v.real());
        im.add(v.imag());
        const double mag = std::hypot(re.sum, im.sum);
        if (mag > max_partial) {
            max_partial = mag;
            argmax_m = n;
        }
        glh_ratio_max = std::max(glh_ratio_max, mag / std::sqrt(static_cast<double>(n)));
    }
    const double pv = std::sqrt(static_cast<double>(q)) * std::log(static_cast<double>(q));
    if (max_partial > pv) {
        throw std::logic_error("Polya-Vinogradov bound violated; character table is inconsistent");
    }
    return {max_partial, argmax_m, pv, std::sqrt(static_cast<double>(q)), glh_ratio_max};
}

}  // namespace duorat
