#pragma once

#include <complex>
#include <vector>

#include "duorat/arith.hpp"

namespace duorat {

// One cyclic factor of (Z/q)*: a generator residue (lifted mod q), its
// order, the prime power it acts on, and a discrete-log table indexed by
// n mod prime_power (-1 marks non-units).
struct CharGenerator {
    i64 residue;
    i64 order;
    i64 prime_power;
    std::vector<i64> dlog;
};

// The full group of Dirichlet characters mod q. Characters are indexed
// 0..phi(q)-1 in mixed radix over the generator orders; index 0 is the
// principal character. Values are exact angle indices j with
// chi(n) = e(j / lambda), materialized as complex only on evaluation.
class CharacterTable {
public:
    explicit CharacterTable(i64 q);

    i64 modulus() const { return q_; }
    i64 size() const { return num_characters_; }  // phi(q)
    i64 angle_denominator() const { return lambda_; }
    const std::vector<CharGenerator>& generators() const { return generators_; }

    std::vector<i64> exponents(i64 chi_index) const;
    bool is_principal(i64 chi_index) const { return chi_index == 0; }

    // Exact evaluation: false if gcd(n, q) > 1 (chi(n) = 0), otherwise sets
    // the angle numerator so chi(n) = e(angle_num / lambda).
    bool angle_of(i64 chi_index, i64 n, i64& angle_num) const;
    std::complex<double> eval(i64 chi_index, i64 n) const;

private:
    i64 q_;
    i64 num_characters_;
    i64 lambda_;  // lcm of generator orders
    std::vector<CharGenerator> generators_;
    std::vector<i64> strides_;                // mixed-radix strides per generator
    std::vector<std::complex<double>> roots_;  // e(j / lambda)
};

CharacterTable character_table(i64 q);

// Max over character pairs of |sum_n chi(n)*conj(chi'(n)) - phi(q)*[chi=chi']|.
// Pairs collapse to single characters through the product character, whose
// exponents are exact.
double orthogonality_check(i64 q);

struct CountComparison {
    i64 direct;
    double via_characters;
    double main_term;  // |P|(|P|-1)|B_q| / phi(q)
    double discrepancy;
};

// Number of (q1 != q2 in P, b <= B) with a*q1*q2 = b (mod q), counted
// directly and through the character orthogonality identity.
CountComparison solution_count_via_characters(i64 q, i64 a, const std::vector<i64>& primes, i64 b_limit);

struct CharSumReport {
    double max_partial;  // max_{1<=M<=q} |sum_{n<=M} chi(n)|
    i64 argmax_m;
    double pv_bound;       // sqrt(q) ln q
    double glh_shape;      // sqrt(q), the square-root scale at M = q
    double glh_ratio_max;  // max_{1<=M<=q} |sum_{n<=M} chi(n)| / sqrt(M), trend only
};

// Partial-sum profile of a non-principal character.
CharSumReport char_sum_max(const CharacterTable& table, i64 chi_index);

}  // namespace duorat
