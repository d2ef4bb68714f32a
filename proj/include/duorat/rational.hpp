#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "duorat/errors.hpp"

namespace duorat {

// Exact arithmetic types. mpq_class keeps values canonical (den >= 1,
// gcd(|num|, den) = 1), which is the storage invariant for every rational
// quantity in the library. No operation ever rounds.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(std::int64_t num, std::int64_t den) {
    return make_rat(Int(static_cast<long>(num)), Int(static_cast<long>(den)));
}

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int rat_floor(const Rat& x) { return floor_div(x.get_num(), x.get_den()); }
inline Int rat_ceil(const Rat& x) { return ceil_div(x.get_num(), x.get_den()); }

// Nearest integer to x; exact halves round down (the smaller candidate),
// matching the library-wide tie-break toward smaller numerators.
inline Int rat_round_nearest(const Rat& x) {
    Int fl = rat_floor(x);
    Rat frac = x - Rat(fl);
    if (frac * 2 > 1) return fl + 1;
    return fl;
}

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline bool fits_i64(const Int& v) { return v.fits_slong_p(); }

inline std::int64_t to_i64(const Int& v) {
    if (!v.fits_slong_p()) throw_error(errc::range_too_large, "integer exceeds 64-bit range: " + v.get_str());
    return static_cast<std::int64_t>(v.get_si());
}

inline double to_double(const Rat& x) { return x.get_d(); }
inline double to_double(const Int& v) { return v.get_d(); }

// Machine-readable serialization is always "num/den", e.g. "-7/15", "0/1".
inline std::string rat_str(const Rat& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

// Accepts "p/q" and decimal strings ("3.14", "-0.5", ".25"), converted
// exactly (digits / 10^k). Binary floating point is never accepted.
inline Rat parse_rational(const std::string& text) {
    auto fail = [&]() -> Rat { throw_error(errc::parse_error, "not a rational: '" + text + "'"); };
    if (text.empty()) return fail();
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = (text[pos] == '-');
        ++pos;
    }
    std::string int_part, frac_part, den_part;
    bool seen_dot = false, seen_slash = false;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (c >= '0' && c <= '9') {
            if (seen_slash) den_part += c;
            else if (seen_dot) frac_part += c;
            else int_part += c;
        } else if (c == '.' && !seen_dot && !seen_slash) {
            seen_dot = true;
        } else if (c == '/' && !seen_slash && !seen_dot) {
            seen_slash = true;
        } else {
            return fail();
        }
    }
    if (seen_slash) {
        if (int_part.empty() || den_part.empty()) return fail();
        Int den(den_part);
        if (den == 0) return fail();
        Rat r = make_rat(Int(int_part), den);
        return negative ? Rat(-r) : r;
    }
    if (int_part.empty() && frac_part.empty()) return fail();
    Int num(int_part.empty() ? "0" : int_part);
    for (std::size_t i = 0; i < frac_part.size(); ++i) num *= 10;
    if (!frac_part.empty()) num += Int(frac_part);
    Int den(1);
    for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
    Rat r = make_rat(num, den);
    return negative ? Rat(-r) : r;
}

}  // namespace duorat
