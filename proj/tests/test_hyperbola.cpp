#include <doctest.h>

#include <random>

#include "duorat/errors.hpp"
#include "duorat/hyperbola.hpp"

using namespace duorat;

namespace {

// Independent oracle for classify_interval: plain double loop over the box.
std::optional<HyperbolaSolution> classify_oracle(i64 a, i64 q, i64 n) {
    const i64 target = mod_inverse_i64(a, q);
    const i64 lo = (n + 3) / 4;
    for (i64 q1 = lo; q1 <= n; ++q1) {
        for (i64 q2 = lo; q2 <= n; ++q2) {
            if (gcd_i64(q1, q2) != 1) continue;
            if (mul_mod(q1 % q, q2 % q, q) == target) return HyperbolaSolution{q1, q2};
        }
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("instance validation") {
    CHECK_THROWS_AS(HyperbolaInstance(6, 3), Error);
    CHECK_THROWS_AS(HyperbolaInstance(6, 0), Error);
    const HyperbolaInstance wrapped(7, 10);  // residues normalize mod q
    CHECK(wrapped.c == 3);
    const HyperbolaInstance negative(7, -1);
    CHECK(negative.c == 6);
}

TEST_CASE("solutions_in_box on known instances") {
    const auto twelve = solutions_in_box(HyperbolaInstance(13, 5), Box::square(1, 12), false);
    CHECK(twelve.size() == 12);
    for (std::size_t i = 0; i < twelve.size(); ++i) {
        CHECK(twelve[i].x == static_cast<i64>(i + 1));  // one solution per x
        CHECK(mul_mod(twelve[i].x, twelve[i].y, 13) == 5);
    }

    const auto four = solutions_in_box(HyperbolaInstance(5, 1), Box::square(1, 4), false);
    REQUIRE(four.size() == 4);
    CHECK(four[0].x == 1);
    CHECK(four[0].y == 1);
    CHECK(four[1].x == 2);
    CHECK(four[1].y == 3);
    CHECK(four[2].x == 3);
    CHECK(four[2].y == 2);
    CHECK(four[3].x == 4);
    CHECK(four[3].y == 4);
}

TEST_CASE("solutions_in_box respects shifted windows and coprimality") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 400; ++i) {
        const i64 q = 2 + static_cast<i64>(rng() % 80);
        i64 c = 1 + static_cast<i64>(rng() % (q - 1));
        if (gcd_i64(c, q) != 1) continue;
        const i64 x_lo = 1 + static_cast<i64>(rng() % 30);
        const i64 y_lo = 1 + static_cast<i64>(rng() % 200);
        const Box box(x_lo, x_lo + static_cast<i64>(rng() % 60), y_lo, y_lo + static_cast<i64>(rng() % 300));
        const bool coprime = (rng() % 2) == 0;
        const auto sols = solutions_in_box(HyperbolaInstance(q, c), box, coprime);

        // oracle: full double loop
        std::vector<HyperbolaSolution> expected;
        for (i64 x = box.x_lo; x <= box.x_hi; ++x) {
            for (i64 y = box.y_lo; y <= box.y_hi; ++y) {
                if (mul_mod(x % q, y % q, q) != c % q) continue;
                if (coprime && gcd_i64(x, y) != 1) continue;
                expected.push_back({x, y});
            }
        }
        REQUIRE(sols.size() == expected.size());
        for (std::size_t j = 0; j < sols.size(); ++j) {
            CHECK(sols[j].x == expected[j].x);
            CHECK(sols[j].y == expected[j].y);
        }
    }
}

TEST_CASE("smallest_max_solution on known instances") {
    const MinMaxSolution a = smallest_max_solution(HyperbolaInstance(13, 5));
    CHECK(a.sol.x == 1);
    CHECK(a.sol.y == 5);

    for (const i64 q : {2L, 3L, 10L, 97L, 1000L}) {
        const MinMaxSolution unit = smallest_max_solution(HyperbolaInstance(q, 1));
        CHECK(unit.sol.x == 1);
        CHECK(unit.sol.y == 1);
        CHECK(unit.exponent == 0.0);
    }

    const MinMaxSolution b = smallest_max_solution(HyperbolaInstance(101, 100));
    CHECK(b.sol.x == 10);
    CHECK(b.sol.y == 10);
    CHECK(b.exponent == doctest::Approx(0.4989).epsilon(1e-3));
}

TEST_CASE("smallest_max_solution is minimal and tie-broken by x") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 300; ++i) {
        const i64 q = 2 + static_cast<i64>(rng() % 150);
        const i64 c = 1 + static_cast<i64>(rng() % (q - 1));
        if (gcd_i64(c, q) != 1) continue;
        const MinMaxSolution m = smallest_max_solution(HyperbolaInstance(q, c));
        CHECK(mul_mod(m.sol.x, m.sol.y, q) == c);
        const i64 best = std::max(m.sol.x, m.sol.y);
        CHECK(best <= q - 1);  // witness (1, c) caps it
        // oracle: no solution has smaller max, and none with equal max has smaller x
        for (i64 x = 1; x < q; ++x) {
            if (gcd_i64(x, q) != 1) continue;
            const i64 y = mul_mod(c, mod_inverse_i64(x, q), q);
            const i64 mx = std::max(x, y);
            CHECK(mx >= best);
            if (mx == best) CHECK(x >= m.sol.x);
        }
    }
}

TEST_CASE("lift_and_factor_search on known instances") {
    const auto a = lift_and_factor_search(HyperbolaInstance(13, 5), Box::square(1, 6), 3);
    REQUIRE(a.has_value());
    CHECK(a->x == 1);
    CHECK(a->y == 5);

    const auto b = lift_and_factor_search(HyperbolaInstance(13, 5), Box::square(2, 6), 3);
    REQUIRE(b.has_value());
    CHECK(b->x == 3);
    CHECK(b->y == 6);

    const auto c = lift_and_factor_search(HyperbolaInstance(13, 5), Box::square(2, 3), 3);
    CHECK(!c.has_value());
}

TEST_CASE("lift search hits satisfy the congruence and scan order") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 200; ++i) {
        const i64 q = 2 + static_cast<i64>(rng() % 60);
        const i64 c = 1 + static_cast<i64>(rng() % (q - 1));
        if (gcd_i64(c, q) != 1) continue;
        const HyperbolaInstance inst(q, c);
        i64 last_k = -1, last_x = 0;
        lift_and_factor_scan(inst, Box::square(1, q), q, [&](i64 k, const HyperbolaSolution& s) {
            CHECK(s.x * s.y == c + k * q);
            CHECK(mul_mod(s.x % q, s.y % q, q) == c);
            if (k == last_k) CHECK(s.x > last_x);
            else CHECK(k > last_k);
            last_k = k;
            last_x = s.x;
            return true;
        });
    }
}

TEST_CASE("lift route agrees with smallest_max_solution") {
    // The lift enumeration with k_max = q-1 sees every solution in
    // [1, q-1]^2, so shrinking the box to the oracle's max must still hit,
    // and shrinking below it must not.
    for (i64 q = 2; q <= 60; ++q) {
        for (i64 c = 1; c < q; ++c) {
            if (gcd_i64(c, q) != 1) continue;
            const HyperbolaInstance inst(q, c);
            const i64 best = std::max(smallest_max_solution(inst).sol.x, smallest_max_solution(inst).sol.y);
            const auto hit = lift_and_factor_search(inst, Box::square(1, best), q - 1);
            REQUIRE(hit.has_value());
            CHECK(std::max(hit->x, hit->y) == best);
            if (best > 1) {
                CHECK(!lift_and_factor_search(inst, Box::square(1, best - 1), q - 1).has_value());
            }
        }
    }
}

TEST_CASE("coverage_count on known windows") {
    CHECK(coverage_count(5, 1, 4, 1, 4, false).covered == 4);  // residue 0 unreachable
    CHECK(coverage_count(12, 1, 4, 1, 3, false).covered == 8);
    for (i64 m = 1; m <= 200; ++m) {
        CHECK(coverage_count(m, 1, m, 1, m, false).covered == m);  // x = 1 row suffices
    }
    // shifted window, against a double loop
    std::mt19937_64 rng(41);
    for (int i = 0; i < 200; ++i) {
        const i64 m = 1 + static_cast<i64>(rng() % 40);
        const i64 x_lo = 1 + static_cast<i64>(rng() % 20), x_hi = x_lo + static_cast<i64>(rng() % 50);
        const i64 y_lo = 1 + static_cast<i64>(rng() % 1000), y_hi = y_lo + static_cast<i64>(rng() % 80);
        const bool coprime = (rng() % 2) == 0;
        std::vector<bool> seen(static_cast<std::size_t>(m), false);
        i64 expected = 0;
        for (i64 x = x_lo; x <= x_hi; ++x) {
            for (i64 y = y_lo; y <= y_hi; ++y) {
                if (coprime && gcd_i64(x, y) != 1) continue;
                const i64 r = mul_mod(x % m, y % m, m);
                if (!seen[static_cast<std::size_t>(r)]) {
                    seen[static_cast<std::size_t>(r)] = true;
                    ++expected;
                }
            }
        }
        CHECK(coverage_count(m, x_lo, x_hi, y_lo, y_hi, coprime).covered == expected);
    }
}

TEST_CASE("classify_interval on known values") {
    const IntervalClassification good1 = classify_interval(1, 11, 8);
    CHECK(good1.cls == IntervalClass::good);
    REQUIRE(good1.witness.has_value());
    CHECK(good1.witness->x == 3);
    CHECK(good1.witness->y == 4);

    CHECK(classify_interval(9, 11, 8).cls == IntervalClass::bad);

    const IntervalClassification good2 = classify_interval(1, 7, 8);
    CHECK(good2.cls == IntervalClass::good);
    REQUIRE(good2.witness.has_value());
    CHECK(good2.witness->x == 3);
    CHECK(good2.witness->y == 5);

    CHECK_THROWS_AS(classify_interval(4, 8, 8), Error);  // gcd(a, q) > 1
}

TEST_CASE("classify_interval agrees with the double-loop oracle") {
    for (const i64 n : {4L, 8L, 16L, 32L}) {
        for (i64 q = 2; q <= 200; q += (q < 40 ? 1 : 3)) {
            for (i64 a = 1; a < q; ++a) {
                if (gcd_i64(a, q) != 1) continue;
                const auto got = classify_interval(a, q, n);
                const auto expected = classify_oracle(a, q, n);
                CHECK((got.cls == IntervalClass::good) == expected.has_value());
                if (got.witness) {
                    const i64 lo = (n + 3) / 4;
                    CHECK(got.witness->x >= lo);
                    CHECK(got.witness->y >= lo);
                    CHECK(got.witness->x <= n);
                    CHECK(got.witness->y <= n);
                    CHECK(gcd_i64(got.witness->x, got.witness->y) == 1);
                    CHECK(mul_mod(got.witness->x % q, got.witness->y % q, q) == mod_inverse_i64(a, q));
                }
            }
        }
    }
}

TEST_CASE("box guards reject runaway requests") {
    CHECK_THROWS_AS(Box(1, 100000000, 1, 5), Error);
    CHECK_THROWS_AS(Box(2, 1, 1, 5), Error);
    CHECK_THROWS_AS(coverage_count(10000000, 1, 10000000, 1, 10000000, false), Error);
}
