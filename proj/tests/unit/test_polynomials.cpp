#include <stdexcept>
#include <random>

#include "doctest.h"
#include "rarebit/polynomials.hpp"

using namespace rarebit;

namespace {

IntPolynomial poly(std::string_view lit) { return IntPolynomial::parse(lit); }

}  // namespace

TEST_CASE("parsing and printing") {
    IntPolynomial p = poly("1,2,0,1");
    CHECK(p.degree() == 3);
    CHECK(p.to_coeff_string() == "1,2,0,1");
    CHECK(p.to_pretty_string() == "X^3 + 2X + 1");
    CHECK(poly("0,0,1").to_pretty_string() == "X^2");
    CHECK(poly("1,-3,1").to_pretty_string() == "X^2 - 3X + 1");
    CHECK(poly("5").degree() == 0);
    CHECK_THROWS_AS(poly(""), std::invalid_argument);
    CHECK_THROWS_AS(poly("1,,2"), std::invalid_argument);
    CHECK(poly("3,0,0").degree() == 0);  // trailing zero coefficients dropped
}

TEST_CASE("evaluation") {
    CHECK(poly("0,0,1").eval(BigNat(7)) == BigNat(49));
    CHECK(poly("1,2,0,1").eval(BigNat(3)) == BigNat(34));
    BigNat big = BigNat::power_of_two(20) + BigNat(1);
    CHECK(poly("0,0,1").eval(big) ==
          BigNat::power_of_two(40) + BigNat::power_of_two(21) + BigNat(1));
    CHECK_THROWS_AS(poly("-1,0,0,1").eval(BigNat(0)), std::domain_error);

    std::uint64_t out = 0;
    CHECK(poly("1,2,0,1").eval_u64(3, out));
    CHECK(out == 34);
    CHECK_THROWS_AS(poly("-5,1").eval_u64(2, out), std::domain_error);

    // native path agrees with the exact path wherever it reports success
    std::mt19937_64 rng(37);
    for (int iter = 0; iter < 300; ++iter) {
        std::vector<BigInt> coeffs;
        std::size_t d = 1 + rng() % 4;
        for (std::size_t i = 0; i <= d; ++i)
            coeffs.emplace_back(static_cast<std::int64_t>(rng() % 2000) - 1000);
        if (coeffs.back().is_zero()) coeffs.back() = BigInt(1);
        IntPolynomial p(coeffs);
        std::uint64_t n = rng() % (1ull << 40);
        std::uint64_t fast = 0;
        bool ok;
        BigNat exact;
        bool negative = false;
        try {
            exact = p.eval(BigNat(n));
        } catch (const std::domain_error&) {
            negative = true;
        }
        try {
            ok = p.eval_u64(n, fast);
        } catch (const std::domain_error&) {
            CHECK(negative);
            continue;
        }
        if (ok) {
            CHECK(!negative);  // a certified fast value implies a nonnegative result
            CHECK(BigNat(fast) == exact);
        }
    }
}

TEST_CASE("translation") {
    CHECK(poly("1,-3,1").translate(BigNat(3)) == poly("1,3,1"));
    CHECK(poly("1,-3,1").translate(BigNat(0)) == poly("1,-3,1"));
    CHECK(poly("0,0,1").translate(BigNat(1)) == poly("1,2,1"));

    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<BigInt> coeffs;
        std::size_t d = 1 + rng() % 4;
        for (std::size_t i = 0; i < d; ++i)
            coeffs.emplace_back(static_cast<std::int64_t>(rng() % 200) - 100);
        coeffs.emplace_back(static_cast<std::int64_t>(1 + rng() % 100));  // positive lead
        IntPolynomial p(coeffs);
        BigNat a(rng() % 50);
        BigNat n(rng() % 1000);
        IntPolynomial q = p.translate(a);
        // Q(n) = P(n + a); compare through a sign-safe offset evaluation
        BigNat offset = BigNat(1) << 40;  // large enough to keep both positive
        CHECK(q.eval(n + offset) == p.eval(n + offset + a));
    }
}

TEST_CASE("nonnegative normalization") {
    auto [a1, q1] = normalize_nonnegative(poly("1,0,1"));
    CHECK(a1.is_zero());
    CHECK(q1 == poly("1,0,1"));

    auto [a2, q2] = normalize_nonnegative(poly("1,-3,1"));
    CHECK(a2 == BigNat(3));
    CHECK(q2 == poly("1,3,1"));

    auto [a3, q3] = normalize_nonnegative(poly("-1,0,1"));
    CHECK(a3 == BigNat(1));
    CHECK(q3 == poly("0,2,1"));

    CHECK_THROWS_AS(normalize_nonnegative(poly("0,0,2")), std::invalid_argument);

    std::mt19937_64 rng(43);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<BigInt> coeffs;
        std::size_t d = 2 + rng() % 3;
        for (std::size_t i = 0; i < d; ++i)
            coeffs.emplace_back(static_cast<std::int64_t>(rng() % 60) - 30);
        coeffs.emplace_back(1);
        IntPolynomial p(coeffs);
        auto [a, q] = normalize_nonnegative(p);
        CHECK(q.all_nonnegative());
        if (!a.is_zero()) {
            // smallest shift: one less must still have a negative coefficient
            CHECK(!p.translate(a - BigNat(1)).all_nonnegative());
        }
        CHECK(q.eval(BigNat(5)) == p.eval(BigNat(5) + a));
    }
}

TEST_CASE("z constant") {
    CHECK(z_constant(poly("0,0,1")) == BigNat(2));
    CHECK(z_constant(poly("0,1,1")) == BigNat(3));
    CHECK(z_constant(poly("0,2,0,1")) == BigNat(5));
    CHECK_THROWS_AS(z_constant(poly("0,0,2")), std::invalid_argument);
    CHECK_THROWS_AS(z_constant(poly("-1,0,1")), std::invalid_argument);
    CHECK_THROWS_AS(z_constant(poly("0,1")), std::invalid_argument);

    // z >= d >= 2 for monic nonnegative polynomials
    std::mt19937_64 rng(47);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<BigInt> coeffs;
        std::size_t d = 2 + rng() % 4;
        for (std::size_t i = 0; i < d; ++i)
            coeffs.emplace_back(static_cast<std::int64_t>(rng() % 30));
        coeffs.emplace_back(1);
        IntPolynomial p(coeffs);
        CHECK(z_constant(p) >= BigNat(d));
    }
}
