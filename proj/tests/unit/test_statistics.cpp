#include <stdexcept>
#include <random>

#include "doctest.h"
#include "rarebit/sequences.hpp"
#include "rarebit/statistics.hpp"

using namespace rarebit;

TEST_CASE("correlation examples") {
    std::vector<std::uint8_t> s = {0, 1, 1, 0};
    CorrelationResult r = correlation2(s, 4);
    CHECK(r.value == 2);
    CHECK(r.window == 1);
    CHECK(r.d1 == 0);
    CHECK(r.d2 == 2);

    std::vector<std::uint8_t> constant(10, 1);
    CorrelationResult c = correlation2(constant, 10);
    CHECK(c.value == 9);
    CHECK(c.window == 8);
    CHECK(c.d1 == 0);
    CHECK(c.d2 == 1);

    CHECK_THROWS_AS(correlation2(s, 1), std::invalid_argument);
    std::vector<std::uint8_t> ternary = {0, 2, 1};
    CHECK_THROWS_AS(correlation2(ternary, 3), std::invalid_argument);
}

TEST_CASE("prefix-sum method equals the literal definition") {
    std::mt19937_64 rng(79);
    for (int iter = 0; iter < 200; ++iter) {
        std::uint32_t n = 2 + static_cast<std::uint32_t>(rng() % 63);
        std::vector<std::uint8_t> s(n);
        for (auto& b : s) b = rng() & 1;
        CorrelationResult fast = correlation2(s, n);
        CorrelationResult slow = correlation2_bruteforce(s, n);
        CHECK(fast.value == slow.value);
        CHECK(fast.d1 == slow.d1);
        CHECK(fast.d2 == slow.d2);
        CHECK(fast.window == slow.window);
        CHECK(fast.value <= n - 1);
    }
}

TEST_CASE("correlation is monotone in the prefix length") {
    Sequence tm = generate_prefix(GeneratorDescriptor::thue_morse(), 128);
    std::uint64_t prev = 0;
    for (std::uint64_t n = 2; n <= 128; n += 7) {
        std::uint64_t v = correlation2(tm, n).value;
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("subword complexity") {
    std::vector<std::uint8_t> s = {0, 1, 1, 0};
    BlockStats st = subword_complexity(s, 2);
    CHECK(st.distinct == 3);  // 01, 11, 10
    CHECK(st.counts[0b01] == 1);
    CHECK(st.counts[0b11] == 1);
    CHECK(st.counts[0b10] == 1);
    CHECK(st.counts[0b00] == 0);

    CHECK(subword_complexity(s, 4).distinct == 1);
    CHECK_THROWS_AS(subword_complexity(s, 5), std::invalid_argument);
    CHECK_THROWS_AS(subword_complexity(s, 0), std::invalid_argument);

    std::mt19937_64 rng(83);
    for (int iter = 0; iter < 50; ++iter) {
        std::uint32_t n = 20 + static_cast<std::uint32_t>(rng() % 200);
        std::vector<std::uint8_t> r(n);
        for (auto& b : r) b = rng() & 1;
        std::uint64_t total = 0;
        std::uint64_t prev = 0;
        for (std::uint32_t k = 1; k <= 8; ++k) {
            BlockStats bs = subword_complexity(r, k);
            total = 0;
            for (std::uint64_t c : bs.counts) total += c;
            CHECK(total == n - k + 1);  // counts sum to the window count
            if (k > 1) CHECK(bs.distinct <= 2 * prev);  // each block extends right two ways
            prev = bs.distinct;
        }
    }

    // long automatic prefixes: p(k) grows with k in the stable regime
    Sequence tm = generate_prefix(GeneratorDescriptor::thue_morse(), 1 << 14);
    std::uint64_t prev_p = 0;
    for (std::uint32_t k = 1; k <= 12; ++k) {
        BlockStats bs = subword_complexity(tm, k);
        CHECK(bs.distinct >= prev_p);
        prev_p = bs.distinct;
    }
}

TEST_CASE("normality deviations") {
    // alternating sequence: length-1 blocks are perfectly balanced
    std::vector<std::uint8_t> alt(4096);
    for (std::size_t i = 0; i < alt.size(); ++i) alt[i] = i & 1;
    auto stats = normality_deviation(alt, 4);
    REQUIRE(stats.size() == 4);
    CHECK(stats[0].max_deviation <= 1.0 / (4096 - 1 + 1));

    CHECK_THROWS_AS(normality_deviation(alt, 11), std::invalid_argument);

    // cube-free: thue-morse has no 000 or 111
    Sequence tm = generate_prefix(GeneratorDescriptor::thue_morse(), 1 << 16);
    BlockStats b3 = subword_complexity(tm, 3);
    CHECK(b3.counts[0b000] == 0);
    CHECK(b3.counts[0b111] == 0);
}
