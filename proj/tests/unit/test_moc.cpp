#include <stdexcept>
#include <random>
#include <set>

#include "doctest.h"
#include "rarebit/moc.hpp"
#include "rarebit/sequences.hpp"

using namespace rarebit;

namespace {

std::vector<std::uint8_t> bits_of(std::uint32_t value, std::uint32_t len) {
    std::vector<std::uint8_t> s(len);
    for (std::uint32_t i = 0; i < len; ++i) s[i] = (value >> i) & 1;
    return s;
}

void check_witness(const std::vector<std::uint8_t>& s, const MocResult& r) {
    if (!r.witness) return;
    const MocWitness& w = *r.witness;
    CHECK(w.block_len + 1 == r.complexity);
    REQUIRE(w.i + w.block_len < r.prefix_length);
    REQUIRE(w.j + w.block_len < r.prefix_length);
    for (std::uint64_t t = 0; t < w.block_len; ++t) CHECK(s[w.i + t] == s[w.j + t]);
    CHECK(s[w.i + w.block_len] != s[w.j + w.block_len]);
}

}  // namespace

TEST_CASE("definition examples") {
    std::vector<std::uint8_t> t4 = {0, 1, 1, 0};
    CHECK(moc_naive(t4, 4).complexity == 2);
    CHECK(moc_fast(t4, 4).complexity == 2);

    std::vector<std::uint8_t> zeros = {0, 0, 0, 0};
    CHECK(moc_naive(zeros, 4).complexity == 0);
    CHECK(moc_fast(zeros, 4).complexity == 0);
    CHECK(!moc_fast(zeros, 4).witness.has_value());

    std::vector<std::uint8_t> step = {0, 0, 0, 1};
    CHECK(moc_naive(step, 4).complexity == 3);
    CHECK(moc_fast(step, 4).complexity == 3);

    CHECK_THROWS_AS(moc_naive(t4, 1), std::invalid_argument);
    CHECK_THROWS_AS(moc_fast(t4, 5), std::invalid_argument);
    std::vector<std::uint8_t> ternary = {0, 1, 2};
    CHECK_THROWS_AS(moc_naive(ternary, 3), std::invalid_argument);
    CHECK_THROWS_AS(moc_fast(ternary, 3), std::invalid_argument);
}

TEST_CASE("fast engine equals reference exhaustively") {
    for (std::uint32_t len = 2; len <= 12; ++len) {
        for (std::uint32_t v = 0; v < (1u << len); ++v) {
            std::vector<std::uint8_t> s = bits_of(v, len);
            MocResult naive = moc_naive(s, len);
            MocResult fast = moc_fast(s, len);
            CHECK(naive.complexity == fast.complexity);
            check_witness(s, naive);
            check_witness(s, fast);
        }
    }
}

TEST_CASE("fast engine equals reference on random strings") {
    std::mt19937_64 rng(61);
    for (int iter = 0; iter < 200; ++iter) {
        std::uint32_t len = 2 + static_cast<std::uint32_t>(rng() % 511);
        std::vector<std::uint8_t> s(len);
        // mix unbiased and biased strings to reach degenerate-ish shapes
        int bias = 1 + static_cast<int>(rng() % 7);
        for (auto& b : s) b = (rng() % 8) < static_cast<std::uint64_t>(bias);
        MocResult naive = moc_naive(s, len);
        MocResult fast = moc_fast(s, len);
        CHECK(naive.complexity == fast.complexity);
        check_witness(s, fast);
    }
}

TEST_CASE("monotone in prefix length") {
    std::mt19937_64 rng(67);
    for (int iter = 0; iter < 50; ++iter) {
        std::uint32_t len = 16 + static_cast<std::uint32_t>(rng() % 100);
        std::vector<std::uint8_t> s(len);
        for (auto& b : s) b = rng() & 1;
        MocEngine engine;
        std::uint64_t prev = 0;
        for (std::uint32_t i = 0; i < len; ++i) {
            engine.push(s[i]);
            if (engine.size() < 2) continue;
            std::uint64_t cur = engine.current();
            CHECK(cur >= prev);
            CHECK(cur <= engine.size() - 1);
            prev = cur;
        }
    }
}

TEST_CASE("profile matches single-shot runs") {
    Sequence tm = generate_prefix(GeneratorDescriptor::thue_morse(), 512);
    std::vector<std::uint64_t> checkpoints = {2, 21, 64, 100, 256, 512};
    auto profile = moc_profile(tm, checkpoints);
    REQUIRE(profile.size() == checkpoints.size());
    std::uint64_t prev = 0;
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        CHECK(profile[i].complexity == moc_fast(tm, checkpoints[i]).complexity);
        CHECK(profile[i].complexity == moc_naive(tm, checkpoints[i]).complexity);
        CHECK(profile[i].complexity >= prev);
        prev = profile[i].complexity;
    }
    CHECK_THROWS_AS(moc_profile(tm, std::vector<std::uint64_t>{64, 64}), std::invalid_argument);
    CHECK_THROWS_AS(moc_profile(tm, std::vector<std::uint64_t>{64, 21}), std::invalid_argument);
    CHECK_THROWS_AS(moc_profile(tm, std::vector<std::uint64_t>{1024}), std::invalid_argument);

    std::vector<std::uint8_t> zeros(64, 0);
    auto zero_profile = moc_profile(zeros, std::vector<std::uint64_t>{4, 16, 64});
    for (const auto& r : zero_profile) CHECK(r.complexity == 0);
}

TEST_CASE("factor counts from the automaton") {
    // thue-morse prefix: distinct factors per length via brute force
    Sequence tm = generate_prefix(GeneratorDescriptor::thue_morse(), 300);
    MocEngine engine;
    for (std::uint8_t b : tm.symbols) engine.push(b);
    auto counts = engine.factor_counts(8);
    for (std::uint32_t k = 1; k <= 8; ++k) {
        std::set<std::vector<std::uint8_t>> blocks;
        for (std::size_t i = 0; i + k <= tm.symbols.size(); ++i)
            blocks.insert(std::vector<std::uint8_t>(tm.symbols.begin() + i,
                                                    tm.symbols.begin() + i + k));
        CHECK(counts[k] == blocks.size());
    }
}
