#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rarebit/polynomials.hpp"
#include "rarebit/witness.hpp"

namespace rarebit {

/// One checkpoint of a built-in claim check.
struct CheckRow {
    std::uint64_t n = 0;
    std::uint64_t measured = 0;            // measured M(S, N)
    std::uint64_t required = 0;            // smallest integer satisfying the claim
    std::optional<std::uint64_t> bound;    // certified bound, when applicable
    bool pass = false;
    std::string note;
};

struct CheckReport {
    std::string title;
    std::vector<CheckRow> rows;
    bool all_pass() const;
};

inline constexpr std::uint64_t kReproduceHardCap = 1ull << 22;

// projected sequence length the check will process, used for budget refusal
std::uint64_t reproduce_cost_estimate(int theorem, std::uint64_t budget);

// M(t(n^2) prefix, N) >= sqrt(2N/5) for N in [21, 1024] and powers of two up
// to the budget (default 2^17).
CheckReport check_theorem1(std::uint64_t budget = 1ull << 17);

// M(p_k(n^2) prefix, N) >= sqrt(N/8) for every N in [2^(2k+2), budget].
CheckReport check_theorem2(std::uint32_t k, std::uint64_t budget = 1ull << 16);

// Certified bounds vs measured M for rarefied Thue-Morse (k = 1) or pattern
// (k >= 2) sequences along P at doubling prefix lengths up to the budget.
CheckReport check_theorem34(const IntPolynomial& p, std::uint32_t k,
                            std::uint64_t budget = 1ull << 17);

}  // namespace rarebit
