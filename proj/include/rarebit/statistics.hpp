#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rarebit/sequences.hpp"

namespace rarebit {

/// C2(S, N) with the triple achieving it. Ties resolved by smallest lag
/// d2 - d1, then smallest d1, then smallest window length M.
struct CorrelationResult {
    std::uint64_t value = 0;
    std::uint64_t window = 0;  // M
    std::uint64_t d1 = 0;
    std::uint64_t d2 = 0;
};

/// Occurrence statistics of the length-k factors of a binary prefix.
struct BlockStats {
    std::uint32_t k = 0;
    std::uint64_t prefix_length = 0;                  // N
    std::vector<std::uint64_t> counts;                // indexed by block value, MSB-first encoding
    std::uint64_t distinct = 0;                       // p_S(k)
    double max_deviation = 0.0;                       // max_b |count_b/(N-k+1) - 2^-k|
};

// Exact maximum over all (M, d1, d2) with 0 <= d1 < d2 and d2 + M < N of
// |sum_{0<=n<=M} (-1)^(s_{n+d1} + s_{n+d2})|, computed per lag from prefix
// sums of the sign sequence. Binary sequences, 2 <= N <= length.
CorrelationResult correlation2(std::span<const std::uint8_t> s, std::uint64_t n);
CorrelationResult correlation2(const Sequence& s, std::uint64_t n);

// Literal definition-level evaluation; quadratic in N per lag. Test oracle.
CorrelationResult correlation2_bruteforce(std::span<const std::uint8_t> s, std::uint64_t n);

BlockStats subword_complexity(std::span<const std::uint8_t> s, std::uint32_t k);
BlockStats subword_complexity(const Sequence& s, std::uint32_t k);

// BlockStats for k = 1..k_max; requires k_max <= log2(N) - 2.
std::vector<BlockStats> normality_deviation(std::span<const std::uint8_t> s, std::uint32_t k_max);
std::vector<BlockStats> normality_deviation(const Sequence& s, std::uint32_t k_max);

}  // namespace rarebit
