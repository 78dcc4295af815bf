#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rarebit/bignat.hpp"

namespace rarebit {

/// Base-q digit expansion, least significant digit first.
/// Canonical form has no most-significant zero digit; value 0 <-> empty.
struct DigitString {
    std::vector<std::uint32_t> digits;
    std::uint32_t base = 2;

    BigNat value() const;
    std::string to_string_msb() const;  // e.g. 6 base 2 -> "110"
};

/// Digit pattern over base q with a result modulus, e.g. the all-ones block
/// of length k over base 2. Pattern digits are stored in reading order
/// (most significant first); leading zero digits are meaningful here.
struct PatternSpec {
    std::uint32_t base = 2;
    std::uint32_t modulus = 2;
    std::vector<std::uint32_t> pattern;  // reading order, length k >= 1

    static PatternSpec all_ones(std::uint32_t k, std::uint32_t base = 2,
                                std::uint32_t modulus = 2);

    std::size_t length() const { return pattern.size(); }
    bool is_binary_all_ones() const;
    void validate() const;  // throws std::invalid_argument
    bool operator==(const PatternSpec&) const = default;
};

inline constexpr std::uint32_t kMaxBase = 1u << 16;

DigitString to_digits(const BigNat& n, std::uint32_t base);
DigitString to_digits(std::uint64_t n, std::uint32_t base);

std::uint64_t digit_sum(const BigNat& n, std::uint32_t base);
std::uint64_t digit_sum(std::uint64_t n, std::uint32_t base);

// Overlapping occurrences of spec.pattern as a contiguous factor of the
// canonical base-q expansion of n (leading zeros stripped); 0 for n = 0.
std::uint64_t count_pattern(const BigNat& n, const PatternSpec& spec);
std::uint64_t count_pattern(std::uint64_t n, const PatternSpec& spec);

}  // namespace rarebit
