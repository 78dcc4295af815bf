#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rarebit {

/// Arbitrary-precision nonnegative integer.
///
/// Limbs are 64-bit, least significant first, canonical form has no trailing
/// zero limbs (value 0 <-> empty limb vector). Values that fit a single limb
/// never touch the heap beyond the small vector allocation, which keeps the
/// native fast paths elsewhere honest to compare against.
class BigNat {
public:
    BigNat() = default;
    BigNat(std::uint64_t v) {
        if (v != 0) limbs_.push_back(v);
    }

    static BigNat from_decimal(std::string_view s);
    static BigNat power_of_two(std::size_t exponent);

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 1; }
    std::uint64_t to_u64() const;  // throws std::overflow_error if too large

    // Number of bits in the binary expansion; 0 for value 0.
    std::size_t bit_length() const;
    bool bit(std::size_t i) const;
    std::size_t popcount() const;

    std::strong_ordering operator<=>(const BigNat& o) const;
    bool operator==(const BigNat& o) const { return limbs_ == o.limbs_; }

    BigNat& operator+=(const BigNat& o);
    BigNat& operator-=(const BigNat& o);  // throws std::underflow_error if o > *this
    BigNat& operator<<=(std::size_t bits);
    BigNat& operator>>=(std::size_t bits);
    BigNat& operator&=(const BigNat& o);

    friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }
    friend BigNat operator-(BigNat a, const BigNat& b) { return a -= b; }
    friend BigNat operator*(const BigNat& a, const BigNat& b);
    friend BigNat operator<<(BigNat a, std::size_t bits) { return a <<= bits; }
    friend BigNat operator>>(BigNat a, std::size_t bits) { return a >>= bits; }
    friend BigNat operator&(BigNat a, const BigNat& b) { return a &= b; }

    BigNat& operator*=(const BigNat& o) { return *this = *this * o; }

    BigNat pow(std::uint64_t e) const;

    // Quotient and remainder for a small divisor (divisor >= 1).
    std::pair<BigNat, std::uint64_t> divmod_u64(std::uint64_t divisor) const;

    std::string to_decimal() const;

    const std::vector<std::uint64_t>& limbs() const { return limbs_; }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    std::vector<std::uint64_t> limbs_;
};

// Maximal runs of 1-bits, ascending by position.
struct BitRun {
    std::size_t lo;   // position of the lowest bit in the run
    std::size_t len;
};
std::vector<BitRun> bit_runs(const BigNat& n);

}  // namespace rarebit
