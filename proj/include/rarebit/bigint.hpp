#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "rarebit/bignat.hpp"

namespace rarebit {

/// Signed arbitrary-precision integer, used for polynomial coefficients.
/// Canonical form: zero is never negative.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v)
        : mag_(v < 0 ? BigNat(static_cast<std::uint64_t>(-(v + 1)) + 1)
                     : BigNat(static_cast<std::uint64_t>(v))),
          neg_(v < 0) {}
    explicit BigInt(BigNat mag, bool negative = false)
        : mag_(std::move(mag)), neg_(negative && !mag_.is_zero()) {}

    static BigInt from_decimal(std::string_view s);

    bool is_zero() const { return mag_.is_zero(); }
    bool is_negative() const { return neg_; }
    const BigNat& magnitude() const { return mag_; }

    // Magnitude as BigNat; throws std::domain_error when negative.
    const BigNat& to_nat() const;

    bool fits_i64() const;
    std::int64_t to_i64() const;

    BigInt operator-() const { return BigInt(mag_, !neg_); }

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }
    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        return BigInt(a.mag_ * b.mag_, a.neg_ != b.neg_);
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    std::strong_ordering operator<=>(const BigInt& o) const;
    bool operator==(const BigInt& o) const { return neg_ == o.neg_ && mag_ == o.mag_; }

    std::string to_decimal() const;

private:
    BigNat mag_;
    bool neg_ = false;
};

}  // namespace rarebit
