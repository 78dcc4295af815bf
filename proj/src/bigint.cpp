#include "rarebit/bigint.hpp"

#include <stdexcept>

namespace rarebit {

BigInt BigInt::from_decimal(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    return BigInt(BigNat::from_decimal(s), neg);
}

const BigNat& BigInt::to_nat() const {
    if (neg_) throw std::domain_error("negative value where nonnegative required");
    return mag_;
}

bool BigInt::fits_i64() const {
    if (mag_.bit_length() < 64) return true;
    // -2^63 is representable, 2^63 is not
    return neg_ && mag_.bit_length() == 64 && mag_ == BigNat::power_of_two(63);
}

std::int64_t BigInt::to_i64() const {
    if (!fits_i64()) throw std::overflow_error("BigInt does not fit 64 bits");
    std::uint64_t u = mag_.is_zero() ? 0 : mag_.limbs()[0];
    if (!neg_) return static_cast<std::int64_t>(u);
    return -static_cast<std::int64_t>(u - 1) - 1;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.neg_ == b.neg_) return BigInt(a.mag_ + b.mag_, a.neg_);
    // opposite signs: subtract smaller magnitude from larger
    auto cmp = a.mag_ <=> b.mag_;
    if (cmp == std::strong_ordering::equal) return BigInt();
    if (cmp == std::strong_ordering::greater) return BigInt(a.mag_ - b.mag_, a.neg_);
    return BigInt(b.mag_ - a.mag_, b.neg_);
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
    if (neg_ != o.neg_) return neg_ ? std::strong_ordering::less : std::strong_ordering::greater;
    auto cmp = mag_ <=> o.mag_;
    if (!neg_) return cmp;
    if (cmp == std::strong_ordering::less) return std::strong_ordering::greater;
    if (cmp == std::strong_ordering::greater) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

std::string BigInt::to_decimal() const {
    return neg_ ? "-" + mag_.to_decimal() : mag_.to_decimal();
}

}  // namespace rarebit
