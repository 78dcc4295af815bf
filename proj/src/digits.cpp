#include "rarebit/digits.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rarebit {

namespace {

void check_base(std::uint32_t base) {
    if (base < 2) throw std::invalid_argument("digit base must be at least 2");
    if (base > kMaxBase) throw std::invalid_argument("digit base too large");
}

// occurrences of pattern (reading order) in digit string given MSB-first
std::uint64_t count_in_digits(const std::vector<std::uint32_t>& msb_digits,
                              const std::vector<std::uint32_t>& pattern) {
    if (pattern.empty() || pattern.size() > msb_digits.size()) return 0;
    std::uint64_t count = 0;
    for (std::size_t i = 0; i + pattern.size() <= msb_digits.size(); ++i) {
        if (std::equal(pattern.begin(), pattern.end(), msb_digits.begin() + i)) ++count;
    }
    return count;
}

}  // namespace

BigNat DigitString::value() const {
    BigNat v;
    for (std::size_t i = digits.size(); i > 0; --i) {
        v *= BigNat(base);
        v += BigNat(digits[i - 1]);
    }
    return v;
}

std::string DigitString::to_string_msb() const {
    std::string s;
    for (std::size_t i = digits.size(); i > 0; --i) {
        std::uint32_t d = digits[i - 1];
        if (base <= 10) {
            s += static_cast<char>('0' + d);
        } else {
            if (!s.empty()) s += ',';
            s += std::to_string(d);
        }
    }
    return s;
}

PatternSpec PatternSpec::all_ones(std::uint32_t k, std::uint32_t base, std::uint32_t modulus) {
    PatternSpec spec;
    spec.base = base;
    spec.modulus = modulus;
    spec.pattern.assign(k, 1);
    return spec;
}

bool PatternSpec::is_binary_all_ones() const {
    if (base != 2) return false;
    return std::all_of(pattern.begin(), pattern.end(),
                       [](std::uint32_t d) { return d == 1; });
}

void PatternSpec::validate() const {
    check_base(base);
    if (modulus < 2) throw std::invalid_argument("pattern modulus must be at least 2");
    if (pattern.empty()) throw std::invalid_argument("pattern must be nonempty");
    bool all_zero = true;
    for (std::uint32_t d : pattern) {
        if (d >= base) throw std::invalid_argument("pattern digit out of base range");
        if (d != 0) all_zero = false;
    }
    if (all_zero) throw std::invalid_argument("all-zero pattern is not allowed");
}

DigitString to_digits(const BigNat& n, std::uint32_t base) {
    check_base(base);
    DigitString ds;
    ds.base = base;
    if (base == 2) {
        std::size_t len = n.bit_length();
        ds.digits.reserve(len);
        for (std::size_t i = 0; i < len; ++i) ds.digits.push_back(n.bit(i));
        return ds;
    }
    BigNat cur = n;
    while (!cur.is_zero()) {
        auto [q, r] = cur.divmod_u64(base);
        ds.digits.push_back(static_cast<std::uint32_t>(r));
        cur = std::move(q);
    }
    return ds;
}

DigitString to_digits(std::uint64_t n, std::uint32_t base) {
    check_base(base);
    DigitString ds;
    ds.base = base;
    while (n != 0) {
        ds.digits.push_back(static_cast<std::uint32_t>(n % base));
        n /= base;
    }
    return ds;
}

std::uint64_t digit_sum(const BigNat& n, std::uint32_t base) {
    check_base(base);
    if (base == 2) return n.popcount();
    if (n.fits_u64()) return digit_sum(n.is_zero() ? 0 : n.limbs()[0], base);
    std::uint64_t sum = 0;
    BigNat cur = n;
    while (!cur.is_zero()) {
        auto [q, r] = cur.divmod_u64(base);
        sum += r;
        cur = std::move(q);
    }
    return sum;
}

std::uint64_t digit_sum(std::uint64_t n, std::uint32_t base) {
    check_base(base);
    if (base == 2) return static_cast<std::uint64_t>(std::popcount(n));
    std::uint64_t sum = 0;
    while (n != 0) {
        sum += n % base;
        n /= base;
    }
    return sum;
}

std::uint64_t count_pattern(const BigNat& n, const PatternSpec& spec) {
    spec.validate();
    if (n.is_zero()) return 0;
    if (n.fits_u64()) return count_pattern(n.limbs()[0], spec);
    if (spec.is_binary_all_ones()) {
        // positions where k consecutive 1-bits start: n & (n>>1) & ... & (n>>(k-1))
        BigNat acc = n;
        for (std::size_t i = 1; i < spec.length() && !acc.is_zero(); ++i) acc &= n >> i;
        return acc.popcount();
    }
    DigitString ds = to_digits(n, spec.base);
    std::vector<std::uint32_t> msb(ds.digits.rbegin(), ds.digits.rend());
    return count_in_digits(msb, spec.pattern);
}

std::uint64_t count_pattern(std::uint64_t n, const PatternSpec& spec) {
    spec.validate();
    if (n == 0) return 0;
    if (spec.is_binary_all_ones()) {
        std::uint64_t acc = n;
        for (std::size_t i = 1; i < spec.length() && acc != 0; ++i) acc &= n >> i;
        return static_cast<std::uint64_t>(std::popcount(acc));
    }
    DigitString ds = to_digits(n, spec.base);
    std::vector<std::uint32_t> msb(ds.digits.rbegin(), ds.digits.rend());
    return count_in_digits(msb, spec.pattern);
}

}  // namespace rarebit
