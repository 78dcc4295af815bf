#include "rarebit/bignat.hpp"

#include <bit>
#include <stdexcept>

namespace rarebit {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

BigNat BigNat::from_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty decimal literal");
    BigNat r;
    // chunks of 19 digits: 10^19 fits a u64
    static constexpr u64 kChunkBase = 10'000'000'000'000'000'000ULL;
    std::size_t pos = 0;
    std::size_t head = s.size() % 19;
    if (head == 0) head = 19;
    while (pos < s.size()) {
        std::size_t n = (pos == 0) ? head : 19;
        u64 chunk = 0;
        for (std::size_t i = 0; i < n; ++i) {
            char c = s[pos + i];
            if (c < '0' || c > '9') throw std::invalid_argument("bad digit in decimal literal");
            chunk = chunk * 10 + static_cast<u64>(c - '0');
        }
        u64 scale = (pos == 0) ? 0 : kChunkBase;
        if (scale != 0) r = r * BigNat(scale);
        r += BigNat(chunk);
        pos += n;
    }
    return r;
}

BigNat BigNat::power_of_two(std::size_t exponent) {
    BigNat r(1);
    r <<= exponent;
    return r;
}

u64 BigNat::to_u64() const {
    if (limbs_.size() > 1) throw std::overflow_error("BigNat does not fit 64 bits");
    return limbs_.empty() ? 0 : limbs_[0];
}

std::size_t BigNat::bit_length() const {
    if (limbs_.empty()) return 0;
    return 64 * (limbs_.size() - 1) + (64 - std::countl_zero(limbs_.back()));
}

bool BigNat::bit(std::size_t i) const {
    std::size_t w = i / 64;
    if (w >= limbs_.size()) return false;
    return (limbs_[w] >> (i % 64)) & 1;
}

std::size_t BigNat::popcount() const {
    std::size_t c = 0;
    for (u64 w : limbs_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::strong_ordering BigNat::operator<=>(const BigNat& o) const {
    if (limbs_.size() != o.limbs_.size())
        return limbs_.size() <=> o.limbs_.size();
    for (std::size_t i = limbs_.size(); i > 0; --i) {
        if (limbs_[i - 1] != o.limbs_[i - 1])
            return limbs_[i - 1] <=> o.limbs_[i - 1];
    }
    return std::strong_ordering::equal;
}

BigNat& BigNat::operator+=(const BigNat& o) {
    if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    u64 carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u64 b = i < o.limbs_.size() ? o.limbs_[i] : 0;
        if (b == 0 && carry == 0 && i >= o.limbs_.size()) break;
        u128 sum = static_cast<u128>(limbs_[i]) + b + carry;
        limbs_[i] = static_cast<u64>(sum);
        carry = static_cast<u64>(sum >> 64);
    }
    if (carry) limbs_.push_back(carry);
    return *this;
}

BigNat& BigNat::operator-=(const BigNat& o) {
    if (*this < o) throw std::underflow_error("BigNat subtraction underflow");
    u64 borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u64 b = i < o.limbs_.size() ? o.limbs_[i] : 0;
        if (b == 0 && borrow == 0 && i >= o.limbs_.size()) break;
        u64 sub = b + borrow;
        borrow = (limbs_[i] < sub || (borrow && b == UINT64_MAX)) ? 1 : 0;
        limbs_[i] -= sub;
    }
    trim();
    return *this;
}

BigNat operator*(const BigNat& a, const BigNat& b) {
    if (a.is_zero() || b.is_zero()) return BigNat();
    BigNat r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        u64 carry = 0;
        u64 ai = a.limbs_[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            u128 cur = static_cast<u128>(ai) * b.limbs_[j] + r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
        }
        std::size_t k = i + b.limbs_.size();
        while (carry) {
            u128 cur = static_cast<u128>(r.limbs_[k]) + carry;
            r.limbs_[k] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
            ++k;
        }
    }
    r.trim();
    return r;
}

BigNat& BigNat::operator<<=(std::size_t bits) {
    if (is_zero() || bits == 0) return *this;
    std::size_t words = bits / 64, rem = bits % 64;
    std::vector<u64> out(limbs_.size() + words + 1, 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u64 v = limbs_[i];
        out[i + words] |= rem ? (v << rem) : v;
        if (rem) out[i + words + 1] |= v >> (64 - rem);
    }
    limbs_ = std::move(out);
    trim();
    return *this;
}

BigNat& BigNat::operator>>=(std::size_t bits) {
    if (is_zero() || bits == 0) return *this;
    std::size_t words = bits / 64, rem = bits % 64;
    if (words >= limbs_.size()) {
        limbs_.clear();
        return *this;
    }
    std::size_t n = limbs_.size() - words;
    for (std::size_t i = 0; i < n; ++i) {
        u64 lo = limbs_[i + words] >> rem;
        u64 hi = (rem && i + words + 1 < limbs_.size()) ? (limbs_[i + words + 1] << (64 - rem)) : 0;
        limbs_[i] = rem ? (lo | hi) : limbs_[i + words];
    }
    limbs_.resize(n);
    trim();
    return *this;
}

BigNat& BigNat::operator&=(const BigNat& o) {
    if (limbs_.size() > o.limbs_.size()) limbs_.resize(o.limbs_.size());
    for (std::size_t i = 0; i < limbs_.size(); ++i) limbs_[i] &= o.limbs_[i];
    trim();
    return *this;
}

BigNat BigNat::pow(u64 e) const {
    BigNat base = *this, r(1);
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

std::pair<BigNat, u64> BigNat::divmod_u64(u64 divisor) const {
    if (divisor == 0) throw std::invalid_argument("division by zero");
    BigNat q;
    q.limbs_.assign(limbs_.size(), 0);
    u64 rem = 0;
    for (std::size_t i = limbs_.size(); i > 0; --i) {
        u128 cur = (static_cast<u128>(rem) << 64) | limbs_[i - 1];
        q.limbs_[i - 1] = static_cast<u64>(cur / divisor);
        rem = static_cast<u64>(cur % divisor);
    }
    q.trim();
    return {std::move(q), rem};
}

std::string BigNat::to_decimal() const {
    if (is_zero()) return "0";
    static constexpr u64 kChunkBase = 10'000'000'000'000'000'000ULL;
    std::vector<u64> chunks;
    BigNat cur = *this;
    while (!cur.is_zero()) {
        auto [q, r] = cur.divmod_u64(kChunkBase);
        chunks.push_back(r);
        cur = std::move(q);
    }
    std::string s = std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i > 0; --i) {
        std::string part = std::to_string(chunks[i - 1]);
        s += std::string(19 - part.size(), '0') + part;
    }
    return s;
}

std::vector<BitRun> bit_runs(const BigNat& n) {
    std::vector<BitRun> runs;
    std::size_t len = n.bit_length();
    std::size_t i = 0;
    while (i < len) {
        if (!n.bit(i)) {
            ++i;
            continue;
        }
        std::size_t lo = i;
        while (i < len && n.bit(i)) ++i;
        runs.push_back({lo, i - lo});
    }
    return runs;
}

}  // namespace rarebit
