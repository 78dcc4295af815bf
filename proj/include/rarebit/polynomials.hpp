#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rarebit/bigint.hpp"
#include "rarebit/bignat.hpp"

namespace rarebit {

/// Integer polynomial P(X) = a_0 + a_1 X + ... + a_d X^d with a_d != 0.
class IntPolynomial {
public:
    IntPolynomial() : coeffs_{BigInt(0)} {}
    explicit IntPolynomial(std::vector<BigInt> coeffs_low_to_high);

    // comma-separated coefficients, low to high: "1,2,0,1" = 1 + 2X + X^3
    static IntPolynomial parse(std::string_view literal);

    std::size_t degree() const { return coeffs_.size() - 1; }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    const BigInt& coefficient(std::size_t i) const { return coeffs_[i]; }

    bool is_monic() const;
    bool all_nonnegative() const;
    bool is_identity() const;  // P(X) = X

    // max of all coefficients (including the leading one); requires all >= 0
    BigNat max_coefficient() const;

    // Exact value P(n); throws std::domain_error if the result is negative.
    BigNat eval(const BigNat& n) const;

    // Native evaluation; returns false when the value cannot be certified to
    // fit unsigned 64 bits (caller falls back to eval()). Throws the same
    // domain error as eval() when the exact result is negative.
    bool eval_u64(std::uint64_t n, std::uint64_t& out) const;

    // Q with Q(n) = P(n + shift) for all n, via binomial expansion.
    IntPolynomial translate(const BigNat& shift) const;

    std::string to_coeff_string() const;  // parse() round-trip form
    std::string to_pretty_string() const; // e.g. "X^3 + 2X + 1"

    bool operator==(const IntPolynomial&) const = default;

private:
    std::vector<BigInt> coeffs_;  // low to high, trailing coefficient nonzero
};

// Smallest shift a >= 0 such that P(X + a) has only nonnegative coefficients.
// Requires P monic of degree >= 1.
struct NormalizedPoly {
    BigNat shift;
    IntPolynomial poly;
};
NormalizedPoly normalize_nonnegative(const IntPolynomial& p);

// z = sum_{1<=i<=d} i * a_i for monic P with nonnegative coefficients, d >= 2.
BigNat z_constant(const IntPolynomial& p);

}  // namespace rarebit
