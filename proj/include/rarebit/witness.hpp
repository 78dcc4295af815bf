#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rarebit/bignat.hpp"
#include "rarebit/polynomials.hpp"
#include "rarebit/sequences.hpp"

namespace rarebit {

/// Thrown when a bounded witness search exhausts its grid.
struct SearchExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a certificate cannot be issued at the requested prefix length.
struct CertificateRefused : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Separating pair for rarefied Thue-Morse: with y = 2^lambda and
/// r = lambda*(d-1), the sequence values at 1 + y*2^l + 2^(d*l) and
/// 1 + y*2^l + 2^(d*l+r) differ for every l above a stability threshold.
struct TMWitness {
    IntPolynomial poly;      // monic, nonnegative coefficients, degree >= 2
    BigNat z;                // sum of i * a_i
    std::uint32_t lambda;    // 2^lambda <= z < 2^(lambda+1)
    BigNat y;                // 2^lambda
    std::uint64_t r;         // lambda * (d - 1)
    std::uint64_t l0;        // smallest l verified stable (l and l+1 both hold)
};

/// Separating pair for rarefied pattern sequences (k >= 2). y is built from
/// a cubic seed a*x^3 + a*x^2 - x + a at x = 2^u whose d-th power carries a
/// long interior 1-run; shifting z under the tail of that run flips the
/// parity of the k-pattern count.
struct PatternWitness {
    IntPolynomial poly;
    std::uint32_t k;
    BigNat z;
    std::uint32_t lambda_prime;  // a = 2^lambda_prime
    BigNat a;
    std::uint64_t u;
    BigNat y;                    // a*2^(3u) + a*2^(2u) - 2^u + a
    std::uint64_t s;             // alignment shift
    std::uint64_t l0;
    std::uint64_t run_length;    // interior 1-run length of y^d
};

struct WitnessChecks {
    std::uint64_t agreement_checked_to = 0;  // block agreement held for n = 0..this
    std::uint8_t separation_lhs = 0;         // sequence value at 1 + y*2^l + 2^(d*l)
    std::uint8_t separation_rhs = 0;         // sequence value at 1 + y*2^l + 2^(d*l+shift)
};

/// Machine-checked lower bound M(S, N) >= bound for the rarefied sequence:
/// block agreement over the admissible range plus the separating pair force
/// every block map of size < bound to be inconsistent inside the prefix.
struct BoundCertificate {
    IntPolynomial poly;
    std::uint32_t k = 1;
    std::uint64_t n = 0;       // prefix length N
    std::uint64_t level = 0;   // chosen l
    BigNat z;
    BigNat y;
    std::uint64_t shift = 0;   // r (k = 1) or s (k >= 2)
    std::uint64_t bound = 0;
    WitnessChecks checks;

    std::string to_text() const;
};

inline constexpr std::uint64_t kTmWitnessSearchLimit = 64;

// value of the rarefied sequence at index: p_k(P(index)) (k = 1: Thue-Morse)
std::uint8_t rarefied_value(const IntPolynomial& p, std::uint32_t k, const BigNat& index);

// largest n with (c*n)^d * (2 * alpha_max) < 2^(d*l), c = 2 for k = 1, 4 otherwise
BigNat admissible_range(const IntPolynomial& p, std::uint64_t l, std::uint32_t k);

TMWitness tm_witness(const IntPolynomial& p);
bool verify_tm_witness(const IntPolynomial& p, const TMWitness& w, std::uint64_t l);

// true iff the sequence values at n + 2^(d*l) and n + 2^(d*l+r) agree;
// n must lie in [1, admissible_range].
bool verify_noninterference(const IntPolynomial& p, std::uint64_t l, const BigNat& n,
                            std::uint64_t r, std::uint32_t k = 1);

PatternWitness pattern_witness(const IntPolynomial& p, std::uint32_t k);
bool verify_pattern_witness(const IntPolynomial& p, const PatternWitness& w, std::uint64_t l);

// Issue a certificate for the rarefied sequence described by g (pattern spec
// must be binary all-ones; rarefaction monic nonnegative of degree >= 2).
BoundCertificate bound_certificate(const GeneratorDescriptor& g, std::uint64_t n);
BoundCertificate bound_certificate(const IntPolynomial& p, std::uint32_t k, std::uint64_t n);

}  // namespace rarebit
