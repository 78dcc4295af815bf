#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rarebit/digits.hpp"
#include "rarebit/polynomials.hpp"

namespace rarebit {

enum class GeneratorKind { ThueMorse, PatternK, GeneralPattern };

/// What to generate: a digit-pattern rule plus an optional integer polynomial
/// along which the sequence is rarefied (s_n = value at P(n)).
struct GeneratorDescriptor {
    GeneratorKind kind = GeneratorKind::ThueMorse;
    PatternSpec spec = PatternSpec::all_ones(1);
    std::optional<IntPolynomial> rarefaction;

    std::uint32_t alphabet_size() const { return spec.modulus; }

    // ThueMorse and PatternK are shorthands for GeneralPattern instances;
    // canonical() folds equivalent descriptors onto the most specific kind.
    GeneratorDescriptor canonical() const;

    void validate() const;
    std::string to_string() const;
    static GeneratorDescriptor parse(std::string_view text);

    static GeneratorDescriptor thue_morse();
    static GeneratorDescriptor pattern(std::uint32_t k);
    static GeneratorDescriptor general(PatternSpec spec);

    GeneratorDescriptor along(IntPolynomial poly) const;

    bool operator==(const GeneratorDescriptor&) const = default;
};

/// Finite prefix of a generated sequence over {0,...,m-1}.
struct Sequence {
    std::vector<std::uint8_t> symbols;
    std::uint32_t alphabet = 2;
    GeneratorDescriptor provenance;

    std::size_t size() const { return symbols.size(); }
    bool is_binary() const { return alphabet == 2; }
    void validate() const;
};

std::uint8_t thue_morse(std::uint64_t n);
std::uint8_t thue_morse(const BigNat& n);

std::uint8_t pattern_value(std::uint64_t n, const PatternSpec& spec);
std::uint8_t pattern_value(const BigNat& n, const PatternSpec& spec);

/// symbols[n] = pattern value at P(n) for n = 0..length-1 (P = identity when
/// absent). Throws std::domain_error naming the offending index if the
/// polynomial goes negative, std::invalid_argument for length 0.
Sequence generate_prefix(const GeneratorDescriptor& g, std::uint64_t length);

}  // namespace rarebit
