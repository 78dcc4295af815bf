#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rarebit/sequences.hpp"

namespace rarebit {

/// Power series over F2 truncated at order N, bit-packed (coefficient of x^i
/// at bit i). Arithmetic never reads or produces terms at or beyond x^N.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order);
    static TruncatedSeries one(std::size_t order);
    static TruncatedSeries from_sequence(std::span<const std::uint8_t> s, std::size_t order);
    static TruncatedSeries from_sequence(const Sequence& s, std::size_t order);

    std::size_t order() const { return order_; }
    bool coeff(std::size_t i) const;
    void set_coeff(std::size_t i, bool v);
    bool is_zero() const;

    TruncatedSeries& operator^=(const TruncatedSeries& o);  // addition over F2
    friend TruncatedSeries operator^(TruncatedSeries a, const TruncatedSeries& b) { return a ^= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    TruncatedSeries square() const;
    TruncatedSeries shifted(std::size_t i) const;  // multiply by x^i

    bool operator==(const TruncatedSeries&) const = default;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void mask_tail();
    std::size_t order_;
    std::vector<std::uint64_t> words_;
};

/// h(x, y) in F2[x, y] as a set of monomial exponent pairs (i, j) = x^i y^j.
struct BivariatePolyF2 {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> monomials;  // sorted, unique

    void normalize();  // sort + drop duplicate pairs mod 2
    bool empty() const { return monomials.empty(); }
    std::uint32_t total_degree() const;
    std::uint32_t max_y_degree() const;

    // exchange format: one "i,j" pair per line, '#' comments allowed
    std::string to_text() const;
    static BivariatePolyF2 from_text(std::string_view text);

    bool operator==(const BivariatePolyF2&) const = default;
};

// known annihilators of the generating functions of the classic sequences
BivariatePolyF2 thue_morse_annihilator();
BivariatePolyF2 pattern_annihilator(std::uint32_t k);  // k >= 2

TruncatedSeries series_from(const Sequence& s, std::size_t order);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// true iff sum over monomials of x^i * G(x)^j vanishes mod x^N, G from s.
bool verify_annihilator(const BivariatePolyF2& h, const Sequence& s, std::size_t order);
bool verify_annihilator(const BivariatePolyF2& h, std::span<const std::uint8_t> s,
                        std::size_t order);

struct ExpansionResult {
    bool exceeded = false;       // no annihilator up to degree_bound
    std::uint32_t degree = 0;    // E(S, N) when !exceeded (0 = all-zero prefix)
    std::uint32_t degree_bound = 0;
    std::optional<BivariatePolyF2> annihilator;  // witness when degree >= 1
};

inline constexpr std::uint32_t kDefaultExpansionDegreeBound = 30;

// Least total degree of a nonzero h with h(x, G(x)) = 0 mod x^N, searched by
// ascending degree via the kernel of the packed coefficient matrix whose
// columns are x^i G^j mod x^N.
ExpansionResult expansion_complexity(std::span<const std::uint8_t> s, std::size_t order,
                                     std::uint32_t degree_bound = kDefaultExpansionDegreeBound);
ExpansionResult expansion_complexity(const Sequence& s, std::size_t order,
                                     std::uint32_t degree_bound = kDefaultExpansionDegreeBound);

}  // namespace rarebit
