#include "rarebit/expansion.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace rarebit {

namespace {

std::size_t word_count(std::size_t order) { return (order + 63) / 64; }

void check_binary_prefix(std::span<const std::uint8_t> s, std::size_t order) {
    if (order == 0) throw std::invalid_argument("series order must be at least 1");
    if (order > s.size()) throw std::invalid_argument("series order exceeds sequence length");
    for (std::size_t i = 0; i < order; ++i)
        if (s[i] > 1) throw std::invalid_argument("generating function requires a binary sequence");
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order)
    : order_(order), words_(word_count(order), 0) {
    if (order == 0) throw std::invalid_argument("series order must be at least 1");
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
    TruncatedSeries s(order);
    s.words_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::from_sequence(std::span<const std::uint8_t> s, std::size_t order) {
    check_binary_prefix(s, order);
    TruncatedSeries g(order);
    for (std::size_t i = 0; i < order; ++i)
        if (s[i]) g.words_[i / 64] |= 1ull << (i % 64);
    return g;
}

TruncatedSeries TruncatedSeries::from_sequence(const Sequence& s, std::size_t order) {
    return from_sequence(std::span<const std::uint8_t>(s.symbols), order);
}

bool TruncatedSeries::coeff(std::size_t i) const {
    if (i >= order_) return false;
    return (words_[i / 64] >> (i % 64)) & 1;
}

void TruncatedSeries::set_coeff(std::size_t i, bool v) {
    if (i >= order_) throw std::out_of_range("series coefficient index beyond truncation order");
    std::uint64_t bit = 1ull << (i % 64);
    if (v)
        words_[i / 64] |= bit;
    else
        words_[i / 64] &= ~bit;
}

bool TruncatedSeries::is_zero() const {
    for (std::uint64_t w : words_)
        if (w) return false;
    return true;
}

void TruncatedSeries::mask_tail() {
    std::size_t rem = order_ % 64;
    if (rem) words_.back() &= (1ull << rem) - 1;
}

TruncatedSeries& TruncatedSeries::operator^=(const TruncatedSeries& o) {
    if (order_ != o.order_) throw std::invalid_argument("series truncation order mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order_ != b.order_) throw std::invalid_argument("series truncation order mismatch");
    TruncatedSeries r(a.order_);
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
        std::uint64_t bits = a.words_[w];
        while (bits) {
            std::size_t i = 64 * w + static_cast<std::size_t>(std::countr_zero(bits));
            bits &= bits - 1;
            // r ^= b << i, truncated
            std::size_t shift_words = i / 64, shift_bits = i % 64;
            for (std::size_t j = 0; j + shift_words < r.words_.size(); ++j) {
                std::uint64_t v = b.words_[j];
                r.words_[j + shift_words] ^= shift_bits ? (v << shift_bits) : v;
                if (shift_bits && j + shift_words + 1 < r.words_.size())
                    r.words_[j + shift_words + 1] ^= v >> (64 - shift_bits);
            }
        }
    }
    r.mask_tail();
    return r;
}

TruncatedSeries TruncatedSeries::square() const {
    TruncatedSeries r(order_);
    for (std::size_t i = 0; 2 * i < order_; ++i)
        if (coeff(i)) r.words_[(2 * i) / 64] |= 1ull << ((2 * i) % 64);
    return r;
}

TruncatedSeries TruncatedSeries::shifted(std::size_t i) const {
    TruncatedSeries r(order_);
    if (i >= order_) return r;
    std::size_t shift_words = i / 64, shift_bits = i % 64;
    for (std::size_t j = 0; j + shift_words < r.words_.size(); ++j) {
        std::uint64_t v = words_[j];
        r.words_[j + shift_words] ^= shift_bits ? (v << shift_bits) : v;
        if (shift_bits && j + shift_words + 1 < r.words_.size())
            r.words_[j + shift_words + 1] ^= v >> (64 - shift_bits);
    }
    r.mask_tail();
    return r;
}

void BivariatePolyF2::normalize() {
    std::sort(monomials.begin(), monomials.end());
    // coefficients live in F2: pairs cancel
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::size_t i = 0; i < monomials.size();) {
        std::size_t j = i;
        while (j < monomials.size() && monomials[j] == monomials[i]) ++j;
        if ((j - i) % 2) out.push_back(monomials[i]);
        i = j;
    }
    monomials = std::move(out);
}

std::uint32_t BivariatePolyF2::total_degree() const {
    std::uint32_t d = 0;
    for (auto [i, j] : monomials) d = std::max(d, i + j);
    return d;
}

std::uint32_t BivariatePolyF2::max_y_degree() const {
    std::uint32_t d = 0;
    for (auto [i, j] : monomials) d = std::max(d, j);
    return d;
}

std::string BivariatePolyF2::to_text() const {
    std::string s;
    for (auto [i, j] : monomials) {
        s += std::to_string(i);
        s += ',';
        s += std::to_string(j);
        s += '\n';
    }
    return s;
}

BivariatePolyF2 BivariatePolyF2::from_text(std::string_view text) {
    BivariatePolyF2 h;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\r')) line.pop_back();
        std::size_t start = line.find_first_not_of(' ');
        if (start == std::string::npos) continue;
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos)
            throw std::invalid_argument("bad annihilator line (want \"i,j\"): " + line);
        std::uint32_t i = static_cast<std::uint32_t>(std::stoul(line.substr(start, comma - start)));
        std::uint32_t j = static_cast<std::uint32_t>(std::stoul(line.substr(comma + 1)));
        h.monomials.emplace_back(i, j);
    }
    h.normalize();
    return h;
}

BivariatePolyF2 thue_morse_annihilator() {
    // (x+1)^3 y^2 + (x+1)^2 y + x
    BivariatePolyF2 h;
    h.monomials = {{0, 2}, {1, 2}, {2, 2}, {3, 2}, {0, 1}, {2, 1}, {1, 0}};
    h.normalize();
    return h;
}

BivariatePolyF2 pattern_annihilator(std::uint32_t k) {
    if (k < 1) throw std::invalid_argument("pattern annihilator requires k >= 1");
    if (k > 24) throw std::invalid_argument("pattern annihilator exponent too large");
    // (x+1)^(2^k+1) y^2 + (x+1)^(2^k) y + x^(2^k - 1), total degree 2^k + 3;
    // derived from G = (1+x) G(x)^2 + x^(2^k-1) / (1+x)^(2^k), which follows
    // from p_k(2n) = p_k(n) and p_k(2n+1) = p_k(n) + [n = -1 mod 2^(k-1)].
    // Specializes at k = 1 to the Thue-Morse annihilator.
    std::uint32_t p = 1u << k;
    BivariatePolyF2 h;
    h.monomials = {{0, 2}, {1, 2}, {p, 2}, {p + 1, 2}, {0, 1}, {p, 1}, {p - 1, 0}};
    h.normalize();
    return h;
}

TruncatedSeries series_from(const Sequence& s, std::size_t order) {
    return TruncatedSeries::from_sequence(s, order);
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a * b;
}

bool verify_annihilator(const BivariatePolyF2& h, std::span<const std::uint8_t> s,
                        std::size_t order) {
    if (h.empty()) throw std::invalid_argument("annihilator polynomial must be nonzero");
    TruncatedSeries g = TruncatedSeries::from_sequence(s, order);
    std::uint32_t max_j = h.max_y_degree();
    std::vector<TruncatedSeries> powers;
    powers.reserve(max_j + 1);
    powers.push_back(TruncatedSeries::one(order));
    for (std::uint32_t j = 1; j <= max_j; ++j) powers.push_back(powers.back() * g);
    TruncatedSeries acc(order);
    for (auto [i, j] : h.monomials) acc ^= powers[j].shifted(i);
    return acc.is_zero();
}

bool verify_annihilator(const BivariatePolyF2& h, const Sequence& s, std::size_t order) {
    return verify_annihilator(h, std::span<const std::uint8_t>(s.symbols), order);
}

namespace {

// Incremental nullspace detector over F2: columns arrive one at a time, each
// reduced against stored pivot rows; a column that cancels to zero yields a
// kernel combination of everything inserted so far.
class KernelTracker {
public:
    KernelTracker(std::size_t dim_words, std::size_t combo_words)
        : dim_words_(dim_words), combo_words_(combo_words) {}

    // returns combination bitset if the new column is dependent
    std::optional<std::vector<std::uint64_t>> add_column(std::vector<std::uint64_t> col,
                                                         std::size_t index) {
        std::vector<std::uint64_t> combo(combo_words_, 0);
        combo[index / 64] |= 1ull << (index % 64);
        while (true) {
            std::size_t lead = lowest_set(col);
            if (lead == SIZE_MAX) return combo;  // dependent
            auto it = pivots_.find(lead);
            if (it == pivots_.end()) {
                pivots_.emplace(lead, Row{std::move(col), std::move(combo)});
                return std::nullopt;
            }
            const Row& row = it->second;
            for (std::size_t w = 0; w < dim_words_; ++w) col[w] ^= row.bits[w];
            for (std::size_t w = 0; w < combo_words_; ++w) combo[w] ^= row.combo[w];
        }
    }

private:
    struct Row {
        std::vector<std::uint64_t> bits;
        std::vector<std::uint64_t> combo;
    };

    std::size_t lowest_set(const std::vector<std::uint64_t>& v) const {
        for (std::size_t w = 0; w < v.size(); ++w)
            if (v[w]) return 64 * w + static_cast<std::size_t>(std::countr_zero(v[w]));
        return SIZE_MAX;
    }

    std::size_t dim_words_;
    std::size_t combo_words_;
    std::unordered_map<std::size_t, Row> pivots_;
};

}  // namespace

ExpansionResult expansion_complexity(std::span<const std::uint8_t> s, std::size_t order,
                                     std::uint32_t degree_bound) {
    check_binary_prefix(s, order);
    if (degree_bound < 1) throw std::invalid_argument("degree bound must be at least 1");

    ExpansionResult result;
    result.degree_bound = degree_bound;

    bool all_zero = true;
    for (std::size_t i = 0; i < order; ++i)
        if (s[i]) {
            all_zero = false;
            break;
        }
    if (all_zero) return result;  // E = 0 by the defining clause

    TruncatedSeries g = TruncatedSeries::from_sequence(s, order);
    std::vector<TruncatedSeries> powers{TruncatedSeries::one(order)};

    std::size_t max_columns = (static_cast<std::size_t>(degree_bound) + 1) *
                              (static_cast<std::size_t>(degree_bound) + 2) / 2;
    KernelTracker tracker(word_count(order), (max_columns + 63) / 64);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> column_monomials;

    // constant monomial: cannot vanish alone but participates in combinations
    column_monomials.emplace_back(0, 0);
    tracker.add_column(powers[0].words(), 0);

    for (std::uint32_t d = 1; d <= degree_bound; ++d) {
        while (powers.size() <= d) powers.push_back(powers.back() * g);
        // new columns of total degree exactly d
        for (std::uint32_t j = 0; j <= d; ++j) {
            std::uint32_t i = d - j;
            TruncatedSeries col = powers[j].shifted(i);
            std::size_t index = column_monomials.size();
            column_monomials.emplace_back(i, j);
            auto combo = tracker.add_column(col.words(), index);
            if (combo) {
                BivariatePolyF2 h;
                for (std::size_t c = 0; c < column_monomials.size(); ++c)
                    if ((*combo)[c / 64] >> (c % 64) & 1) h.monomials.push_back(column_monomials[c]);
                h.normalize();
                result.degree = d;
                result.annihilator = std::move(h);
                return result;
            }
        }
    }
    result.exceeded = true;
    return result;
}

ExpansionResult expansion_complexity(const Sequence& s, std::size_t order,
                                     std::uint32_t degree_bound) {
    return expansion_complexity(std::span<const std::uint8_t>(s.symbols), order, degree_bound);
}

}  // namespace rarebit
