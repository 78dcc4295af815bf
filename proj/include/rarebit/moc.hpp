#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rarebit/sequences.hpp"

namespace rarebit {

/// Pair of positions with equal (M-1)-blocks but different successors,
/// proving that M-1 does not suffice.
struct MocWitness {
    std::uint64_t i = 0;
    std::uint64_t j = 0;
    std::uint64_t block_len = 0;  // = M - 1
};

struct MocResult {
    std::uint64_t prefix_length = 0;  // N
    std::uint64_t complexity = 0;     // M(S, N)
    std::optional<MocWitness> witness;
};

/// Online maximum-order-complexity engine for binary sequences.
///
/// Maintains a suffix automaton of the prefix read so far, annotated per
/// state with the set of successor symbols seen over its end positions.
/// M(S,n) = 1 + (longest factor occurring with two distinct successors),
/// with the constant-prefix cases handled by their defining clause. Feeding
/// symbols one at a time gives every intermediate M(S,n) in amortized O(1).
class MocEngine {
public:
    MocEngine();

    void push(std::uint8_t symbol);  // symbol in {0,1}
    std::uint64_t size() const { return length_; }

    // M(S, n) for the current prefix length n; requires size() >= 2.
    std::uint64_t current() const;
    MocResult result() const;

    // distinct factors of each length 1..k_max (subword complexity profile)
    std::vector<std::uint64_t> factor_counts(std::size_t k_max) const;

private:
    struct Node {
        std::uint64_t len = 0;
        std::int32_t link = -1;
        std::int32_t next[2] = {-1, -1};
        std::uint8_t succ_mask = 0;
        std::int64_t succ_end[2] = {-1, -1};  // an end position per successor symbol
    };

    std::int32_t new_node();
    void extend(std::uint8_t c);
    void record_successor(std::int32_t from, std::uint8_t c, std::int64_t end_pos);

    std::vector<Node> nodes_;
    std::int32_t last_ = 0;
    std::uint64_t length_ = 0;
    std::uint8_t first_symbol_ = 0;
    std::uint64_t first_diff_ = UINT64_MAX;  // first index with s != s_0
    std::int64_t best_len_ = -1;             // longest conflicting factor so far
    MocWitness best_witness_;
};

// Quadratic-time reference: Definition-level block-map check. Binary only.
MocResult moc_naive(std::span<const std::uint8_t> s, std::uint64_t n);
MocResult moc_naive(const Sequence& s, std::uint64_t n);

// Suffix-automaton engine; identical values to moc_naive.
MocResult moc_fast(std::span<const std::uint8_t> s, std::uint64_t n);
MocResult moc_fast(const Sequence& s, std::uint64_t n);

// M(S, N) at each checkpoint (sorted ascending, each >= 2 and <= s.size()).
std::vector<MocResult> moc_profile(std::span<const std::uint8_t> s,
                                   std::span<const std::uint64_t> checkpoints);
std::vector<MocResult> moc_profile(const Sequence& s,
                                   std::span<const std::uint64_t> checkpoints);

}  // namespace rarebit
