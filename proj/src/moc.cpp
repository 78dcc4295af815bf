#include "rarebit/moc.hpp"

#include <stdexcept>
#include <string_view>
#include <unordered_map>

namespace rarebit {

namespace {

void check_binary(std::span<const std::uint8_t> s) {
    for (std::uint8_t v : s)
        if (v > 1) throw std::invalid_argument("maximum order complexity requires a binary sequence");
}

void check_range(std::size_t have, std::uint64_t n) {
    if (n < 2 || n > have)
        throw std::invalid_argument("prefix length out of range (need 2 <= N <= sequence length)");
}

}  // namespace

MocEngine::MocEngine() {
    nodes_.emplace_back();  // root
}

std::int32_t MocEngine::new_node() {
    nodes_.emplace_back();
    return static_cast<std::int32_t>(nodes_.size() - 1);
}

void MocEngine::extend(std::uint8_t c) {
    std::int32_t cur = new_node();
    nodes_[cur].len = nodes_[last_].len + 1;
    std::int32_t p = last_;
    while (p != -1 && nodes_[p].next[c] == -1) {
        nodes_[p].next[c] = cur;
        p = nodes_[p].link;
    }
    if (p == -1) {
        nodes_[cur].link = 0;
    } else {
        std::int32_t q = nodes_[p].next[c];
        if (nodes_[p].len + 1 == nodes_[q].len) {
            nodes_[cur].link = q;
        } else {
            std::int32_t clone = new_node();
            Node& cl = nodes_[clone];
            cl = nodes_[q];  // copies transitions, link, successor annotations
            cl.len = nodes_[p].len + 1;
            while (p != -1 && nodes_[p].next[c] == q) {
                nodes_[p].next[c] = clone;
                p = nodes_[p].link;
            }
            nodes_[q].link = clone;
            nodes_[cur].link = clone;
        }
    }
    last_ = cur;
}

void MocEngine::record_successor(std::int32_t from, std::uint8_t c, std::int64_t end_pos) {
    std::uint8_t bit = static_cast<std::uint8_t>(1u << c);
    std::int32_t v = from;
    while (v != -1) {
        Node& node = nodes_[v];
        if (node.succ_mask & bit) break;  // suffix-link ancestors already have it
        if (node.succ_mask != 0) {
            // second distinct successor: factor of length len repeats with
            // different continuations
            std::int64_t other_end = node.succ_end[c ^ 1];
            auto len = static_cast<std::int64_t>(node.len);
            if (len > best_len_) {
                best_len_ = len;
                best_witness_.block_len = node.len;
                best_witness_.i = static_cast<std::uint64_t>(other_end - len + 1);
                best_witness_.j = static_cast<std::uint64_t>(end_pos - len + 1);
            }
        }
        node.succ_mask |= bit;
        node.succ_end[c] = end_pos;
        v = node.link;
    }
}

void MocEngine::push(std::uint8_t symbol) {
    if (symbol > 1) throw std::invalid_argument("MocEngine accepts binary symbols only");
    std::int32_t prev_last = last_;
    extend(symbol);
    if (length_ == 0) {
        first_symbol_ = symbol;
        // successor of the empty block at position 0
        nodes_[0].succ_mask = static_cast<std::uint8_t>(1u << symbol);
        nodes_[0].succ_end[symbol] = -1;
    } else {
        if (first_diff_ == UINT64_MAX && symbol != first_symbol_) first_diff_ = length_;
        record_successor(prev_last, symbol, static_cast<std::int64_t>(length_) - 1);
    }
    ++length_;
}

std::uint64_t MocEngine::current() const {
    if (length_ < 2) throw std::logic_error("maximum order complexity needs at least 2 symbols");
    // constant-prefix clause: s_0..s_{n-2} all equal
    if (first_diff_ == UINT64_MAX) return 0;                    // whole prefix constant
    if (first_diff_ == length_ - 1) return length_ - 1;         // only the last symbol differs
    return static_cast<std::uint64_t>(best_len_ + 1);
}

MocResult MocEngine::result() const {
    MocResult r;
    r.prefix_length = length_;
    r.complexity = current();
    bool degenerate = first_diff_ == UINT64_MAX || first_diff_ == length_ - 1;
    if (!degenerate && best_len_ >= 0) r.witness = best_witness_;
    return r;
}

std::vector<std::uint64_t> MocEngine::factor_counts(std::size_t k_max) const {
    // state v covers factor lengths (len(link(v)), len(v)]
    std::vector<std::int64_t> diff(k_max + 2, 0);
    for (std::size_t v = 1; v < nodes_.size(); ++v) {
        std::uint64_t hi = nodes_[v].len;
        std::uint64_t lo = nodes_[nodes_[v].link].len + 1;
        if (lo > k_max) continue;
        hi = std::min<std::uint64_t>(hi, k_max);
        diff[lo] += 1;
        diff[hi + 1] -= 1;
    }
    std::vector<std::uint64_t> counts(k_max + 1, 0);
    std::int64_t run = 0;
    for (std::size_t k = 1; k <= k_max; ++k) {
        run += diff[k];
        counts[k] = static_cast<std::uint64_t>(run);
    }
    return counts;
}

MocResult moc_naive(std::span<const std::uint8_t> s, std::uint64_t n) {
    check_range(s.size(), n);
    check_binary(s.subspan(0, n));

    // constant-prefix clause
    bool constant_head = true;
    for (std::uint64_t i = 1; i + 1 < n; ++i) {
        if (s[i] != s[0]) {
            constant_head = false;
            break;
        }
    }
    if (constant_head) {
        MocResult r;
        r.prefix_length = n;
        r.complexity = (s[n - 1] == s[0]) ? 0 : n - 1;
        return r;
    }

    std::optional<MocWitness> last_conflict;
    for (std::uint64_t m = 1;; ++m) {
        // map from m-block to (successor, start index); conflict = two
        // identical blocks with different successors
        std::unordered_map<std::string_view, std::pair<std::uint8_t, std::uint64_t>> block_map;
        bool consistent = true;
        const char* base = reinterpret_cast<const char*>(s.data());
        for (std::uint64_t i = 0; i + m < n; ++i) {
            std::string_view block(base + i, m);
            auto [it, inserted] = block_map.try_emplace(block, s[i + m], i);
            if (!inserted && it->second.first != s[i + m]) {
                consistent = false;
                last_conflict = MocWitness{it->second.second, i, m};
                break;
            }
        }
        if (consistent) {
            MocResult r;
            r.prefix_length = n;
            r.complexity = m;
            r.witness = last_conflict;
            return r;
        }
    }
}

MocResult moc_fast(std::span<const std::uint8_t> s, std::uint64_t n) {
    check_range(s.size(), n);
    MocEngine engine;
    for (std::uint64_t i = 0; i < n; ++i) engine.push(s[i]);
    return engine.result();
}

std::vector<MocResult> moc_profile(std::span<const std::uint8_t> s,
                                   std::span<const std::uint64_t> checkpoints) {
    std::vector<MocResult> out;
    if (checkpoints.empty()) return out;
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        check_range(s.size(), checkpoints[i]);
        if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
            throw std::invalid_argument("checkpoints must be strictly ascending");
    }
    out.reserve(checkpoints.size());
    MocEngine engine;
    std::size_t next = 0;
    for (std::uint64_t i = 0; i < checkpoints.back(); ++i) {
        engine.push(s[i]);
        if (next < checkpoints.size() && engine.size() == checkpoints[next]) {
            out.push_back(engine.result());
            ++next;
        }
    }
    return out;
}

MocResult moc_naive(const Sequence& s, std::uint64_t n) {
    return moc_naive(std::span<const std::uint8_t>(s.symbols), n);
}
MocResult moc_fast(const Sequence& s, std::uint64_t n) {
    return moc_fast(std::span<const std::uint8_t>(s.symbols), n);
}
std::vector<MocResult> moc_profile(const Sequence& s, std::span<const std::uint64_t> checkpoints) {
    return moc_profile(std::span<const std::uint8_t>(s.symbols), checkpoints);
}

}  // namespace rarebit
