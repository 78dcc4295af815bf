#include "rarebit/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace rarebit {

namespace {

constexpr std::uint64_t kMaxCorrelationLength = 1ull << 31;
constexpr std::uint32_t kMaxBlockLength = 26;

void check_binary_prefix(std::span<const std::uint8_t> s, std::uint64_t n) {
    if (n > s.size()) throw std::invalid_argument("prefix length exceeds sequence length");
    for (std::uint64_t i = 0; i < n; ++i)
        if (s[i] > 1) throw std::invalid_argument("statistic requires a binary sequence");
}

// max over 0 <= a < b <= m of |ps[b] - ps[a]| for the prefix sums of the
// lag-l sign sequence; ps has m+1 entries
std::uint64_t lag_peak(std::span<const std::uint8_t> s, std::uint64_t n, std::uint64_t lag,
                       std::vector<std::int64_t>* ps_out = nullptr) {
    std::uint64_t m = n - lag;  // number of sign terms
    std::int64_t run = 0, lo = 0, hi = 0;
    if (ps_out) {
        ps_out->clear();
        ps_out->reserve(m + 1);
        ps_out->push_back(0);
    }
    for (std::uint64_t t = 0; t < m; ++t) {
        run += (s[t] == s[t + lag]) ? 1 : -1;
        if (ps_out) ps_out->push_back(run);
        lo = std::min(lo, run);
        hi = std::max(hi, run);
    }
    return static_cast<std::uint64_t>(hi - lo);
}

}  // namespace

CorrelationResult correlation2(std::span<const std::uint8_t> s, std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("correlation needs N >= 2");
    if (n > kMaxCorrelationLength) throw std::invalid_argument("prefix length exceeds 2^31 cap");
    check_binary_prefix(s, n);

    // pass 1: peak per lag (independent, data-parallel for long prefixes)
    std::vector<std::uint64_t> peak(n, 0);
    auto scan = [&](std::uint64_t lag_begin, std::uint64_t lag_end) {
        for (std::uint64_t lag = lag_begin; lag < lag_end; ++lag) peak[lag] = lag_peak(s, n, lag);
    };
    unsigned hw = std::thread::hardware_concurrency();
    if (n >= (1u << 12) && hw >= 2) {
        unsigned workers = std::min<unsigned>(hw, 8);
        std::vector<std::thread> threads;
        std::uint64_t chunk = (n - 1 + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::uint64_t begin = 1 + w * chunk;
            std::uint64_t end = std::min<std::uint64_t>(n, begin + chunk);
            if (begin >= end) break;
            threads.emplace_back(scan, begin, end);
        }
        for (auto& t : threads) t.join();
    } else {
        scan(1, n);
    }

    std::uint64_t best = 0, best_lag = 1;
    for (std::uint64_t lag = 1; lag < n; ++lag) {
        if (peak[lag] > best) {
            best = peak[lag];
            best_lag = lag;
        }
    }

    // pass 2: deterministic argmax inside the winning lag
    std::vector<std::int64_t> ps;
    lag_peak(s, n, best_lag, &ps);
    std::uint64_t m = n - best_lag;
    std::vector<std::int64_t> sufmin(m + 2), sufmax(m + 2);
    sufmin[m + 1] = INT64_MAX;
    sufmax[m + 1] = INT64_MIN;
    for (std::uint64_t b = m + 1; b > 0; --b) {
        sufmin[b - 1] = std::min(sufmin[b], b - 1 < ps.size() ? ps[b - 1] : INT64_MAX);
        sufmax[b - 1] = std::max(sufmax[b], b - 1 < ps.size() ? ps[b - 1] : INT64_MIN);
    }
    auto v = static_cast<std::int64_t>(best);
    CorrelationResult r;
    r.value = best;
    for (std::uint64_t a = 0; a < m; ++a) {
        bool up = sufmax[a + 1] - ps[a] >= v;
        bool down = ps[a] - sufmin[a + 1] >= v;
        if (!up && !down) continue;
        for (std::uint64_t b = a + 1; b <= m; ++b) {
            if (std::llabs(ps[b] - ps[a]) == v) {
                r.d1 = a;
                r.d2 = a + best_lag;
                r.window = b - 1 - a;
                return r;
            }
        }
    }
    // unreachable: the peak was observed in pass 1
    throw std::logic_error("correlation argmax reconstruction failed");
}

CorrelationResult correlation2(const Sequence& s, std::uint64_t n) {
    return correlation2(std::span<const std::uint8_t>(s.symbols), n);
}

CorrelationResult correlation2_bruteforce(std::span<const std::uint8_t> s, std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("correlation needs N >= 2");
    check_binary_prefix(s, n);
    CorrelationResult best;
    bool have = false;
    for (std::uint64_t d1 = 0; d1 + 1 < n; ++d1) {
        for (std::uint64_t d2 = d1 + 1; d2 < n; ++d2) {
            std::int64_t sum = 0;
            for (std::uint64_t mm = 0; d2 + mm < n; ++mm) {
                sum += (s[mm + d1] == s[mm + d2]) ? 1 : -1;
                std::uint64_t value = static_cast<std::uint64_t>(std::llabs(sum));
                bool better = !have || value > best.value ||
                              (value == best.value &&
                               std::tuple(d2 - d1, d1, mm) <
                                   std::tuple(best.d2 - best.d1, best.d1, best.window));
                if (better) {
                    best = {value, mm, d1, d2};
                    have = true;
                }
            }
        }
    }
    return best;
}

BlockStats subword_complexity(std::span<const std::uint8_t> s, std::uint32_t k) {
    std::uint64_t n = s.size();
    if (k < 1 || k > n) throw std::invalid_argument("block length out of range");
    if (k > kMaxBlockLength) throw std::invalid_argument("block length exceeds supported maximum");
    check_binary_prefix(s, n);

    BlockStats st;
    st.k = k;
    st.prefix_length = n;
    st.counts.assign(1ull << k, 0);
    std::uint64_t mask = (k == 64) ? ~0ull : (1ull << k) - 1;
    std::uint64_t code = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        code = ((code << 1) | s[i]) & mask;
        if (i + 1 >= k) ++st.counts[code];
    }
    std::uint64_t windows = n - k + 1;
    double expected = std::ldexp(1.0, -static_cast<int>(k));
    for (std::uint64_t c : st.counts) {
        if (c) ++st.distinct;
        double dev = std::abs(static_cast<double>(c) / static_cast<double>(windows) - expected);
        st.max_deviation = std::max(st.max_deviation, dev);
    }
    return st;
}

BlockStats subword_complexity(const Sequence& s, std::uint32_t k) {
    return subword_complexity(std::span<const std::uint8_t>(s.symbols), k);
}

std::vector<BlockStats> normality_deviation(std::span<const std::uint8_t> s, std::uint32_t k_max) {
    std::uint64_t n = s.size();
    if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
    // k_max <= log2(N) - 2
    if (n < (1ull << (k_max + 2)))
        throw std::invalid_argument("k_max too large for prefix length (need k_max <= log2(N) - 2)");
    std::vector<BlockStats> out;
    out.reserve(k_max);
    for (std::uint32_t k = 1; k <= k_max; ++k) out.push_back(subword_complexity(s, k));
    return out;
}

std::vector<BlockStats> normality_deviation(const Sequence& s, std::uint32_t k_max) {
    return normality_deviation(std::span<const std::uint8_t>(s.symbols), k_max);
}

}  // namespace rarebit
