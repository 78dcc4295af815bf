#include "rarebit/sequences.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace rarebit {

namespace {

constexpr std::uint64_t kMaxLength = 1ull << 31;
constexpr std::uint64_t kParallelThreshold = 1ull << 16;

std::string kind_name(GeneratorKind k) {
    switch (k) {
        case GeneratorKind::ThueMorse: return "tm";
        case GeneratorKind::PatternK: return "pattern";
        case GeneratorKind::GeneralPattern: return "general";
    }
    return "?";
}

}  // namespace

GeneratorDescriptor GeneratorDescriptor::canonical() const {
    GeneratorDescriptor out = *this;
    if (out.kind == GeneratorKind::GeneralPattern && out.spec.base == 2 &&
        out.spec.modulus == 2 && out.spec.is_binary_all_ones()) {
        out.kind = GeneratorKind::PatternK;
    }
    if (out.kind == GeneratorKind::PatternK && out.spec.length() == 1 &&
        out.spec.base == 2 && out.spec.modulus == 2) {
        out.kind = GeneratorKind::ThueMorse;
    }
    return out;
}

void GeneratorDescriptor::validate() const {
    spec.validate();
    if (kind != GeneratorKind::GeneralPattern) {
        if (spec.base != 2 || spec.modulus != 2 || !spec.is_binary_all_ones())
            throw std::invalid_argument("tm/pattern descriptors require base 2, mod 2, all-ones pattern");
    }
    if (kind == GeneratorKind::ThueMorse && spec.length() != 1)
        throw std::invalid_argument("thue-morse descriptor requires pattern length 1");
    if (rarefaction && rarefaction->degree() < 1)
        throw std::invalid_argument("rarefaction polynomial must have degree >= 1");
}

std::string GeneratorDescriptor::to_string() const {
    std::string s = "kind=" + kind_name(kind);
    if (kind == GeneratorKind::PatternK) {
        s += ";k=" + std::to_string(spec.length());
    } else if (kind == GeneratorKind::GeneralPattern) {
        s += ";q=" + std::to_string(spec.base);
        s += ";m=" + std::to_string(spec.modulus);
        s += ";omega=";
        for (std::size_t i = 0; i < spec.pattern.size(); ++i) {
            if (i) s += '.';
            s += std::to_string(spec.pattern[i]);
        }
    }
    if (rarefaction) s += ";poly=" + rarefaction->to_coeff_string();
    return s;
}

GeneratorDescriptor GeneratorDescriptor::parse(std::string_view text) {
    GeneratorDescriptor g;
    bool have_kind = false;
    std::uint32_t k = 1;
    PatternSpec spec = PatternSpec::all_ones(1);
    std::string kind_str;
    std::vector<std::string> seen;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t semi = text.find(';', pos);
        if (semi == std::string_view::npos) semi = text.size();
        std::string_view field = text.substr(pos, semi - pos);
        std::size_t eq = field.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("bad descriptor field: " + std::string(field));
        std::string_view key = field.substr(0, eq);
        std::string value(field.substr(eq + 1));
        seen.emplace_back(key);
        if (key == "kind") {
            kind_str = value;
            have_kind = true;
        } else if (key == "k") {
            k = static_cast<std::uint32_t>(std::stoul(value));
        } else if (key == "q") {
            spec.base = static_cast<std::uint32_t>(std::stoul(value));
        } else if (key == "m") {
            spec.modulus = static_cast<std::uint32_t>(std::stoul(value));
        } else if (key == "omega") {
            spec.pattern.clear();
            std::size_t p = 0;
            while (p <= value.size()) {
                std::size_t dot = value.find('.', p);
                if (dot == std::string::npos) dot = value.size();
                spec.pattern.push_back(static_cast<std::uint32_t>(std::stoul(value.substr(p, dot - p))));
                p = dot + 1;
                if (dot == value.size()) break;
            }
        } else if (key == "poly") {
            g.rarefaction = IntPolynomial::parse(value);
        } else {
            throw std::invalid_argument("unknown descriptor field: " + std::string(key));
        }
        pos = semi + 1;
    }
    if (!have_kind) throw std::invalid_argument("descriptor missing kind");
    auto allow_only = [&](std::initializer_list<std::string_view> keys) {
        for (const std::string& key : seen) {
            bool ok = false;
            for (std::string_view allowed : keys)
                if (key == allowed) ok = true;
            if (!ok)
                throw std::invalid_argument("descriptor field '" + key +
                                            "' does not apply to kind=" + kind_str);
        }
    };
    if (kind_str == "tm") {
        allow_only({"kind", "poly"});
        g.kind = GeneratorKind::ThueMorse;
        g.spec = PatternSpec::all_ones(1);
    } else if (kind_str == "pattern") {
        allow_only({"kind", "k", "poly"});
        g.kind = GeneratorKind::PatternK;
        g.spec = PatternSpec::all_ones(k);
    } else if (kind_str == "general") {
        allow_only({"kind", "q", "m", "omega", "poly"});
        g.kind = GeneratorKind::GeneralPattern;
        g.spec = spec;
    } else {
        throw std::invalid_argument("unknown generator kind: " + kind_str);
    }
    g.validate();
    return g;
}

GeneratorDescriptor GeneratorDescriptor::thue_morse() {
    return GeneratorDescriptor{};
}

GeneratorDescriptor GeneratorDescriptor::pattern(std::uint32_t k) {
    GeneratorDescriptor g;
    g.kind = k == 1 ? GeneratorKind::ThueMorse : GeneratorKind::PatternK;
    g.spec = PatternSpec::all_ones(k);
    return g;
}

GeneratorDescriptor GeneratorDescriptor::general(PatternSpec spec) {
    GeneratorDescriptor g;
    g.kind = GeneratorKind::GeneralPattern;
    g.spec = std::move(spec);
    return g.canonical();
}

GeneratorDescriptor GeneratorDescriptor::along(IntPolynomial poly) const {
    GeneratorDescriptor g = *this;
    if (poly.is_identity())
        g.rarefaction.reset();
    else
        g.rarefaction = std::move(poly);
    return g;
}

void Sequence::validate() const {
    if (alphabet < 2) throw std::invalid_argument("alphabet size must be at least 2");
    for (std::uint8_t s : symbols)
        if (s >= alphabet) throw std::invalid_argument("symbol out of alphabet range");
}

std::uint8_t thue_morse(std::uint64_t n) {
    return static_cast<std::uint8_t>(std::popcount(n) & 1);
}

std::uint8_t thue_morse(const BigNat& n) {
    return static_cast<std::uint8_t>(n.popcount() & 1);
}

std::uint8_t pattern_value(std::uint64_t n, const PatternSpec& spec) {
    return static_cast<std::uint8_t>(count_pattern(n, spec) % spec.modulus);
}

std::uint8_t pattern_value(const BigNat& n, const PatternSpec& spec) {
    return static_cast<std::uint8_t>(count_pattern(n, spec) % spec.modulus);
}

namespace {

// one contiguous index range; each worker writes a disjoint slice
void fill_range(const GeneratorDescriptor& g, std::uint64_t begin, std::uint64_t end,
                std::uint8_t* out) {
    const IntPolynomial* poly = g.rarefaction ? &*g.rarefaction : nullptr;
    for (std::uint64_t n = begin; n < end; ++n) {
        std::uint8_t value;
        if (!poly) {
            value = pattern_value(n, g.spec);
        } else {
            std::uint64_t v;
            if (poly->eval_u64(n, v)) {
                value = pattern_value(v, g.spec);
            } else {
                value = pattern_value(poly->eval(BigNat(n)), g.spec);
            }
        }
        out[n - begin] = value;
    }
}

}  // namespace

Sequence generate_prefix(const GeneratorDescriptor& g, std::uint64_t length) {
    g.validate();
    if (length == 0) throw std::invalid_argument("prefix length must be at least 1");
    if (length > kMaxLength) throw std::invalid_argument("prefix length too large");

    Sequence seq;
    seq.alphabet = g.alphabet_size();
    seq.provenance = g;
    seq.symbols.resize(length);

    unsigned hw = std::thread::hardware_concurrency();
    if (length < kParallelThreshold || hw < 2) {
        fill_range(g, 0, length, seq.symbols.data());
        return seq;
    }

    unsigned workers = std::min<unsigned>(hw, 8);
    std::uint64_t chunk = (length + workers - 1) / workers;
    std::vector<std::thread> threads;
    std::mutex err_mutex;
    std::exception_ptr first_error;
    std::uint64_t first_error_begin = UINT64_MAX;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t begin = w * chunk;
        std::uint64_t end = std::min(length, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([&, begin, end] {
            try {
                fill_range(g, begin, end, seq.symbols.data() + begin);
            } catch (...) {
                std::lock_guard lock(err_mutex);
                if (begin < first_error_begin) {
                    first_error_begin = begin;
                    first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return seq;
}

}  // namespace rarebit
