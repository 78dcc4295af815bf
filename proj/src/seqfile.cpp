#include "rarebit/seqfile.hpp"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace rarebit {

namespace fs = std::filesystem;

std::vector<std::uint8_t> pack_symbols(const std::vector<std::uint8_t>& symbols,
                                       std::uint32_t alphabet) {
    if (alphabet == 2) {
        std::vector<std::uint8_t> out((symbols.size() + 7) / 8, 0);
        for (std::size_t n = 0; n < symbols.size(); ++n)
            if (symbols[n]) out[n / 8] |= static_cast<std::uint8_t>(1u << (n % 8));
        return out;
    }
    if (alphabet > 256) throw std::invalid_argument("alphabet size above 256 is not supported");
    return symbols;
}

std::vector<std::uint8_t> unpack_symbols(const std::vector<std::uint8_t>& payload,
                                         std::uint32_t alphabet, std::uint64_t length) {
    if (alphabet == 2) {
        if (payload.size() != (length + 7) / 8)
            throw std::invalid_argument("payload size does not match header length");
        std::vector<std::uint8_t> out(length, 0);
        for (std::uint64_t n = 0; n < length; ++n)
            out[n] = (payload[n / 8] >> (n % 8)) & 1;
        return out;
    }
    if (payload.size() != length)
        throw std::invalid_argument("payload size does not match header length");
    return payload;
}

std::vector<std::uint8_t> encode_sequence_file(const Sequence& s) {
    s.validate();
    std::string header;
    header += kSequenceMagic;
    header += '\n';
    header += "m=" + std::to_string(s.alphabet) + "\n";
    header += "n=" + std::to_string(s.symbols.size()) + "\n";
    header += "gen=" + s.provenance.to_string() + "\n";
    header += "\n";
    std::vector<std::uint8_t> payload = pack_symbols(s.symbols, s.alphabet);
    std::vector<std::uint8_t> bytes(header.begin(), header.end());
    bytes.insert(bytes.end(), payload.begin(), payload.end());
    return bytes;
}

Sequence decode_sequence_file(const std::vector<std::uint8_t>& bytes) {
    // header: magic line, key=value lines, blank line, then payload
    std::size_t pos = 0;
    auto next_line = [&]() -> std::string {
        std::size_t nl = pos;
        while (nl < bytes.size() && bytes[nl] != '\n') ++nl;
        if (nl == bytes.size()) throw std::invalid_argument("truncated sequence file header");
        std::string line(bytes.begin() + static_cast<std::ptrdiff_t>(pos),
                         bytes.begin() + static_cast<std::ptrdiff_t>(nl));
        pos = nl + 1;
        return line;
    };
    if (next_line() != kSequenceMagic)
        throw std::invalid_argument("not a rarebit sequence file (bad magic)");
    std::uint32_t alphabet = 0;
    std::uint64_t length = 0;
    std::string descriptor;
    bool saw_m = false, saw_n = false, saw_gen = false;
    while (true) {
        std::string line = next_line();
        if (line.empty()) break;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad sequence file header line");
        std::string key = line.substr(0, eq), value = line.substr(eq + 1);
        if (key == "m") {
            alphabet = static_cast<std::uint32_t>(std::stoul(value));
            saw_m = true;
        } else if (key == "n") {
            length = std::stoull(value);
            saw_n = true;
        } else if (key == "gen") {
            descriptor = value;
            saw_gen = true;
        } else {
            throw std::invalid_argument("unknown sequence file header key: " + key);
        }
    }
    if (!saw_m || !saw_n || !saw_gen)
        throw std::invalid_argument("sequence file header missing m/n/gen fields");
    Sequence s;
    s.alphabet = alphabet;
    s.provenance = GeneratorDescriptor::parse(descriptor);
    std::vector<std::uint8_t> payload(bytes.begin() + static_cast<std::ptrdiff_t>(pos), bytes.end());
    s.symbols = unpack_symbols(payload, alphabet, length);
    s.validate();
    return s;
}

void write_bytes_atomic(const std::vector<std::uint8_t>& bytes, const fs::path& path) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
        out.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, path);
}

void write_sequence_file(const Sequence& s, const fs::path& path) {
    write_bytes_atomic(encode_sequence_file(s), path);
}

Sequence read_sequence_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open sequence file: " + path.string());
    std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                    std::istreambuf_iterator<char>()};
    return decode_sequence_file(bytes);
}

std::uint64_t content_fingerprint(const std::vector<std::uint8_t>& bytes) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
    for (std::uint8_t b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

fs::path default_cache_dir() {
    if (const char* env = std::getenv("RAREBIT_CACHE")) return fs::path(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME")) return fs::path(xdg) / "rarebit";
    if (const char* home = std::getenv("HOME")) return fs::path(home) / ".cache" / "rarebit";
    return fs::temp_directory_path() / "rarebit-cache";
}

}  // namespace

SequenceCache::SequenceCache() : dir_(default_cache_dir()) {}
SequenceCache::SequenceCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path SequenceCache::entry_path(const GeneratorDescriptor& g, std::uint64_t length) const {
    std::string key = g.to_string() + "#" + std::to_string(length);
    std::vector<std::uint8_t> key_bytes(key.begin(), key.end());
    return dir_ / (hex64(content_fingerprint(key_bytes)) + ".rbsq");
}

std::optional<std::vector<std::uint8_t>> SequenceCache::lookup(const GeneratorDescriptor& g,
                                                               std::uint64_t length) const {
    fs::path path = entry_path(g, length);
    std::error_code ec;
    if (!fs::exists(path, ec)) return std::nullopt;
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                    std::istreambuf_iterator<char>()};
    // a hit must decode to exactly the requested key, otherwise regenerate
    try {
        Sequence s = decode_sequence_file(bytes);
        if (s.symbols.size() != length || !(s.provenance == g)) return std::nullopt;
    } catch (const std::exception&) {
        return std::nullopt;
    }
    return bytes;
}

void SequenceCache::store(const GeneratorDescriptor& g, std::uint64_t length,
                          const std::vector<std::uint8_t>& bytes) {
    fs::create_directories(dir_);
    write_bytes_atomic(bytes, entry_path(g, length));
    // append-only index: key, descriptor, length, content fingerprint
    std::ofstream index(dir_ / "index.tsv", std::ios::app);
    index << entry_path(g, length).filename().string() << '\t' << g.to_string() << '\t' << length
          << '\t' << hex64(content_fingerprint(bytes)) << '\n';
}

std::vector<std::uint8_t> generate_cached(const GeneratorDescriptor& g, std::uint64_t length,
                                          SequenceCache* cache) {
    if (cache) {
        if (auto hit = cache->lookup(g, length)) return *hit;
    }
    Sequence s = generate_prefix(g, length);
    std::vector<std::uint8_t> bytes = encode_sequence_file(s);
    if (cache) cache->store(g, length, bytes);
    return bytes;
}

}  // namespace rarebit
