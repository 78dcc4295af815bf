#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rarebit/sequences.hpp"

namespace rarebit {

/// On-disk sequence format "RBSQ1": text header (magic, alphabet size,
/// length, generator descriptor) followed by the packed payload. Binary
/// alphabets pack 8 symbols per byte, symbol n at byte n/8 bit n%8
/// (LSB-first); larger alphabets use one byte per symbol.
inline constexpr std::string_view kSequenceMagic = "RBSQ1";

std::vector<std::uint8_t> pack_symbols(const std::vector<std::uint8_t>& symbols,
                                       std::uint32_t alphabet);
std::vector<std::uint8_t> unpack_symbols(const std::vector<std::uint8_t>& payload,
                                         std::uint32_t alphabet, std::uint64_t length);

std::vector<std::uint8_t> encode_sequence_file(const Sequence& s);
Sequence decode_sequence_file(const std::vector<std::uint8_t>& bytes);

void write_sequence_file(const Sequence& s, const std::filesystem::path& path);
Sequence read_sequence_file(const std::filesystem::path& path);

// FNV-1a over bytes; used as the cache content fingerprint
std::uint64_t content_fingerprint(const std::vector<std::uint8_t>& bytes);

/// Content cache keyed by (descriptor, length). The directory comes from
/// RAREBIT_CACHE or falls back to the per-user cache path. Writes go through
/// a temp file and rename so concurrent generators never see partial files.
class SequenceCache {
public:
    SequenceCache();  // resolves the directory from the environment
    explicit SequenceCache(std::filesystem::path dir);

    const std::filesystem::path& directory() const { return dir_; }

    // cached bytes for the key, if present and intact
    std::optional<std::vector<std::uint8_t>> lookup(const GeneratorDescriptor& g,
                                                    std::uint64_t length) const;
    void store(const GeneratorDescriptor& g, std::uint64_t length,
               const std::vector<std::uint8_t>& bytes);

private:
    std::filesystem::path entry_path(const GeneratorDescriptor& g, std::uint64_t length) const;
    std::filesystem::path dir_;
};

// generate_prefix with file-cache reuse; returns the encoded file bytes
std::vector<std::uint8_t> generate_cached(const GeneratorDescriptor& g, std::uint64_t length,
                                          SequenceCache* cache);

void write_bytes_atomic(const std::vector<std::uint8_t>& bytes,
                        const std::filesystem::path& path);

}  // namespace rarebit
