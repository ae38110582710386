#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fibcode {

enum class CollectionKind { Seq, Rand };

inline constexpr std::uint64_t kDefaultCollectionLength = std::uint64_t{1} << 22;
inline constexpr std::uint64_t kDefaultSeed = 2008;
/// Generator behind RAND collections; draws are mapped to the range by rejection sampling.
inline constexpr std::string_view kPrngName = "mt19937_64";

struct CollectionSpec {
    CollectionKind kind = CollectionKind::Seq;
    std::uint64_t lo = 1; // inclusive
    std::uint64_t hi = 1; // inclusive
    std::uint64_t length = kDefaultCollectionLength;
    std::uint64_t seed = kDefaultSeed;
};

struct CollectionPreset {
    std::string_view name;
    CollectionKind kind;
    std::uint64_t lo;
    std::uint64_t hi;
};

/// The ten benchmark collections, sequential ones first.
std::span<const CollectionPreset> collection_presets();

/// Throws DomainError for an unknown name.
CollectionSpec preset_spec(std::string_view name, std::uint64_t length = kDefaultCollectionLength,
                           std::uint64_t seed = kDefaultSeed);

/// SEQ cycles lo..hi ascending until `length` values exist; RAND draws
/// uniformly from lo..hi. Throws DomainError if lo == 0 or lo > hi.
std::vector<std::uint64_t> generate(const CollectionSpec& spec);

// Raw number files: 64-bit little-endian count, then that many 64-bit
// little-endian values.
void write_raw(std::ostream& out, std::span<const std::uint64_t> values);
std::vector<std::uint64_t> read_raw(std::istream& in);
void write_raw_file(const std::string& path, std::span<const std::uint64_t> values);
std::vector<std::uint64_t> read_raw_file(const std::string& path);

} // namespace fibcode
