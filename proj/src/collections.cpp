#include "fibcode/collections.hpp"

#include "fibcode/error.hpp"

#include <array>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>

namespace fibcode {

namespace {

constexpr std::array<CollectionPreset, 10> kPresets{{
    {"SEQ_ALL", CollectionKind::Seq, 1, 4'194'304},
    {"SEQ_VerySmall", CollectionKind::Seq, 1, 255},
    {"SEQ_Small", CollectionKind::Seq, 256, 65'535},
    {"SEQ_Large", CollectionKind::Seq, 65'536, 16'777'215},
    {"SEQ_VeryLarge", CollectionKind::Seq, 16'777'216, 4'294'967'295},
    {"RAND_ALL", CollectionKind::Rand, 1, 4'294'967'295},
    {"RAND_VerySmall", CollectionKind::Rand, 1, 255},
    {"RAND_Small", CollectionKind::Rand, 256, 65'535},
    {"RAND_Large", CollectionKind::Rand, 65'536, 16'777'215},
    {"RAND_VeryLarge", CollectionKind::Rand, 16'777'216, 4'294'967'295},
}};

void put_u64(std::ostream& out, std::uint64_t v)
{
    std::array<char, 8> buf;
    for (std::size_t i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xFFu);
    out.write(buf.data(), buf.size());
}

bool get_u64(std::istream& in, std::uint64_t& v)
{
    std::array<unsigned char, 8> buf;
    if (!in.read(reinterpret_cast<char*>(buf.data()), buf.size())) return false;
    v = 0;
    for (std::size_t i = 0; i < 8; ++i) v |= std::uint64_t{buf[i]} << (8 * i);
    return true;
}

} // namespace

std::span<const CollectionPreset> collection_presets()
{
    return kPresets;
}

CollectionSpec preset_spec(std::string_view name, std::uint64_t length, std::uint64_t seed)
{
    for (const auto& p : kPresets)
        if (p.name == name) return {p.kind, p.lo, p.hi, length, seed};
    throw DomainError("unknown collection preset '" + std::string(name) + "'");
}

std::vector<std::uint64_t> generate(const CollectionSpec& spec)
{
    if (spec.lo == 0) throw DomainError("collection range must start at 1 or above");
    if (spec.lo > spec.hi) throw DomainError("empty collection range");

    std::vector<std::uint64_t> out;
    out.reserve(static_cast<std::size_t>(spec.length));
    const std::uint64_t width = spec.hi - spec.lo + 1; // lo >= 1, so no wraparound
    if (spec.kind == CollectionKind::Seq) {
        std::uint64_t offset = 0;
        for (std::uint64_t i = 0; i < spec.length; ++i) {
            out.push_back(spec.lo + offset);
            if (++offset == width) offset = 0;
        }
        return out;
    }

    std::mt19937_64 rng(spec.seed);
    // Draws below 2^64 mod width would bias the low residues.
    const std::uint64_t reject_below = (0 - width) % width;
    for (std::uint64_t i = 0; i < spec.length; ++i) {
        std::uint64_t x;
        do {
            x = rng();
        } while (x < reject_below);
        out.push_back(spec.lo + x % width);
    }
    return out;
}

void write_raw(std::ostream& out, std::span<const std::uint64_t> values)
{
    put_u64(out, values.size());
    for (std::uint64_t v : values) put_u64(out, v);
    if (!out) throw IoError("failed writing raw numbers");
}

std::vector<std::uint64_t> read_raw(std::istream& in)
{
    std::uint64_t count;
    if (!get_u64(in, count)) throw FormatError("raw file too short for its count header");
    std::vector<std::uint64_t> values;
    for (std::uint64_t i = 0; i < count; ++i) {
        std::uint64_t v;
        if (!get_u64(in, v))
            throw FormatError("raw file holds " + std::to_string(i) + " of " + std::to_string(count) +
                              " declared numbers");
        values.push_back(v);
    }
    if (in.peek() != std::char_traits<char>::eof()) throw FormatError("trailing bytes after raw numbers");
    return values;
}

void write_raw_file(const std::string& path, std::span<const std::uint64_t> values)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(path + ": " + std::strerror(errno));
    write_raw(out, values);
}

std::vector<std::uint64_t> read_raw_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path + ": " + std::strerror(errno));
    return read_raw(in);
}

} // namespace fibcode
