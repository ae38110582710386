#pragma once

#include "fibcode/naive_codec.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace fibcode {

/// Fixed 22-byte archive header. Multi-byte fields are little-endian; the
/// payload that follows is the LSB-first code stream, ceil(bits / 8) bytes.
struct ArchiveHeader {
    static constexpr std::array<char, 4> kMagic{'F', 'F', 'C', '1'};
    static constexpr std::uint8_t kVersion = 1;
    static constexpr std::uint8_t kSegmentSize = 8;
    static constexpr std::size_t kEncodedSize = 4 + 1 + 1 + 8 + 8;

    std::uint8_t version = kVersion;
    std::uint8_t segment_size = kSegmentSize;
    std::uint64_t number_count = 0;
    std::uint64_t payload_bit_length = 0;
};

void write_archive(std::ostream& out, const EncodedStream& stream);

/// Throws FormatError on bad magic, version, segment size, payload length, or
/// a count that cannot fit in the payload.
EncodedStream read_archive(std::istream& in);

void write_archive_file(const std::string& path, const EncodedStream& stream);
EncodedStream read_archive_file(const std::string& path);

} // namespace fibcode
