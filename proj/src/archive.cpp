#include "fibcode/archive.hpp"

#include "fibcode/error.hpp"

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>

namespace fibcode {

namespace {

void put_le64(std::array<char, ArchiveHeader::kEncodedSize>& buf, std::size_t at, std::uint64_t v)
{
    for (std::size_t i = 0; i < 8; ++i) buf[at + i] = static_cast<char>((v >> (8 * i)) & 0xFFu);
}

std::uint64_t get_le64(const std::array<char, ArchiveHeader::kEncodedSize>& buf, std::size_t at)
{
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < 8; ++i) v |= std::uint64_t{static_cast<unsigned char>(buf[at + i])} << (8 * i);
    return v;
}

} // namespace

void write_archive(std::ostream& out, const EncodedStream& stream)
{
    std::array<char, ArchiveHeader::kEncodedSize> buf{};
    std::copy(ArchiveHeader::kMagic.begin(), ArchiveHeader::kMagic.end(), buf.begin());
    buf[4] = static_cast<char>(ArchiveHeader::kVersion);
    buf[5] = static_cast<char>(ArchiveHeader::kSegmentSize);
    put_le64(buf, 6, stream.count);
    put_le64(buf, 14, stream.bit_length);
    out.write(buf.data(), buf.size());
    out.write(reinterpret_cast<const char*>(stream.bytes.data()), static_cast<std::streamsize>(stream.bytes.size()));
    if (!out) throw IoError("failed writing archive");
}

EncodedStream read_archive(std::istream& in)
{
    std::array<char, ArchiveHeader::kEncodedSize> buf{};
    if (!in.read(buf.data(), buf.size())) throw FormatError("archive shorter than its header");
    if (!std::equal(ArchiveHeader::kMagic.begin(), ArchiveHeader::kMagic.end(), buf.begin()))
        throw FormatError("bad archive magic");
    if (static_cast<std::uint8_t>(buf[4]) != ArchiveHeader::kVersion)
        throw FormatError("unsupported archive version " + std::to_string(static_cast<unsigned char>(buf[4])));
    if (static_cast<std::uint8_t>(buf[5]) != ArchiveHeader::kSegmentSize)
        throw FormatError("unsupported segment size " + std::to_string(static_cast<unsigned char>(buf[5])));

    EncodedStream stream;
    stream.count = get_le64(buf, 6);
    stream.bit_length = get_le64(buf, 14);
    stream.bytes.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());

    const std::uint64_t expected_bytes = stream.bit_length / 8 + (stream.bit_length % 8 != 0 ? 1 : 0);
    if (stream.bytes.size() != expected_bytes)
        throw FormatError("payload is " + std::to_string(stream.bytes.size()) + " bytes, header implies " +
                          std::to_string(expected_bytes));
    if (stream.count > stream.bit_length / 2)
        throw FormatError(std::to_string(stream.count) + " numbers cannot fit in " +
                          std::to_string(stream.bit_length) + " payload bits");
    return stream;
}

void write_archive_file(const std::string& path, const EncodedStream& stream)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(path + ": " + std::strerror(errno));
    write_archive(out, stream);
}

EncodedStream read_archive_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path + ": " + std::strerror(errno));
    return read_archive(in);
}

} // namespace fibcode
