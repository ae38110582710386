#include "fibcode/bitstream.hpp"

#include <string>

namespace fibcode {

void BitWriter::write_code(const FibCode& code)
{
    for (bool b : code.bits) put(b);
    if (code.terminated) put(true);
}

BitReader::BitReader(std::span<const std::uint8_t> buffer, std::uint64_t bit_length)
    : buffer_(buffer), bit_length_(bit_length)
{
    if (bit_length > buffer.size() * 8)
        throw FormatError("declared bit length " + std::to_string(bit_length) + " exceeds " +
                          std::to_string(buffer.size()) + " bytes");
}

void BitReader::throw_end_of_stream() const
{
    throw TruncationError("bit stream exhausted at bit " + std::to_string(cursor_));
}

std::vector<std::uint8_t> segments(std::span<const std::uint8_t> bytes)
{
    return {bytes.begin(), bytes.end()};
}

std::vector<std::uint16_t> segments(std::span<const std::uint8_t> bytes, std::uint64_t bit_length, unsigned size)
{
    if (size < 1 || size > 16) throw ConfigError("segment size must be in 1..16, got " + std::to_string(size));
    BitReader reader(bytes, bit_length);
    std::vector<std::uint16_t> out;
    out.reserve(static_cast<std::size_t>((bit_length + size - 1) / size));
    while (!reader.at_end()) {
        unsigned seg = 0;
        for (unsigned j = 0; j < size && !reader.at_end(); ++j)
            if (reader.read_bit()) seg |= 1u << j;
        out.push_back(static_cast<std::uint16_t>(seg));
    }
    return out;
}

} // namespace fibcode
