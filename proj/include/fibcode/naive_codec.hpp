#pragma once

#include "fibcode/bitstream.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace fibcode {

/// A concatenation of Fibonacci codes, LSB-first, with the final byte zero-padded.
struct EncodedStream {
    std::vector<std::uint8_t> bytes;
    std::uint64_t bit_length = 0;
    std::uint64_t count = 0;

    friend bool operator==(const EncodedStream&, const EncodedStream&) = default;
};

/// Appends F(n) to the writer. Throws DomainError for n == 0.
void append_number(BitWriter& writer, std::uint64_t n);

/// Encodes every number in order. Throws DomainError if any is zero.
EncodedStream encode_stream(std::span<const std::uint64_t> numbers);

/// Reference decoder: walks the stream one bit at a time, adding F_i for each
/// 1-bit and closing a number on two consecutive 1-bits. Stops after `count`
/// numbers; bits after that are never looked at.
/// Throws TruncationError if the stream runs out first, OverflowError on a
/// code whose value does not fit in 64 bits.
std::vector<std::uint64_t> decode_naive(std::span<const std::uint8_t> bytes, std::uint64_t bit_length,
                                        std::uint64_t count);

inline std::vector<std::uint64_t> decode_naive(const EncodedStream& stream)
{
    return decode_naive(stream.bytes, stream.bit_length, stream.count);
}

} // namespace fibcode
