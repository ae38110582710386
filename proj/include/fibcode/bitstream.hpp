#pragma once

#include "fibcode/error.hpp"
#include "fibcode/fib_core.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace fibcode {

// Stream bit j lives in byte j / 8 at weight 2^(j % 8): the first bit of the
// stream is the least-significant bit of the first byte.

class BitWriter {
public:
    void put(bool bit)
    {
        if ((bit_length_ & 7) == 0) buffer_.push_back(0);
        if (bit) buffer_.back() = static_cast<std::uint8_t>(buffer_.back() | (1u << (bit_length_ & 7)));
        ++bit_length_;
    }

    /// Appends the code's value bits then, if terminated, the closing 1-bit.
    void write_code(const FibCode& code);

    const std::vector<std::uint8_t>& bytes() const noexcept { return buffer_; }
    std::vector<std::uint8_t> release() noexcept { return std::move(buffer_); }
    std::uint64_t bit_length() const noexcept { return bit_length_; }

private:
    std::vector<std::uint8_t> buffer_;
    std::uint64_t bit_length_ = 0;
};

class BitReader {
public:
    /// Reads at most bit_length bits; bit_length may not exceed the buffer.
    BitReader(std::span<const std::uint8_t> buffer, std::uint64_t bit_length);
    explicit BitReader(std::span<const std::uint8_t> buffer) : BitReader(buffer, buffer.size() * 8) {}

    bool read_bit()
    {
        if (cursor_ >= bit_length_) [[unlikely]]
            throw_end_of_stream();
        const bool bit = (buffer_[cursor_ >> 3] >> (cursor_ & 7)) & 1u;
        ++cursor_;
        return bit;
    }

    bool at_end() const noexcept { return cursor_ >= bit_length_; }
    std::uint64_t cursor() const noexcept { return cursor_; }
    std::uint64_t bit_length() const noexcept { return bit_length_; }

private:
    [[noreturn]] void throw_end_of_stream() const;

    std::span<const std::uint8_t> buffer_;
    std::uint64_t cursor_ = 0;
    std::uint64_t bit_length_ = 0;
};

/// Byte-sized segments: each byte is one segment value, in byte order.
std::vector<std::uint8_t> segments(std::span<const std::uint8_t> bytes);

/// Logical segmenter for other segment sizes: segment k holds stream bits
/// k*size .. k*size+size-1, first bit as its lowest bit. The last segment is
/// zero-padded. size must be in 1..16.
std::vector<std::uint16_t> segments(std::span<const std::uint8_t> bytes, std::uint64_t bit_length, unsigned size);

} // namespace fibcode
