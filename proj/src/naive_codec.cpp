#include "fibcode/naive_codec.hpp"

#include "fibcode/error.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace fibcode {

void append_number(BitWriter& writer, std::uint64_t n)
{
    const int top = largest_index_at_most(n);
    std::array<bool, FibTable::kSize> bits{};
    std::uint64_t rest = n;
    for (int i = top; i >= 1 && rest != 0; --i) {
        if (kFib[i] <= rest) {
            bits[static_cast<std::size_t>(i)] = true;
            rest -= kFib[i];
            --i;
        }
    }
    for (int i = 1; i <= top; ++i) writer.put(bits[static_cast<std::size_t>(i)]);
    writer.put(true);
}

EncodedStream encode_stream(std::span<const std::uint64_t> numbers)
{
    BitWriter writer;
    for (std::uint64_t n : numbers) append_number(writer, n);
    EncodedStream out;
    out.bit_length = writer.bit_length();
    out.bytes = writer.release();
    out.count = numbers.size();
    return out;
}

std::vector<std::uint64_t> decode_naive(std::span<const std::uint8_t> bytes, std::uint64_t bit_length,
                                        std::uint64_t count)
{
    BitReader reader(bytes, bit_length);
    std::vector<std::uint64_t> out;
    // Every code takes at least two bits, so a forged count cannot force a huge allocation.
    out.reserve(static_cast<std::size_t>(std::min(count, bit_length / 2)));

    std::uint64_t sum = 0;
    std::uint64_t index = 1;
    bool prev_one = false;
    while (out.size() < count) {
        if (reader.at_end())
            throw TruncationError("stream ended after " + std::to_string(out.size()) + " of " +
                                  std::to_string(count) + " numbers");
        if (reader.read_bit()) {
            if (prev_one) {
                out.push_back(sum);
                sum = 0;
                index = 1;
                prev_one = false;
                continue;
            }
            if (index >= FibTable::kSize || __builtin_add_overflow(sum, kFib[static_cast<int>(index)], &sum)) [[unlikely]]
                throw OverflowError("code at bit " + std::to_string(reader.cursor() - 1) +
                                    " does not fit in 64 bits");
            prev_one = true;
        } else {
            prev_one = false;
        }
        ++index;
    }
    return out;
}

} // namespace fibcode
