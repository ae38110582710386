#pragma once

#include "fibcode/error.hpp"
#include "fibcode/fib_core.hpp"
#include "fibcode/naive_codec.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace fibcode {

/// Precomputed decoding of one segment.
///
/// `numbers` holds every code completed inside the segment and, when the
/// segment ends inside a code, that partial code's value at offset 0 as the
/// last entry. `shift` is the partial's bit length (0 when the segment ends on
/// a terminator). `first_shifted` caches shift_right_value(numbers[0], 1) so a
/// pending partial can be completed with two multiplications.
struct MapRecord {
    static constexpr std::size_t kMaxNumbers = 8; // ceil(16 / 2)

    std::array<std::uint64_t, kMaxNumbers> numbers{};
    std::uint64_t first_shifted = 0;
    std::uint8_t count = 0;
    std::uint8_t shift = 0;
    bool end_with_zero = false;
    bool start_with_zero = false;

    std::span<const std::uint64_t> values() const noexcept { return {numbers.data(), count}; }

    friend bool operator==(const MapRecord&, const MapRecord&) = default;
};

/// Decodes exactly the given bits with the bit-by-bit rules. Any 1..16 bits.
MapRecord build_record(const std::vector<bool>& segment_bits);

/// "{count,(n1,n2,..),shift,EndWithZero,StartWithZero}", flags as True/False.
std::string format_record(const MapRecord& record);

/// MAP1 and MAP2 for one segment size. MAP1[i] decodes all bits of i; odd
/// MAP2[i] decode i without its lowest (first) bit, which closed the previous
/// segment's pending code; even MAP2 entries point at MAP1.
///
/// Not copyable: MAP2 holds pointers into MAP1. Moves keep them valid.
class MappingTables {
public:
    static constexpr unsigned kMinSegmentSize = 2;
    static constexpr unsigned kMaxSegmentSize = 16;

    /// Throws ConfigError unless 2 <= segment_size <= 16.
    explicit MappingTables(unsigned segment_size = 8);

    MappingTables(const MappingTables&) = delete;
    MappingTables& operator=(const MappingTables&) = delete;
    MappingTables(MappingTables&&) noexcept = default;
    MappingTables& operator=(MappingTables&&) noexcept = default;

    unsigned segment_size() const noexcept { return segment_size_; }
    std::size_t size() const noexcept { return map1_.size(); }

    const MapRecord& map1(std::size_t index) const noexcept { return map1_[index]; }
    const MapRecord& map2(std::size_t index) const noexcept { return *map2_[index]; }

    /// Bounds-checked access; which is 1 or 2. Throws ConfigError otherwise.
    const MapRecord& lookup(int which, std::size_t index) const;

private:
    unsigned segment_size_;
    std::vector<MapRecord> map1_;
    std::vector<MapRecord> map2_odd_;
    std::vector<const MapRecord*> map2_;
};

inline MappingTables build_tables(unsigned segment_size = 8)
{
    return MappingTables(segment_size);
}

inline const MapRecord& record_lookup(const MappingTables& tables, int which, std::size_t index)
{
    return tables.lookup(which, index);
}

/// Loop state carried between segments.
struct DecoderState {
    std::uint64_t shift = 0;       // bit length of the pending partial; 0 = none
    std::uint64_t last_number = 0; // value of the pending partial so far
    std::uint64_t emitted = 0;
    bool prev_end_with_zero = false;
};

namespace detail {
[[noreturn]] void throw_value_overflow();
[[noreturn]] void throw_partial_too_long(std::uint64_t shift);
} // namespace detail

/// Spare output slots decode_segment may scribble on past the numbers it emits.
inline constexpr std::size_t kOutputSlack = MapRecord::kMaxNumbers + 1;

/// Decodes one segment, writing completed numbers starting at `out`, which
/// must have kOutputSlack slots available. Returns one past the last number
/// emitted.
inline std::uint64_t* decode_segment(DecoderState& state, const MappingTables& tables, std::size_t segment,
                                     std::uint64_t* out)
{
    std::uint64_t* const start = out;
    const MapRecord* record;
    if (state.shift == 0 || state.prev_end_with_zero) {
        record = &tables.map1(segment);
    } else {
        record = &tables.map2(segment);
        if (!record->start_with_zero) {
            // The segment's first bit terminated the pending code.
            *out++ = state.last_number;
            state.shift = 0;
        }
    }

    // Numbers are copied in fixed-size blocks and the cursor advanced by the
    // real count; callers leave kOutputSlack spare slots past their goal.
    const std::size_t count = record->count;
    const std::uint64_t* nums = record->numbers.data();
    if (state.shift == 0) {
        std::memcpy(out, nums, sizeof record->numbers);
        out += count - (record->shift != 0 ? 1 : 0);
        state.last_number = nums[count - 1];
        state.shift = record->shift;
    } else {
        const std::uint64_t tail =
            shift_left_value(nums[0], record->first_shifted, static_cast<int>(state.shift));
        if (__builtin_add_overflow(state.last_number, tail, &state.last_number)) [[unlikely]]
            detail::throw_value_overflow();
        if (record->shift == 0) {
            *out++ = state.last_number;
            std::memcpy(out, nums + 1, sizeof record->numbers - sizeof *nums);
            out += count - 1;
            state.shift = 0;
        } else if (count == 1) {
            state.shift += record->shift;
            if (state.shift > static_cast<std::uint64_t>(FibTable::kMaxIndex)) [[unlikely]]
                detail::throw_partial_too_long(state.shift);
        } else {
            *out++ = state.last_number;
            std::memcpy(out, nums + 1, sizeof record->numbers - sizeof *nums);
            out += count - 2;
            state.last_number = nums[count - 1];
            state.shift = record->shift;
        }
    }
    state.prev_end_with_zero = record->end_with_zero;
    state.emitted += static_cast<std::uint64_t>(out - start);
    return out;
}

/// Table-driven decoder over byte segments; tables must use 8-bit segments.
/// Emits exactly `count` numbers. Throws TruncationError if the segments run
/// out first and OverflowError on codes that do not fit in 64 bits.
std::vector<std::uint64_t> decode_fast(std::span<const std::uint8_t> segments, std::uint64_t count,
                                       const MappingTables& tables);

/// Same over logical segments of tables.segment_size() bits each.
std::vector<std::uint64_t> decode_fast(std::span<const std::uint16_t> segments, std::uint64_t count,
                                       const MappingTables& tables);

/// Decodes an encoded stream, splitting it into segments of the tables' size.
std::vector<std::uint64_t> decode_fast(const EncodedStream& stream, const MappingTables& tables);

} // namespace fibcode
