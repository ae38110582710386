#include "fibcode/fast_decoder.hpp"

#include "fibcode/bitstream.hpp"

#include <algorithm>

namespace fibcode {

namespace detail {

void throw_value_overflow()
{
    throw OverflowError("decoded value leaves the 64-bit range");
}

void throw_partial_too_long(std::uint64_t shift)
{
    throw OverflowError("pending code is " + std::to_string(shift) + " bits long, past the 64-bit Fibonacci table");
}

} // namespace detail

MapRecord build_record(const std::vector<bool>& segment_bits)
{
    if (segment_bits.empty() || segment_bits.size() > MappingTables::kMaxSegmentSize)
        throw ConfigError("segment must hold 1.." + std::to_string(MappingTables::kMaxSegmentSize) + " bits");

    MapRecord rec;
    std::uint64_t sum = 0;
    int index = 1;
    bool prev_one = false;
    unsigned pending = 0; // bits read since the last terminator
    for (bool bit : segment_bits) {
        ++pending;
        if (bit && prev_one) {
            rec.numbers[rec.count++] = sum;
            sum = 0;
            index = 1;
            prev_one = false;
            pending = 0;
            continue;
        }
        if (bit) sum += kFib[index];
        prev_one = bit;
        ++index;
    }
    if (pending != 0) {
        rec.numbers[rec.count++] = sum;
        rec.shift = static_cast<std::uint8_t>(pending);
    }
    rec.start_with_zero = !segment_bits.front();
    rec.end_with_zero = !segment_bits.back();
    rec.first_shifted = rec.numbers[0] == 0 ? 0 : shift_right_value(rec.numbers[0], 1);
    return rec;
}

std::string format_record(const MapRecord& record)
{
    std::string s = "{" + std::to_string(record.count) + ",(";
    for (std::size_t i = 0; i < record.count; ++i) {
        if (i != 0) s += ',';
        s += std::to_string(record.numbers[i]);
    }
    s += ")," + std::to_string(record.shift) + ',';
    s += record.end_with_zero ? "True" : "False";
    s += ',';
    s += record.start_with_zero ? "True" : "False";
    s += '}';
    return s;
}

namespace {

std::vector<bool> low_bits(std::size_t value, unsigned from, unsigned to)
{
    std::vector<bool> bits;
    bits.reserve(to - from);
    for (unsigned j = from; j < to; ++j) bits.push_back((value >> j) & 1u);
    return bits;
}

} // namespace

MappingTables::MappingTables(unsigned segment_size) : segment_size_(segment_size)
{
    if (segment_size < kMinSegmentSize || segment_size > kMaxSegmentSize)
        throw ConfigError("segment size must be in " + std::to_string(kMinSegmentSize) + ".." +
                          std::to_string(kMaxSegmentSize) + ", got " + std::to_string(segment_size));

    const std::size_t n = std::size_t{1} << segment_size;
    map1_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) map1_.push_back(build_record(low_bits(i, 0, segment_size)));

    map2_odd_.reserve(n / 2);
    for (std::size_t i = 1; i < n; i += 2) {
        MapRecord rec = build_record(low_bits(i, 1, segment_size));
        rec.start_with_zero = false;
        map2_odd_.push_back(rec);
    }

    map2_.resize(n);
    for (std::size_t i = 0; i < n; ++i) map2_[i] = (i & 1u) ? &map2_odd_[i / 2] : &map1_[i];
}

const MapRecord& MappingTables::lookup(int which, std::size_t index) const
{
    if (which != 1 && which != 2) throw ConfigError("mapping table must be 1 or 2, got " + std::to_string(which));
    if (index >= size())
        throw ConfigError("record index " + std::to_string(index) + " out of range 0.." + std::to_string(size() - 1));
    return which == 1 ? map1(index) : map2(index);
}

namespace {

template <typename Segment>
std::vector<std::uint64_t> decode_segments(std::span<const Segment> segs, std::uint64_t count,
                                           const MappingTables& tables)
{
    // At most floor(bits / 2) codes fit in the input.
    const std::uint64_t capacity = static_cast<std::uint64_t>(segs.size()) * tables.segment_size() / 2;
    if (count > capacity)
        throw TruncationError(std::to_string(count) + " numbers cannot fit in " + std::to_string(segs.size()) +
                              " segments");

    std::vector<std::uint64_t> out(static_cast<std::size_t>(count) + kOutputSlack);
    std::uint64_t* const goal = out.data() + count;
    std::uint64_t* cursor = out.data();
    DecoderState state;
    for (const Segment seg : segs) {
        if (cursor >= goal) break;
        cursor = decode_segment(state, tables, seg, cursor);
    }
    if (cursor < goal)
        throw TruncationError("stream ended after " + std::to_string(cursor - out.data()) + " of " +
                              std::to_string(count) + " numbers");
    out.resize(static_cast<std::size_t>(count));
    return out;
}

} // namespace

std::vector<std::uint64_t> decode_fast(std::span<const std::uint8_t> segments, std::uint64_t count,
                                       const MappingTables& tables)
{
    if (tables.segment_size() != 8)
        throw ConfigError("byte segments need 8-bit tables, got " + std::to_string(tables.segment_size()));
    return decode_segments(segments, count, tables);
}

std::vector<std::uint64_t> decode_fast(std::span<const std::uint16_t> segments, std::uint64_t count,
                                       const MappingTables& tables)
{
    const auto too_wide = std::find_if(segments.begin(), segments.end(), [&](std::uint16_t s) {
        return (static_cast<std::size_t>(s) >> tables.segment_size()) != 0;
    });
    if (too_wide != segments.end())
        throw ConfigError("segment value " + std::to_string(*too_wide) + " wider than " +
                          std::to_string(tables.segment_size()) + " bits");
    return decode_segments(segments, count, tables);
}

std::vector<std::uint64_t> decode_fast(const EncodedStream& stream, const MappingTables& tables)
{
    if (tables.segment_size() == 8) {
        if (stream.bit_length > stream.bytes.size() * 8)
            throw FormatError("declared bit length exceeds the payload");
        return decode_fast(std::span<const std::uint8_t>(stream.bytes), stream.count, tables);
    }
    const auto segs = segments(stream.bytes, stream.bit_length, tables.segment_size());
    return decode_fast(std::span<const std::uint16_t>(segs), stream.count, tables);
}

} // namespace fibcode
