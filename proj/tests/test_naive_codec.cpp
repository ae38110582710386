#include "fibcode/naive_codec.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace fibcode;

TEST_CASE("encode_stream examples")
{
    const std::vector<std::uint64_t> xs{4, 7, 86};
    const EncodedStream s = encode_stream(xs);
    CHECK(s.count == 3);
    CHECK(s.bit_length == 4 + 5 + 10);
    CHECK(s.bytes == std::vector<std::uint8_t>{173, 165, 6});

    const std::vector<std::uint64_t> one{1};
    const EncodedStream s1 = encode_stream(one);
    CHECK(s1.bytes == std::vector<std::uint8_t>{3});
    CHECK(s1.bit_length == 2);
    CHECK(s1.count == 1);

    const EncodedStream empty = encode_stream({});
    CHECK(empty.bytes.empty());
    CHECK(empty.count == 0);
    CHECK(empty.bit_length == 0);

    const std::vector<std::uint64_t> with_zero{3, 0, 2};
    CHECK_THROWS_AS(encode_stream(with_zero), DomainError);
}

TEST_CASE("append_number agrees with write_code(encode_number)")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t n = std::max<std::uint64_t>(1, rng() >> (rng() % 64));
        BitWriter a;
        BitWriter b;
        append_number(a, n);
        b.write_code(encode_number(n));
        REQUIRE(a.bytes() == b.bytes());
        REQUIRE(a.bit_length() == b.bit_length());
    }
}

TEST_CASE("decode_naive examples")
{
    const std::vector<std::uint8_t> bytes{173, 165, 6};
    CHECK(decode_naive(bytes, 24, 3) == std::vector<std::uint64_t>{4, 7, 86});

    std::vector<std::uint64_t> one_to_eight{1, 2, 3, 4, 5, 6, 7, 8};
    CHECK(decode_naive(encode_stream(one_to_eight)) == one_to_eight);

    CHECK(decode_naive({}, 0, 0).empty());
}

TEST_CASE("decode_naive errors")
{
    const std::vector<std::uint8_t> bytes{173, 165, 6};
    CHECK_THROWS_AS(decode_naive(bytes, 24, 4), TruncationError);
    // Declared length cuts 86 short.
    CHECK_THROWS_AS(decode_naive(bytes, 18, 3), TruncationError);
    CHECK_THROWS_AS(decode_naive(bytes, 25, 3), FormatError);

    // 94 zero bits then 11: the value bit lands past the 64-bit table.
    BitWriter w;
    for (int i = 0; i < 94; ++i) w.put(false);
    w.put(true);
    w.put(true);
    CHECK_THROWS_AS(decode_naive(w.bytes(), w.bit_length(), 1), OverflowError);
}

TEST_CASE("decoding ignores bits past the requested count")
{
    const std::vector<std::uint64_t> xs{9, 1, 123456789, 2};
    const EncodedStream s = encode_stream(xs);
    CHECK(decode_naive(s.bytes, s.bit_length, 2) == std::vector<std::uint64_t>{9, 1});
    // Garbage after the last code does not matter either.
    std::vector<std::uint8_t> bytes = s.bytes;
    bytes.push_back(0xFF);
    bytes.push_back(0x00);
    CHECK(decode_naive(bytes, bytes.size() * 8, 4) == xs);
}

TEST_CASE("decode_naive inverts encode_stream on random sequences")
{
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t len = rng() % 64;
        std::vector<std::uint64_t> xs(len);
        for (auto& x : xs) x = std::max<std::uint64_t>(1, rng() >> (rng() % 64));
        REQUIRE(decode_naive(encode_stream(xs)) == xs);
    }
}
