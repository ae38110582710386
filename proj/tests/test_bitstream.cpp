#include "fibcode/bitstream.hpp"

#include <doctest.h>

#include <random>

using namespace fibcode;

TEST_CASE("write_code packs bits LSB-first")
{
    BitWriter w;
    w.write_code(encode_number(4));
    w.write_code(encode_number(7));
    REQUIRE(w.bit_length() == 9);
    REQUIRE(w.bytes().size() == 2);
    CHECK(w.bytes()[0] == 173);
    CHECK(w.bytes()[1] == 1); // ninth bit (terminator of 7) lands in bit 0 of the next byte

    BitWriter ones;
    for (int i = 0; i < 4; ++i) ones.write_code(encode_number(1));
    REQUIRE(ones.bytes().size() == 1);
    CHECK(ones.bytes()[0] == 255);

    BitWriter empty;
    CHECK(empty.bytes().empty());
    CHECK(empty.bit_length() == 0);
}

TEST_CASE("BitReader reads stream order and stops at the declared length")
{
    const std::uint8_t byte[] = {173};
    BitReader r(byte);
    CHECK(r.read_bit() == true);
    CHECK(r.read_bit() == false);

    const std::uint8_t zero[] = {0};
    BitReader z(zero);
    CHECK(z.read_bit() == false);

    BitReader short_reader(byte, 3);
    short_reader.read_bit();
    short_reader.read_bit();
    short_reader.read_bit();
    CHECK(short_reader.at_end());
    CHECK_THROWS_AS(short_reader.read_bit(), TruncationError);

    CHECK_THROWS_AS(BitReader(byte, 9), FormatError);
}

TEST_CASE("segments")
{
    const std::vector<std::uint8_t> bytes{173, 165};
    CHECK(segments(bytes) == std::vector<std::uint8_t>{173, 165});
    CHECK(segments(std::span<const std::uint8_t>{}).empty());
    const std::vector<std::uint8_t> ff{0xFF};
    CHECK(segments(ff) == std::vector<std::uint8_t>{255});
}

TEST_CASE("logical segmenter")
{
    const std::vector<std::uint8_t> bytes{173, 165, 6};
    CHECK(segments(bytes, 24, 8) == std::vector<std::uint16_t>{173, 165, 6});
    CHECK(segments(bytes, 24, 16) == std::vector<std::uint16_t>{static_cast<std::uint16_t>(173 | (165 << 8)), 6});
    // 173 in stream order is 1,0,1,1,0,1,0,1: nibbles 1+4+8 and 2+8
    CHECK(segments(bytes, 8, 4) == std::vector<std::uint16_t>{13, 10});
    // Declared length cuts the tail; last segment zero-padded.
    CHECK(segments(bytes, 10, 4) == std::vector<std::uint16_t>{13, 10, 1});
    CHECK_THROWS_AS(segments(bytes, 24, 0), ConfigError);
    CHECK_THROWS_AS(segments(bytes, 24, 17), ConfigError);
}

TEST_CASE("write/read round trip and byte-value identity")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = rng() % 300;
        std::vector<bool> bits(n);
        for (std::size_t i = 0; i < n; ++i) bits[i] = rng() & 1u;
        BitWriter w;
        for (bool b : bits) w.put(b);
        REQUIRE(w.bit_length() == n);
        REQUIRE(w.bytes().size() == (n + 7) / 8);
        for (std::size_t byte = 0; byte < w.bytes().size(); ++byte) {
            unsigned expected = 0;
            for (std::size_t j = 0; j < 8 && byte * 8 + j < n; ++j) expected += bits[byte * 8 + j] ? (1u << j) : 0u;
            REQUIRE(w.bytes()[byte] == expected);
        }
        BitReader r(w.bytes(), w.bit_length());
        for (std::size_t i = 0; i < n; ++i) REQUIRE(r.read_bit() == bits[i]);
        REQUIRE(r.at_end());
    }
}
