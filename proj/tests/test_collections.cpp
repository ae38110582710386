#include "fibcode/collections.hpp"
#include "fibcode/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <sstream>

using namespace fibcode;

TEST_CASE("presets have the documented ranges")
{
    const auto presets = collection_presets();
    REQUIRE(presets.size() == 10);
    struct Expected {
        const char* name;
        std::uint64_t lo;
        std::uint64_t hi;
    };
    const Expected expected[] = {
        {"SEQ_ALL", 1, 4194304},
        {"SEQ_VerySmall", 1, 255},
        {"SEQ_Small", 256, 65535},
        {"SEQ_Large", 65536, 16777215},
        {"SEQ_VeryLarge", 16777216, 4294967295},
        {"RAND_ALL", 1, 4294967295},
        {"RAND_VerySmall", 1, 255},
        {"RAND_Small", 256, 65535},
        {"RAND_Large", 65536, 16777215},
        {"RAND_VeryLarge", 16777216, 4294967295},
    };
    for (std::size_t i = 0; i < presets.size(); ++i) {
        CHECK(presets[i].name == expected[i].name);
        CHECK(presets[i].lo == expected[i].lo);
        CHECK(presets[i].hi == expected[i].hi);
        CHECK((presets[i].kind == CollectionKind::Seq) == (i < 5));
    }
    CHECK_THROWS_AS(preset_spec("SEQ_Huge"), DomainError);
}

TEST_CASE("generate examples")
{
    const auto all = generate(preset_spec("SEQ_ALL"));
    REQUIRE(all.size() == 4194304);
    for (std::size_t i = 0; i < all.size(); ++i) REQUIRE(all[i] == i + 1);

    const auto very_small = generate(preset_spec("RAND_VerySmall"));
    REQUIRE(very_small.size() == 4194304);
    CHECK(std::all_of(very_small.begin(), very_small.end(), [](auto v) { return v >= 1 && v <= 255; }));
    // Every value in such a small range should show up.
    CHECK(*std::min_element(very_small.begin(), very_small.end()) == 1);
    CHECK(*std::max_element(very_small.begin(), very_small.end()) == 255);

    CollectionSpec single{CollectionKind::Seq, 5, 5, 3, 0};
    CHECK(generate(single) == std::vector<std::uint64_t>{5, 5, 5});

    CHECK_THROWS_AS(generate(CollectionSpec{CollectionKind::Seq, 6, 5, 3, 0}), DomainError);
    CHECK_THROWS_AS(generate(CollectionSpec{CollectionKind::Rand, 0, 5, 3, 0}), DomainError);
    CHECK(generate(CollectionSpec{CollectionKind::Rand, 1, 9, 0, 0}).empty());
}

TEST_CASE("SEQ cycles the range in ascending order")
{
    const auto xs = generate(CollectionSpec{CollectionKind::Seq, 10, 13, 11, 0});
    CHECK(xs == std::vector<std::uint64_t>{10, 11, 12, 13, 10, 11, 12, 13, 10, 11, 12});
    const auto vs = generate(preset_spec("SEQ_VerySmall", 1000));
    for (std::size_t i = 0; i < vs.size(); ++i) REQUIRE(vs[i] == 1 + i % 255);
}

TEST_CASE("every preset stays in range and RAND is reproducible per seed")
{
    for (const auto& p : collection_presets()) {
        CAPTURE(p.name);
        const auto xs = generate(preset_spec(p.name, 1 << 14, 77));
        REQUIRE(xs.size() == 1u << 14);
        CHECK(std::all_of(xs.begin(), xs.end(), [&](auto v) { return v >= p.lo && v <= p.hi; }));
        if (p.kind == CollectionKind::Rand) {
            CHECK(generate(preset_spec(p.name, 1 << 14, 77)) == xs);
            CHECK(generate(preset_spec(p.name, 1 << 14, 78)) != xs);
        } else {
            const std::size_t cycle = static_cast<std::size_t>(std::min<std::uint64_t>(p.hi - p.lo + 1, xs.size()));
            for (std::size_t start = 0; start < xs.size(); start += cycle) {
                const auto end = xs.begin() + static_cast<std::ptrdiff_t>(std::min(xs.size(), start + cycle));
                CHECK(std::is_sorted(xs.begin() + static_cast<std::ptrdiff_t>(start), end));
            }
        }
    }
}

TEST_CASE("RAND draws cover a full 32-bit range without obvious bias")
{
    const auto xs = generate(preset_spec("RAND_ALL", 1 << 16, 3));
    std::size_t high = 0;
    for (auto v : xs) high += v > 2147483648ull ? 1 : 0;
    // Binomial(65536, 1/2) has sd 128; allow 6 sd.
    CHECK(high > 32768 - 768);
    CHECK(high < 32768 + 768);
}

TEST_CASE("raw format layout and round trip")
{
    std::ostringstream out;
    const std::vector<std::uint64_t> xs{1, 0x0102030405060708ull};
    write_raw(out, xs);
    const std::string bytes = out.str();
    REQUIRE(bytes.size() == 24);
    CHECK(bytes[0] == 2);
    CHECK(bytes.substr(1, 7) == std::string(7, '\0'));
    CHECK(bytes[8] == 1);
    CHECK(bytes[16] == 8);
    CHECK(bytes[23] == 1);

    std::istringstream in(bytes);
    CHECK(read_raw(in) == xs);

    std::istringstream truncated(bytes.substr(0, 20));
    CHECK_THROWS_AS(read_raw(truncated), FormatError);
    std::istringstream trailing(bytes + "x");
    CHECK_THROWS_AS(read_raw(trailing), FormatError);
    std::istringstream empty("");
    CHECK_THROWS_AS(read_raw(empty), FormatError);

    CHECK_THROWS_AS(read_raw_file("/nonexistent/dir/file.raw"), IoError);
}
