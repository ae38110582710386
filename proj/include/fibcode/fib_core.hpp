#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fibcode {

namespace detail {

constexpr std::size_t count_fibonacci_u64()
{
    std::uint64_t prev = 1;
    std::uint64_t cur = 1;
    std::size_t n = 2;
    while (cur <= UINT64_MAX - prev) {
        const std::uint64_t next = prev + cur;
        prev = cur;
        cur = next;
        ++n;
    }
    return n;
}

} // namespace detail

/// Fibonacci numbers indexed so that F_0 = F_1 = 1, F_2 = 2, F_3 = 3, F_4 = 5.
/// Holds every such number that fits in 64 bits; F_i is 0 for negative i.
class FibTable {
public:
    static constexpr std::size_t kSize = detail::count_fibonacci_u64();
    /// Largest index present in the table.
    static constexpr int kMaxIndex = static_cast<int>(kSize) - 1;

    constexpr FibTable()
    {
        values_[0] = 1;
        values_[1] = 1;
        for (std::size_t i = 2; i < kSize; ++i) values_[i] = values_[i - 1] + values_[i - 2];
    }

    /// F_i for any i <= kMaxIndex (0 when i < 0). Indices past the table throw OverflowError.
    std::uint64_t at(int i) const;

    constexpr std::uint64_t operator[](int i) const noexcept { return i < 0 ? 0 : values_[static_cast<std::size_t>(i)]; }

    constexpr std::span<const std::uint64_t> values() const noexcept { return values_; }
    static constexpr std::size_t size() noexcept { return kSize; }

private:
    std::array<std::uint64_t, kSize> values_{};
};

inline constexpr FibTable kFib{};

static_assert(FibTable::kSize == 93);
static_assert(kFib[4] == 5 && kFib[-1] == 0);

/// A Fibonacci codeword: value bits a_1..a_p in stream order, plus whether the
/// trailing 1-bit terminator is logically present.
struct FibCode {
    std::vector<bool> bits;
    bool terminated = false;

    /// Number of bits the code occupies in a stream.
    std::size_t emitted_length() const noexcept { return bits.size() + (terminated ? 1 : 0); }

    /// Stream-order string of '0'/'1', terminator included when set ("1011" for 4).
    std::string to_string() const;

    friend bool operator==(const FibCode&, const FibCode&) = default;
};

/// Index of the largest F_i <= n (i >= 1). Requires n >= 1.
int largest_index_at_most(std::uint64_t n);

/// Zeckendorf representation of n, greedy from the largest F_i <= n. Unterminated.
/// Throws DomainError for n == 0.
FibCode zeckendorf(std::uint64_t n);

/// zeckendorf(n) with the terminator set.
FibCode encode_number(std::uint64_t n);

/// Value of the bit string under offset k: sum of a_i * F_{i-k}.
/// Throws OverflowError if the sum leaves 64 bits or touches an index past the table.
std::uint64_t value(const std::vector<bool>& bits, int offset = 0);

/// Value of F(n) >>_F k, i.e. the Zeckendorf bits of n evaluated at offset k.
std::uint64_t shift_right_value(std::uint64_t n, int k);

/// Value of F(n) <<_F k via F_k * n + F_{k-1} * first_shifted, where
/// first_shifted = shift_right_value(n, 1). n == 0 with first_shifted == 0 is the
/// empty code and yields 0 for every valid k.
inline std::uint64_t shift_left_value(std::uint64_t n, std::uint64_t first_shifted, int k);

/// Value of F(n) <<_F k computed by prepending k zeros and summing a_i * F_{k+i}.
/// Exists to check shift_left_value independently.
std::uint64_t shift_left_value_brute(std::uint64_t n, int k);

namespace detail {
[[noreturn]] void throw_shift_overflow(std::uint64_t n, int k);
} // namespace detail

inline std::uint64_t shift_left_value(std::uint64_t n, std::uint64_t first_shifted, int k)
{
    if (k < 0 || k > FibTable::kMaxIndex) [[unlikely]]
        detail::throw_shift_overflow(n, k);
    std::uint64_t scaled;
    std::uint64_t carried;
    std::uint64_t total;
    if (__builtin_mul_overflow(kFib[k], n, &scaled) || __builtin_mul_overflow(kFib[k - 1], first_shifted, &carried) ||
        __builtin_add_overflow(scaled, carried, &total)) [[unlikely]]
        detail::throw_shift_overflow(n, k);
    return total;
}

} // namespace fibcode
