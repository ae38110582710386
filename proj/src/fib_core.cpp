#include "fibcode/fib_core.hpp"

#include "fibcode/error.hpp"

#include <algorithm>

namespace fibcode {

namespace detail {

void throw_shift_overflow(std::uint64_t n, int k)
{
    throw OverflowError("Fibonacci shift of " + std::to_string(n) + " by " + std::to_string(k) +
                        " leaves the 64-bit range");
}

} // namespace detail

namespace {

std::uint64_t checked_fib(int i)
{
    if (i > FibTable::kMaxIndex)
        throw OverflowError("Fibonacci index " + std::to_string(i) + " is past the 64-bit table");
    return kFib[i];
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("code value leaves the 64-bit range");
    return r;
}

} // namespace

std::uint64_t FibTable::at(int i) const
{
    return checked_fib(i);
}

std::string FibCode::to_string() const
{
    std::string s;
    s.reserve(emitted_length());
    for (bool b : bits) s.push_back(b ? '1' : '0');
    if (terminated) s.push_back('1');
    return s;
}

int largest_index_at_most(std::uint64_t n)
{
    if (n == 0) throw DomainError("zero not encodable");
    const auto fibs = kFib.values();
    // First entry strictly greater than n; F_0 and F_1 are both 1, search from F_1.
    const auto it = std::upper_bound(fibs.begin() + 1, fibs.end(), n);
    return static_cast<int>(it - fibs.begin()) - 1;
}

FibCode zeckendorf(std::uint64_t n)
{
    const int top = largest_index_at_most(n);
    FibCode code;
    code.bits.assign(static_cast<std::size_t>(top), false);
    std::uint64_t rest = n;
    for (int i = top; i >= 1 && rest != 0; --i) {
        if (kFib[i] <= rest) {
            code.bits[static_cast<std::size_t>(i - 1)] = true;
            rest -= kFib[i];
            --i; // next index can never be used
        }
    }
    return code;
}

FibCode encode_number(std::uint64_t n)
{
    FibCode code = zeckendorf(n);
    code.terminated = true;
    return code;
}

std::uint64_t value(const std::vector<bool>& bits, int offset)
{
    std::uint64_t sum = 0;
    for (std::size_t pos = 0; pos < bits.size(); ++pos) {
        if (!bits[pos]) continue;
        const int idx = static_cast<int>(pos) + 1 - offset;
        if (idx < 0) continue;
        sum = checked_add(sum, checked_fib(idx));
    }
    return sum;
}

std::uint64_t shift_right_value(std::uint64_t n, int k)
{
    return value(zeckendorf(n).bits, k);
}

std::uint64_t shift_left_value_brute(std::uint64_t n, int k)
{
    std::vector<bool> shifted(static_cast<std::size_t>(k), false);
    const FibCode code = zeckendorf(n);
    shifted.insert(shifted.end(), code.bits.begin(), code.bits.end());
    return value(shifted, 0);
}

} // namespace fibcode
