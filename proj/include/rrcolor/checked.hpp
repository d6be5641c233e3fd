#pragma once

#include <cstdint>
#include <stdexcept>

namespace rrcolor {

/// Coefficient and count type. All arithmetic on it goes through the checked
/// helpers below so that an overflow aborts the computation instead of wrapping.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b)
{
    Int out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in addition");
    return out;
}

inline Int checked_sub(Int a, Int b)
{
    Int out;
    if (__builtin_sub_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in subtraction");
    return out;
}

inline Int checked_mul(Int a, Int b)
{
    Int out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in multiplication");
    return out;
}

/// Floor division for possibly negative numerators (C++ `/` truncates).
constexpr Int floor_div(Int a, Int b)
{
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

constexpr bool is_even(Int a) { return a % 2 == 0; }

constexpr bool same_parity(Int a, Int b) { return is_even(a) == is_even(b); }

}  // namespace rrcolor
