#ifndef PMRAMSEY_INT_MATH_HH
#define PMRAMSEY_INT_MATH_HH

#include <cassert>
#include <cstdint>

namespace pmramsey {

/// Floor of a / b for b > 0, correct for negative a.
constexpr auto floor_div(std::int64_t a, std::int64_t b) -> std::int64_t
{
    assert(b > 0);
    return a / b - ((a % b != 0) && (a < 0));
}

/// Ceiling of a / b for b > 0, correct for negative a.
constexpr auto ceil_div(std::int64_t a, std::int64_t b) -> std::int64_t
{
    assert(b > 0);
    return a / b + ((a % b != 0) && (a > 0));
}

/// Largest s with s * s <= m.
constexpr auto isqrt(std::uint64_t m) -> std::uint64_t
{
    if (m < 2)
        return m;
    std::uint64_t x = m, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + m / x) / 2;
    }
    return x;
}

/// binom(n, 2); zero for n < 2.
constexpr auto choose2(std::int64_t n) -> std::int64_t
{
    return n < 2 ? 0 : n * (n - 1) / 2;
}

constexpr auto binomial(std::int64_t n, std::int64_t k) -> std::int64_t
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    std::int64_t result = 1;
    for (std::int64_t i = 1; i <= k; ++i)
        result = result * (n - k + i) / i;
    return result;
}

} // namespace pmramsey

#endif
