// dyadic.hpp -- exact non-negative rationals with power-of-two denominators

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace dnawords {

using BigInt = boost::multiprecision::cpp_int;

/// numerator / 2^exponent, exact. The representation is not kept
/// canonical; comparisons and equality are by value.
class DyadicRational
{
public:
    DyadicRational() = default;
    DyadicRational(BigInt numerator, std::uint32_t exponent);
    /// An integer value.
    DyadicRational(std::uint64_t value); // NOLINT: implicit on purpose

    const BigInt &numerator() const noexcept { return _num; }
    std::uint32_t exponent() const noexcept { return _exp; }

    /// Same value with odd numerator (or 0/2^0).
    DyadicRational canonical() const;

    /// Numerator when rewritten at exponent `e` (must be >= exponent()).
    BigInt numerator_at(std::uint32_t e) const;

    DyadicRational &operator+=(const DyadicRational &rhs);
    /// Throws InvalidParameter if the result would be negative.
    DyadicRational &operator-=(const DyadicRational &rhs);
    DyadicRational &operator*=(std::uint64_t scalar);

    friend DyadicRational operator+(DyadicRational a, const DyadicRational &b)
    {
        return a += b;
    }
    friend DyadicRational operator-(DyadicRational a, const DyadicRational &b)
    {
        return a -= b;
    }
    friend DyadicRational operator*(DyadicRational a, std::uint64_t s)
    {
        return a *= s;
    }

    /// Divide by two (exact).
    DyadicRational half() const;

    friend int compare(const DyadicRational &a, const DyadicRational &b);
    friend bool operator==(const DyadicRational &a, const DyadicRational &b)
    {
        return compare(a, b) == 0;
    }
    friend auto operator<=>(const DyadicRational &a, const DyadicRational &b)
    {
        return compare(a, b) <=> 0;
    }

    double to_double() const;
    /// "p/2^e" in canonical form, or just "p" for integers.
    std::string to_string() const;

private:
    BigInt _num = 0;
    std::uint32_t _exp = 0;
};

} // namespace dnawords
