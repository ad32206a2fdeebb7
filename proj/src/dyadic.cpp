#include "dnawords/dyadic.hpp"

#include "dnawords/errors.hpp"

#include <cmath>

namespace dnawords {

DyadicRational::DyadicRational(BigInt numerator, std::uint32_t exponent)
  : _num(std::move(numerator)), _exp(exponent)
{
    if (_num < 0)
        throw InvalidParameter("dyadic rationals are non-negative");
}

DyadicRational::DyadicRational(std::uint64_t value) : _num(value), _exp(0) {}

DyadicRational DyadicRational::canonical() const
{
    if (_num == 0)
        return DyadicRational();
    const auto tz = static_cast<std::uint32_t>(
        boost::multiprecision::lsb(_num));
    const std::uint32_t shift = tz < _exp ? tz : _exp;
    return DyadicRational(_num >> shift, _exp - shift);
}

BigInt DyadicRational::numerator_at(std::uint32_t e) const
{
    if (e < _exp)
        throw InvalidParameter("cannot lower the exponent of a dyadic value");
    return _num << (e - _exp);
}

DyadicRational &DyadicRational::operator+=(const DyadicRational &rhs)
{
    const std::uint32_t e = _exp > rhs._exp ? _exp : rhs._exp;
    _num = numerator_at(e) + rhs.numerator_at(e);
    _exp = e;
    return *this;
}

DyadicRational &DyadicRational::operator-=(const DyadicRational &rhs)
{
    const std::uint32_t e = _exp > rhs._exp ? _exp : rhs._exp;
    BigInt r = numerator_at(e) - rhs.numerator_at(e);
    if (r < 0)
        throw InvalidParameter("dyadic subtraction would go negative");
    _num = std::move(r);
    _exp = e;
    return *this;
}

DyadicRational &DyadicRational::operator*=(std::uint64_t scalar)
{
    _num *= scalar;
    return *this;
}

DyadicRational DyadicRational::half() const
{
    return DyadicRational(_num, _exp + 1);
}

int compare(const DyadicRational &a, const DyadicRational &b)
{
    const std::uint32_t e = a._exp > b._exp ? a._exp : b._exp;
    const BigInt x = a.numerator_at(e);
    const BigInt y = b.numerator_at(e);
    return x < y ? -1 : (x > y ? 1 : 0);
}

double DyadicRational::to_double() const
{
    return std::ldexp(_num.convert_to<double>(), -static_cast<int>(_exp));
}

std::string DyadicRational::to_string() const
{
    const DyadicRational c = canonical();
    if (c._exp == 0)
        return c._num.str();
    return c._num.str() + "/2^" + std::to_string(c._exp);
}

} // namespace dnawords
