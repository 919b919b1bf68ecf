#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <string>
#include <utility>

namespace misbip
{
    using BigInt = boost::multiprecision::cpp_int;
    using Rational = boost::multiprecision::cpp_rational;

    /// Product of base^exponent over the factors; negative exponents go to the denominator.
    auto power_product(std::initializer_list<std::pair<long, long>> factors) -> Rational;

    auto pow_int(long base, unsigned long exponent) -> BigInt;

    /// Natural logarithm of a positive integer or rational, without overflowing long double.
    auto ln(const BigInt &x) -> long double;
    auto ln(const Rational &x) -> long double;

    auto to_long_double(const Rational &x) -> long double;

    /// "p/q" or "p" when q = 1.
    auto to_string(const Rational &x) -> std::string;
}
