#include "misbip/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace misbip
{
    auto pow_int(long base, unsigned long exponent) -> BigInt
    {
        BigInt result = 1, b = base;
        while (exponent > 0) {
            if (exponent & 1U)
                result *= b;
            b *= b;
            exponent >>= 1U;
        }
        return result;
    }

    auto power_product(std::initializer_list<std::pair<long, long>> factors) -> Rational
    {
        BigInt num = 1, den = 1;
        for (auto [base, exponent] : factors) {
            if (exponent >= 0)
                num *= pow_int(base, static_cast<unsigned long>(exponent));
            else
                den *= pow_int(base, static_cast<unsigned long>(-exponent));
        }
        return Rational{num, den};
    }

    auto ln(const BigInt &x) -> long double
    {
        if (x <= 0)
            throw std::domain_error{"ln of a non-positive integer"};
        auto top = boost::multiprecision::msb(x);
        unsigned shift = top > 60 ? static_cast<unsigned>(top - 60) : 0U;
        BigInt head = x >> shift;
        return std::log(head.convert_to<long double>()) + shift * std::log(2.0L);
    }

    auto ln(const Rational &x) -> long double
    {
        return ln(boost::multiprecision::numerator(x)) - ln(boost::multiprecision::denominator(x));
    }

    auto to_long_double(const Rational &x) -> long double
    {
        if (x == 0)
            return 0.0L;
        long double magnitude = std::exp(ln(x < 0 ? Rational{-x} : x));
        return x < 0 ? -magnitude : magnitude;
    }

    auto to_string(const Rational &x) -> std::string
    {
        auto den = boost::multiprecision::denominator(x);
        auto num = boost::multiprecision::numerator(x).str();
        return den == 1 ? num : num + "/" + den.str();
    }
}
