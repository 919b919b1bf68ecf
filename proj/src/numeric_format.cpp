#include "misbip/numeric_format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace misbip
{
    auto round_significant(double x, int digits) -> double
    {
        if (! std::isfinite(x) || x == 0)
            return x;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*g", digits, x);
        return std::strtod(buf, nullptr);
    }

    auto format_significant(long double x, int digits) -> std::string
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*Lg", digits, x);
        return buf;
    }
}
