#pragma once

#include <string>

namespace misbip
{
    /// Value rounded to `digits` significant decimal digits.
    auto round_significant(double x, int digits = 12) -> double;

    /// printf "%.<digits>g" of x.
    auto format_significant(long double x, int digits = 12) -> std::string;
}
