#pragma once

#include <stdexcept>

namespace misbip
{
    /// A size guard on an exhaustive routine was exceeded.
    class GuardError : public std::length_error
    {
    public:
        using std::length_error::length_error;
    };

    /// Input does not satisfy an operation's structural precondition.
    class PreconditionError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };
}
