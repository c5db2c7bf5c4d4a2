#ifndef INDSAT_ERRORS_HH
#define INDSAT_ERRORS_HH

#include <stdexcept>
#include <string>

namespace indsat
{
    /// Precondition violated by a caller-supplied argument (bad vertex, bad parameter).
    class InvalidArgument : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Malformed graph6 / trigraph / pattern text.
    class ParseError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// A size guard (order, gray count, search budget) would be exceeded.
    class GuardExceeded : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}

#endif
