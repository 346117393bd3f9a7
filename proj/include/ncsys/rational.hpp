#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ncsys {

// Canonical arbitrary-precision rational: denominator > 0, reduced, zero is 0/1.
using Rational = mpq_class;

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input or q == 0.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

class ContextMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace ncsys
