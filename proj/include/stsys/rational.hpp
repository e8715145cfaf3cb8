#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stsys {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input, out-of-range degree, wrong vector length.
class InputError : public Error {
public:
    using Error::Error;
};

/// A mathematical hypothesis required by an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Parses "a", "-a", "a/b" or a finite decimal such as "0.25".
Rational parse_rational(std::string_view text);

/// Exact "a/b" (or "a" when the denominator is 1).
std::string to_string(const Rational& q);

/// Decimal approximation with the given number of significant digits.
std::string to_decimal(const Rational& q, int digits = 12);

/// Comma separated list of rationals, e.g. "1,-1/2,3".
std::vector<Rational> parse_rational_list(std::string_view text);

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// q^e for a signed exponent (q must be nonzero when e < 0).
Rational pow(const Rational& q, int e);

inline bool is_integer(const Rational& q)
{
    return boost::multiprecision::denominator(q) == 1;
}

}  // namespace stsys
