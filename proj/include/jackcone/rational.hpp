#ifndef JACKCONE_RATIONAL_HPP
#define JACKCONE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jackcone {

/// Exact rational scalar. GMP keeps every value canonical (reduced, positive
/// denominator) after each arithmetic operation.
using Rational = mpq_class;

/// num/den in lowest terms. The two-argument mpq_class constructor does not
/// reduce, and equality of unreduced values is unreliable.
inline Rational ratio(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p", "p/q", or a decimal string such as "-0.125" or "2.5e-3".
/// Decimals are converted exactly (base 10 to rational), never through a
/// binary float.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Exact conversion of a finite double (every double is a dyadic rational).
Rational from_double(double value);

double to_double(const Rational& value);

Rational rising_factorial(const Rational& base, int count);

}  // namespace jackcone

#endif  // JACKCONE_RATIONAL_HPP
