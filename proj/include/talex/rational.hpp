#ifndef TALEX_RATIONAL_HPP
#define TALEX_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace talex {

// Exact rationals. GMP keeps them in lowest terms with a positive
// denominator once canonicalized, which is exactly the normal form the
// rest of the library relies on for equality checks.
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" (q > 0 after canonicalization). Rejects
// anything else, including floats and empty strings.
Rational parse_rational(const std::string& text);

// "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& value);

}  // namespace talex

#endif
