#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace dgpoly {

// Exact rationals. mpq_class keeps values canonical (lowest terms, positive
// denominator) as long as every constructed value goes through canonicalize().
using Scalar = mpq_class;

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses "a" or "a/b" with optional leading sign. No decimals, no spaces.
Scalar parse_scalar(std::string_view text);

/// Fraction string: "-3/2", "4", "0".
std::string to_string(const Scalar& s);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

}  // namespace dgpoly
