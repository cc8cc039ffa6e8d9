#ifndef OKBODY_RATIONAL_HPP
#define OKBODY_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

#include "okbody/error.hpp"

namespace okb {

// All arithmetic in this library is exact. GMP-backed rationals are kept in
// canonical form (reduced, positive denominator) by the backend.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Parses "p", "-p", or "p/q" (optional surrounding whitespace). Throws a
// Config error on malformed input or zero denominator.
Rat rat_parse(std::string_view text);

// Canonical form: "p" for integers, "p/q" with q > 1 otherwise.
std::string rat_to_string(const Rat& r);

// Decimal rendering with the given number of fractional digits, correctly
// rounded toward zero. Used only for human-facing report columns.
std::string rat_to_decimal(const Rat& r, int digits);

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Floor of a rational as an exact integer.
Int rat_floor(const Rat& r);

bool rat_is_integer(const Rat& r);

} // namespace okb

#endif
