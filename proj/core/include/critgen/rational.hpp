#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace critgen {

/// Arbitrary-precision integer and rational scalars used by all exact paths.
using Int = mpz_class;
using Rat = mpq_class;

/// 2^e as an exact integer.
Int pow2(unsigned e);

/// base^e for small nonnegative e.
Int ipow(const Int& base, unsigned e);
Rat rpow(const Rat& base, unsigned e);

/// Canonical "num/den" form, denominator always printed ("3/1", "-7/2").
std::string rat_to_string(const Rat& q);

/// Accepts "num/den" or a bare integer "num". Throws std::invalid_argument
/// on malformed input or a zero denominator.
Rat rat_from_string(std::string_view text);

double to_double(const Rat& q);

/// Rational from a double; exact (doubles are dyadic rationals).
Rat rat_from_double(double x);

inline int sign(const Rat& q) { return sgn(q); }
inline Rat abs_rat(const Rat& q) { return q < 0 ? Rat(-q) : q; }

/// floor(sqrt(n)) for n >= 0.
Int isqrt_floor(const Int& n);

/// Largest rational r = p/2^bits with r*r <= q (q >= 0). The matching
/// ceil version returns the smallest such r with r*r >= q.
Rat sqrt_lower(const Rat& q, unsigned bits);
Rat sqrt_upper(const Rat& q, unsigned bits);

}  // namespace critgen
