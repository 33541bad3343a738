#pragma once

#include <gmpxx.h>
#include <string>

namespace padcam {

using Int = mpz_class;
using Rat = mpq_class;

/// Parses "a" or "a/b" (base 10, optional leading -). Canonicalizes.
Rat parse_rational(const std::string& s);

/// Parses a truncated p-adic literal "d0.d1.d2...;e" meaning sum d_j p^(e+j).
Rat parse_padic_literal(const std::string& s, const Int& p);

/// Accepts either rational or p-adic literal syntax.
Rat parse_number(const std::string& s, const Int& p);

std::string rat_str(const Rat& x);

/// True iff x is the square of a rational (x >= 0, numerator and
/// denominator perfect squares).
bool is_rational_square(const Rat& x);

/// Nonnegative exact square root; requires is_rational_square(x).
Rat rational_sqrt(const Rat& x);

Rat pow_int(const Rat& base, long e);

} // namespace padcam
