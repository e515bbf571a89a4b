#pragma once

#include <gmpxx.h>

#include <string>

namespace pencil {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p", "p/q"; result is canonical. Throws InputError.
Rational parse_rational(const std::string& text);
// Canonical "p/q" (or "p" when q = 1).
std::string format_rational(const Rational& q);

}  // namespace pencil
