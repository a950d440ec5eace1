#pragma once

#include <gmpxx.h>

#include <string>

namespace mppa {

using Rational = mpq_class;

// "p" or "p/q" in lowest terms.
std::string to_string(const Rational& r);

// Accepts "p", "-p", "p/q". Throws ParseError otherwise.
Rational parse_rational(const std::string& text);

}  // namespace mppa
