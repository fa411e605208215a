#pragma once

#include <gmpxx.h>

#include <string>

namespace starres {

using Rational = mpq_class;

// "3", "-1/2"; always canonical.
std::string to_string(const Rational& q);

// Accepts "n" or "n/d" with optional sign; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

bool is_integer(const Rational& q);

long long to_ll(const Rational& q);

}  // namespace starres
