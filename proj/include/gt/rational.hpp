#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gt {

using Rational = mpq_class;

inline Rational rational_of(long long v) { return Rational(static_cast<long>(v)); }

// Accepts "3", "-3/2", "0.25".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

}  // namespace gt
