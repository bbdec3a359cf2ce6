#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qcoord {

using Rational = mpq_class;

// "3/2", "-1", "0"
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

}  // namespace qcoord
