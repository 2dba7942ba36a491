#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace ellimod {

using Rational = boost::rational<std::int64_t>;

// "p/q" when q != 1, otherwise "p". Always the reduced form.
std::string format_rational(const Rational& q);

// Accepts "p", "p/q" and surrounding whitespace. Throws Error(MalformedInput).
Rational parse_rational(std::string_view text);

// Representative of q modulo 1 in [0, 1).
Rational frac_part(const Rational& q);

}  // namespace ellimod
