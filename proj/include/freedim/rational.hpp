#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace freedim {

/// Exact rational values. Function values live in [0,1] and the thresholds
/// 1/2 and 1/3 are compared exactly, so no floating point anywhere on these
/// paths.
using Rational = boost::rational<std::int64_t>;

inline Rational rat(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

inline Rational rat_abs(const Rational& r) { return r < Rational(0) ? -r : r; }

/// Renders integers without a denominator, everything else as "p/q".
std::string rational_string(const Rational& r);

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace freedim
