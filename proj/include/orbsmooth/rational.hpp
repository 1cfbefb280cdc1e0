#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orbsmooth {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses "p", "p/q", or a finite decimal such as "-0.125" exactly.
Rational parse_rational(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

std::vector<double> to_doubles(std::span<const Rational> values);

/// Shortest round-trip decimal for a double (std::to_chars).
std::string format_double(double value);

double parse_double(std::string_view text);

}  // namespace orbsmooth
