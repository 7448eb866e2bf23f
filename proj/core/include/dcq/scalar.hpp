#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dcq {

/// Exact arbitrary-precision rational. Every coordinate, radius and squared
/// distance in the library is a Scalar; no predicate touches floating point.
using Scalar = mpq_class;

/// Parses "12", "-0.125", "3.5e-2" or "7/3" without rounding.
/// Throws ParseError on anything else.
Scalar parse_scalar(std::string_view text);

/// Canonical text form: a plain decimal when the value has a terminating
/// decimal expansion ("-0.125", "3"), otherwise "p/q" in lowest terms.
/// parse_scalar(to_string(v)) == v for every v.
std::string to_string(const Scalar& value);

/// Lossy conversion for reporting only.
double to_double(const Scalar& value);

}  // namespace dcq
