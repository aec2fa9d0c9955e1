#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cylindex {

using Rational = boost::multiprecision::cpp_rational;

/// Exact rational for a real input.
///
/// Returns the simplest fraction p/q (q <= 10^6) within 1e-12 relative of x
/// when one exists, so decimal inputs such as 0.1 become 1/10; otherwise the
/// exact binary value of x.
Rational recover_rational(double x);

int sign(const Rational& q);

}  // namespace cylindex
