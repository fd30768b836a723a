#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace catlab {

/// Exact integer type for index values. 128 bits covers hyper-Wiener
/// indices far beyond n = 10^6 leaves on a 10^3-node spine.
using wide_int = __int128;

/// Arbitrary-precision integer and rational used by the theory and
/// oracle layers.
using big_int = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

std::string to_string(wide_int v);

big_int to_big(wide_int v);

double to_double(const rational& r);

/// "num/den" with the denominator always written, e.g. "11/1".
std::string to_fraction_string(const rational& r);

}  // namespace catlab
