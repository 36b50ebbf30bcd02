#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace milnor {

// Exact coefficients for Magnus expansions and Milnor numbers.
using Integer = boost::multiprecision::cpp_int;

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

}  // namespace milnor
