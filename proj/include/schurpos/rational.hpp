#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace schurpos {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

inline Integer to_integer(const Rational& q) {
  if (!is_integral(q)) throw std::domain_error("rational is not an integer");
  return numerator(q);
}

}  // namespace schurpos
