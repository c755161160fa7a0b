#ifndef GAUGE2_RATIONAL_HPP
#define GAUGE2_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace gauge2 {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational coefficient type. Always normalized, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

inline BigInt factorial(unsigned k)
{
  BigInt r = 1;
  for (unsigned i = 2; i <= k; i++) r *= i;
  return r;
}

inline std::string to_string(const Rational & r)
{
  return r.str();
}

} // namespace gauge2

#endif
