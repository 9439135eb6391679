#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ramsey_forge {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

BigInt factorial(unsigned n);

// n (n-1) ... (n-t+1).
BigInt falling_factorial(unsigned n, unsigned t);

}  // namespace ramsey_forge
