#ifndef HILBERT_RATIONAL_HPP
#define HILBERT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace hilbert {

// Exact scalars. cpp_rational keeps values canonical: lowest terms,
// denominator >= 1. No rounding anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& q) {
  return denominator(q) == 1;
}

inline int sign_of(const Rational& q) {
  return q.sign();
}

inline Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned k = 2; k <= n; ++k)
    r *= k;
  return r;
}

// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
  if (is_integer(q))
    return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace hilbert

#endif
