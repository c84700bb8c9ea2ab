#ifndef HILBERT_POLYNOMIAL_HPP
#define HILBERT_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "hilbert/rational.hpp"

namespace hilbert {

/// Dense univariate polynomial with exact rational coefficients.
/// coeffs[i] is the coefficient of x^i; trailing zeros are trimmed, so the
/// zero polynomial is the empty sequence and degree() is disengaged for it.
/// Values are immutable after construction.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(Rational c);
  static Polynomial monomial(Rational c, unsigned power);

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<unsigned> degree() const;
  Rational leading_coefficient() const;  // throws DegreeUndefined on zero

  // Coefficient of x^i; zero beyond the stored range.
  const Rational& coeff(unsigned i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational evaluate(const Integer& x) const;

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial operator-() const;

  bool operator==(const Polynomial& rhs) const = default;

 private:
  std::vector<Rational> coeffs_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& f) {
  return f.scaled(c);
}

/// The degree-`lower` polynomial C(x+shift, lower), by the falling-factorial
/// extension: prod_{j=0}^{lower-1} (x+shift-j) / lower!. Defined for every
/// integer shift, including values where the combinatorial binomial would
/// vanish. Requires lower >= 1.
Polynomial binomial_poly(const Integer& shift, unsigned lower);

/// (D^0 f(0), D^1 f(0), ..., D^d f(0)) with Df(x) = f(x+1) - f(x).
/// Empty for the zero polynomial.
std::vector<Rational> forward_differences(const Polynomial& f);

/// True iff f(Z) is contained in Z, i.e. every forward difference at 0 is an
/// integer.
bool is_integer_valued(const Polynomial& f);

/// Entry i = sgn(a_i) for i = 0..d-1; the leading coefficient is excluded.
using SignPattern = std::vector<int>;

/// Throws DegreeUndefined on the zero polynomial.
SignPattern sign_pattern(const Polynomial& f);

/// Canonical printer: descending powers, explicit signs, rationals as p/q.
/// Parsing the output reproduces f exactly.
std::string to_string(const Polynomial& f);

}  // namespace hilbert

#endif
