#include "hilbert/polynomial.hpp"

#include <sstream>
#include <utility>

#include "hilbert/errors.hpp"

namespace hilbert {

namespace {

void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back() == 0)
    c.pop_back();
}

const Rational kZero{};

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim(coeffs_);
}

Polynomial Polynomial::constant(Rational c) {
  return Polynomial({std::move(c)});
}

Polynomial Polynomial::monomial(Rational c, unsigned power) {
  std::vector<Rational> v(power + 1);
  v[power] = std::move(c);
  return Polynomial(std::move(v));
}

std::optional<unsigned> Polynomial::degree() const {
  if (coeffs_.empty())
    return std::nullopt;
  return static_cast<unsigned>(coeffs_.size() - 1);
}

Rational Polynomial::leading_coefficient() const {
  if (coeffs_.empty())
    throw DegreeUndefined();
  return coeffs_.back();
}

const Rational& Polynomial::coeff(unsigned i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

Rational Polynomial::evaluate(const Integer& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = coeff(static_cast<unsigned>(i)) + rhs.coeff(static_cast<unsigned>(i));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  return *this + (-rhs);
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (is_zero() || rhs.is_zero())
    return Polynomial();
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[i] = coeffs_[i] * c;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  return scaled(Rational(-1));
}

Polynomial binomial_poly(const Integer& shift, unsigned lower) {
  // prod_{j=0}^{lower-1} (x + shift - j), then divide by lower!.
  Polynomial p = Polynomial::constant(1);
  for (unsigned j = 0; j < lower; ++j) {
    Polynomial linear({Rational(shift - j), Rational(1)});
    p = p * linear;
  }
  return p.scaled(Rational(1, factorial(lower)));
}

std::vector<Rational> forward_differences(const Polynomial& f) {
  if (f.is_zero())
    return {};
  unsigned d = *f.degree();
  std::vector<Rational> row(d + 1);
  for (unsigned t = 0; t <= d; ++t)
    row[t] = f.evaluate(t);
  std::vector<Rational> out;
  out.reserve(d + 1);
  for (unsigned k = 0; k <= d; ++k) {
    out.push_back(row[0]);
    for (std::size_t i = 0; i + 1 < row.size(); ++i)
      row[i] = row[i + 1] - row[i];
    row.pop_back();
  }
  return out;
}

bool is_integer_valued(const Polynomial& f) {
  for (const Rational& delta : forward_differences(f))
    if (!is_integer(delta))
      return false;
  return true;
}

SignPattern sign_pattern(const Polynomial& f) {
  if (f.is_zero())
    throw DegreeUndefined();
  unsigned d = *f.degree();
  SignPattern s(d);
  for (unsigned i = 0; i < d; ++i)
    s[i] = sign_of(f.coeff(i));
  return s;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (unsigned i = static_cast<unsigned>(f.coeffs().size()); i-- > 0;) {
    const Rational& c = f.coeff(i);
    if (c == 0)
      continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0)
        out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      out << to_string(mag);
    } else {
      if (mag != 1)
        out << to_string(mag) << (is_integer(mag) ? "" : " ");
      out << "x";
      if (i > 1)
        out << "^" << i;
    }
  }
  return out.str();
}

}  // namespace hilbert
