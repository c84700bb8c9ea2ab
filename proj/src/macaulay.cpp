#include "hilbert/macaulay.hpp"

#include "hilbert/errors.hpp"

namespace hilbert {

bool MacaulayParams::non_increasing_nonnegative() const {
  for (std::size_t i = 0; i + 1 < params.size(); ++i)
    if (params[i] < params[i + 1])
      return false;
  return params.empty() || params.back() >= 0;
}

Polynomial macaulay_term(unsigned i, const Integer& m) {
  if (m == 0)
    return Polynomial();
  return binomial_poly(i, i + 1) - binomial_poly(Integer(i) - m, i + 1);
}

MacaulayParams macaulay_params(const Polynomial& f) {
  if (!is_integer_valued(f))
    throw NotIntegerValued("macaulay_params: " + to_string(f) + " is not integer-valued");
  if (f.is_zero())
    return MacaulayParams{{Integer(0)}};

  unsigned d = *f.degree();
  std::vector<Integer> params(d + 1);
  Polynomial rem = f;
  for (unsigned i = d + 1; i-- > 0;) {
    // Leading coefficient of macaulay_term(i, m) is m/i!.
    Rational m = rem.coeff(i) * factorial(i);
    if (!is_integer(m))
      throw InternalNonIntegerParameter("macaulay_params: fractional m_" + std::to_string(i) +
                                        " = " + to_string(m) + " for " + to_string(f));
    params[i] = numerator(m);
    rem = rem - macaulay_term(i, params[i]);
  }
  if (!rem.is_zero())
    throw InternalNonIntegerParameter("macaulay_params: nonzero final remainder for " +
                                      to_string(f));
  return MacaulayParams{std::move(params)};
}

bool is_hilbert(const Polynomial& f) {
  if (!is_integer_valued(f))
    return false;
  return macaulay_params(f).non_increasing_nonnegative();
}

bool classify_monomial(const Integer& t, unsigned d) {
  if (t < 1)
    throw NonPositiveCoefficient("classify_monomial: t must be >= 1, got " + t.str());
  return d == 0 || d >= 3 || t >= 3;
}

}  // namespace hilbert
