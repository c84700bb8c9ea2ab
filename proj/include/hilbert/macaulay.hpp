#ifndef HILBERT_MACAULAY_HPP
#define HILBERT_MACAULAY_HPP

#include <vector>

#include "hilbert/polynomial.hpp"

namespace hilbert {

/// The unique integers (m_0, ..., m_d) expressing an integer-valued f as
/// sum_i [ C(x+i, i+1) - C(x+i-m_i, i+1) ]. By convention M(0) = (0).
struct MacaulayParams {
  std::vector<Integer> params;

  bool operator==(const MacaulayParams&) const = default;
  bool non_increasing_nonnegative() const;
};

/// C(x+i, i+1) - C(x+i-m, i+1): degree exactly i with leading coefficient
/// m/i! when m != 0, the zero polynomial when m = 0.
Polynomial macaulay_term(unsigned i, const Integer& m);

/// Decompose f into its Macaulay parameters. Throws NotIntegerValued if f
/// is not integer-valued. Intermediate remainders may be fractional; each
/// m_i must come out an exact integer or InternalNonIntegerParameter is
/// thrown (cannot happen for integer-valued input).
MacaulayParams macaulay_params(const Polynomial& f);

/// Decision procedure: f is a Hilbert polynomial iff it is integer-valued
/// and its Macaulay parameters satisfy m_0 >= m_1 >= ... >= m_d >= 0.
/// Non-integer-valued input yields false, never an error. The zero
/// polynomial counts as Hilbert.
bool is_hilbert(const Polynomial& f);

/// Whether t*x^d is a Hilbert polynomial: true iff d = 0, d >= 3, or
/// (d in {1,2} and t >= 3). Throws NonPositiveCoefficient for t < 1.
bool classify_monomial(const Integer& t, unsigned d);

}  // namespace hilbert

#endif
