#ifndef HILBERT_ORACLE_HPP
#define HILBERT_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "hilbert/macaulay.hpp"
#include "hilbert/polynomial.hpp"

namespace hilbert {

/// A monomial ideal in n_vars variables, given by exponent vectors of its
/// generators. Generators are reduced to the minimal antichain on
/// construction, so equal ideals compare equal.
class MonomialIdeal {
 public:
  MonomialIdeal(unsigned n_vars, std::vector<std::vector<unsigned>> generators);

  unsigned n_vars() const { return n_vars_; }
  const std::vector<std::vector<unsigned>>& generators() const { return generators_; }

  /// Whether some generator divides the monomial with these exponents.
  bool contains(const std::vector<unsigned>& exponents) const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  unsigned n_vars_;
  std::vector<std::vector<unsigned>> generators_;
};

/// values[t] = H(R;t) for the quotient by the ideal, t = 0..t_max.
struct HilbertTable {
  std::vector<std::uint64_t> values;
};

/// Number of degree-t monomials outside the ideal, by enumeration of weak
/// compositions of t with pruning against the generators.
std::uint64_t count_monomials(const MonomialIdeal& ideal, unsigned t);

HilbertTable hilbert_table(const MonomialIdeal& ideal, unsigned t_max);

struct Interpolation {
  Polynomial poly;
  unsigned stabilization;  // smallest t from which the table equals poly(t)
};

/// Recovers the eventual polynomial of a Hilbert table by Newton forward
/// differences over the trailing window. A candidate degree d is accepted
/// when the last d+3 entries fit one degree-<=d polynomial. Throws
/// StabilizationNotDetected when no candidate fits; raise t_max and retry.
Interpolation interpolate_eventual(const HilbertTable& table);

struct CrossCheck {
  HilbertTable table;
  Polynomial poly;
  MacaulayParams params;
  unsigned stabilization;
  bool pass;  // is_hilbert(poly); false signals an implementation bug
};

/// End-to-end: count, interpolate, decompose, decide. Every eventual
/// polynomial of a graded quotient is a Hilbert polynomial, so pass=false
/// here means the decision procedure and the oracle disagree.
CrossCheck cross_check(const MonomialIdeal& ideal, unsigned t_max);

}  // namespace hilbert

#endif
