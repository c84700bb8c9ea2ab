#ifndef HILBERT_REALIZER_HPP
#define HILBERT_REALIZER_HPP

#include <vector>

#include "hilbert/macaulay.hpp"
#include "hilbert/polynomial.hpp"

namespace hilbert {

/// The prescribed lower coefficients a_0, ..., a_{d-1}; d = a.size() >= 1.
struct LowerCoefficients {
  std::vector<Integer> a;

  unsigned degree() const { return static_cast<unsigned>(a.size()); }
  Integer min() const;  // N = min{a_0, ..., a_{d-1}}
};

/// Builds n*x^d + a_{d-1}x^{d-1} + ... + a_0.
Polynomial to_polynomial(const LowerCoefficients& lower, const Integer& n);

enum class AtomTag {
  kMonomialProposition,  // t*x^i with t >= 3, or i >= 3
  kBaseFact2xPlus1,
  kBaseFact5xMinus5,
  kProductOfAtoms,
  kConstant,
};

struct CertAtom {
  Polynomial poly;
  AtomTag tag;
};

/// Formal sum/product tree over atom indices. Sums and products are the
/// closure operations that preserve Hilbertness.
struct CertNode {
  enum class Kind { kLeaf, kSum, kProduct };
  Kind kind = Kind::kLeaf;
  std::size_t atom = 0;  // meaningful for leaves
  std::vector<CertNode> children;

  static CertNode leaf(std::size_t atom);
  static CertNode sum(std::vector<CertNode> children);
  static CertNode product(std::vector<CertNode> children);
};

/// Witness that a polynomial is Hilbert: each atom is individually Hilbert
/// and the combiner tree evaluates to the target.
struct Certificate {
  std::vector<CertAtom> atoms;
  CertNode combiner;
};

/// Smallest leading coefficient guaranteed by the threshold theorem:
/// 5d+3 when N >= -2, otherwise -10d*floor(N/5)+3 (true floor, so
/// floor(-7/5) = -2).
Integer leading_bound(const LowerCoefficients& lower);

/// Canonical degree-d Hilbert polynomial with the prescribed sign pattern:
/// (5d+3)*x^d + sum_i s_i*x^i. Throws EmptyPattern for the empty pattern.
Polynomial realize_signs(const SignPattern& s);

/// Certificate for n*x^d + sum a_i x^i following the threshold theorem's
/// decomposition. Throws BoundViolated if n < leading_bound(lower).
Certificate build_certificate(const LowerCoefficients& lower, const Integer& n);

/// True iff every atom passes is_hilbert and the combiner tree evaluates
/// exactly to target.
bool verify_certificate(const Certificate& c, const Polynomial& target);

/// Smallest n >= 1 with n*x^d + sum a_i x^i Hilbert, by linear scan. The
/// scan terminates because leading_bound always succeeds.
Integer minimal_leading(const LowerCoefficients& lower);

}  // namespace hilbert

#endif
