#include "hilbert/realizer.hpp"

#include <algorithm>
#include <utility>

#include "hilbert/errors.hpp"

namespace hilbert {

namespace {

Integer floor_div(const Integer& num, const Integer& den) {
  Integer q = num / den;  // truncates toward zero
  if ((num % den) != 0 && ((num < 0) != (den < 0)))
    --q;
  return q;
}

// d*x^{d-1} + (d-1)*x^{d-2} + ... + 2x + 1; the constant 1 when d = 1.
Polynomial ascending_factor(unsigned d) {
  std::vector<Rational> c(d);
  for (unsigned j = 0; j < d; ++j)
    c[j] = j + 1;
  return Polynomial(std::move(c));
}

Polynomial evaluate_node(const CertNode& node, const std::vector<CertAtom>& atoms, bool& ok) {
  switch (node.kind) {
    case CertNode::Kind::kLeaf:
      if (node.atom >= atoms.size()) {
        ok = false;
        return Polynomial();
      }
      return atoms[node.atom].poly;
    case CertNode::Kind::kSum: {
      Polynomial acc;
      for (const CertNode& child : node.children)
        acc = acc + evaluate_node(child, atoms, ok);
      return acc;
    }
    case CertNode::Kind::kProduct: {
      Polynomial acc = Polynomial::constant(1);
      for (const CertNode& child : node.children)
        acc = acc * evaluate_node(child, atoms, ok);
      return acc;
    }
  }
  ok = false;
  return Polynomial();
}

}  // namespace

CertNode CertNode::leaf(std::size_t atom) {
  CertNode n;
  n.kind = Kind::kLeaf;
  n.atom = atom;
  return n;
}

CertNode CertNode::sum(std::vector<CertNode> children) {
  CertNode n;
  n.kind = Kind::kSum;
  n.children = std::move(children);
  return n;
}

CertNode CertNode::product(std::vector<CertNode> children) {
  CertNode n;
  n.kind = Kind::kProduct;
  n.children = std::move(children);
  return n;
}

Integer LowerCoefficients::min() const {
  return *std::min_element(a.begin(), a.end());
}

Polynomial to_polynomial(const LowerCoefficients& lower, const Integer& n) {
  std::vector<Rational> c(lower.a.size() + 1);
  for (std::size_t i = 0; i < lower.a.size(); ++i)
    c[i] = lower.a[i];
  c.back() = n;
  return Polynomial(std::move(c));
}

Integer leading_bound(const LowerCoefficients& lower) {
  Integer d = lower.degree();
  Integer n = lower.min();
  if (n >= -2)
    return 5 * d + 3;
  return -10 * d * floor_div(n, 5) + 3;
}

Polynomial realize_signs(const SignPattern& s) {
  if (s.empty())
    throw EmptyPattern();
  LowerCoefficients lower;
  lower.a.assign(s.begin(), s.end());
  return to_polynomial(lower, leading_bound(lower));
}

Certificate build_certificate(const LowerCoefficients& lower, const Integer& n) {
  Integer bound = leading_bound(lower);
  if (n < bound)
    throw BoundViolated("build_certificate: n = " + n.str() + " below bound " + bound.str());

  unsigned d = lower.degree();
  Integer big_n = lower.min();

  Certificate cert;
  auto add_atom = [&cert](Polynomial p, AtomTag tag) {
    cert.atoms.push_back({std::move(p), tag});
    return cert.atoms.size() - 1;
  };

  // Shared base product (5x-5)(d*x^{d-1}+...+2x+1) = 5(d*x^d - x^{d-1} - ... - 1).
  std::size_t five = add_atom(Polynomial({Rational(-5), Rational(5)}), AtomTag::kBaseFact5xMinus5);
  Polynomial factor = ascending_factor(d);
  std::size_t asc =
      add_atom(factor, d >= 2 ? AtomTag::kBaseFact2xPlus1 : AtomTag::kConstant);

  std::vector<CertNode> summands;
  Integer shift;  // amount added to each lower coefficient by the base product
  if (big_n >= -2) {
    summands.push_back(CertNode::product({CertNode::leaf(five), CertNode::leaf(asc)}));
    shift = 5;
  } else {
    Integer m = -floor_div(big_n, 5);
    std::size_t scale = add_atom(Polynomial::constant(Rational(m)), AtomTag::kConstant);
    // Two copies of the 5M-scaled product make up 10M(d*x^d - sum x^i).
    for (int copy = 0; copy < 2; ++copy)
      summands.push_back(CertNode::product(
          {CertNode::leaf(five), CertNode::leaf(asc), CertNode::leaf(scale)}));
    shift = 10 * m;
  }

  for (unsigned i = 0; i < d; ++i) {
    Integer c = lower.a[i] + shift;  // >= 3 by the theorem's case analysis
    summands.push_back(CertNode::leaf(add_atom(
        Polynomial::monomial(Rational(c), i),
        i == 0 ? AtomTag::kConstant : AtomTag::kMonomialProposition)));
  }
  Integer top = n - shift * d;  // >= 3 since n >= shift*d + 3
  summands.push_back(CertNode::leaf(
      add_atom(Polynomial::monomial(Rational(top), d), AtomTag::kMonomialProposition)));

  cert.combiner = CertNode::sum(std::move(summands));
  return cert;
}

bool verify_certificate(const Certificate& c, const Polynomial& target) {
  for (const CertAtom& atom : c.atoms)
    if (!is_hilbert(atom.poly))
      return false;
  bool ok = true;
  Polynomial value = evaluate_node(c.combiner, c.atoms, ok);
  return ok && value == target;
}

Integer minimal_leading(const LowerCoefficients& lower) {
  for (Integer n = 1;; ++n)
    if (is_hilbert(to_polynomial(lower, n)))
      return n;
}

}  // namespace hilbert
