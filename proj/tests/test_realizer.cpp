#include <doctest.h>

#include <random>

#include "hilbert/errors.hpp"
#include "hilbert/parser.hpp"
#include "hilbert/realizer.hpp"

#include "generators.hpp"

using namespace hilbert;

namespace {

Polynomial P(const char* text) { return parse_poly(text); }

LowerCoefficients L(std::vector<Integer> a) { return LowerCoefficients{std::move(a)}; }

}  // namespace

TEST_CASE("leading_bound") {
  CHECK(leading_bound(L({1, 1, 1})) == 18);  // N = 1 >= -2: 5d+3
  CHECK(leading_bound(L({-7, 0})) == 43);    // N = -7: -10*2*floor(-7/5)+3
  CHECK(leading_bound(L({-2})) == 8);        // boundary of the first case
  CHECK(leading_bound(L({-3})) == 13);       // just past the boundary
  CHECK(leading_bound(L({-5})) == 13);       // floor(-5/5) = -1
}

TEST_CASE("realize_signs on worked examples") {
  CHECK(realize_signs({-1, 1}) == P("13x^2 + x - 1"));
  CHECK(realize_signs({0}) == P("8x"));
  CHECK(realize_signs({0, 0, 0}) == P("18x^3"));
  CHECK_THROWS_AS(realize_signs({}), EmptyPattern);
}

TEST_CASE("realize_signs sweep: every pattern up to degree 6") {
  for (unsigned d = 1; d <= 6; ++d) {
    for (const SignPattern& s : hilbert::testing::all_patterns(d)) {
      Polynomial f = realize_signs(s);
      REQUIRE(f.degree() == d);
      CHECK(sign_pattern(f) == s);
      CHECK(is_hilbert(f));
    }
  }
}

TEST_CASE("threshold theorem holds at and above the bound") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> coeff(-9, 9), extra(0, 10);
  for (unsigned d = 1; d <= 3; ++d)
    for (int trial = 0; trial < 20; ++trial) {
      LowerCoefficients lower;
      for (unsigned i = 0; i < d; ++i)
        lower.a.emplace_back(coeff(rng));
      Integer n = leading_bound(lower) + extra(rng);
      CHECK(is_hilbert(to_polynomial(lower, n)));
    }
}

TEST_CASE("build_certificate worked examples") {
  SUBCASE("d=1, a=(-1), n=8") {
    Certificate c = build_certificate(L({-1}), 8);
    CHECK(verify_certificate(c, P("8x - 1")));
    CHECK(!verify_certificate(c, P("8x + 1")));
  }
  SUBCASE("d=2, a=(0,0), n=13") {
    Certificate c = build_certificate(L({0, 0}), 13);
    CHECK(verify_certificate(c, P("13x^2")));
  }
  SUBCASE("d=1, a=(-7), n=23 takes the N < -2 branch") {
    Certificate c = build_certificate(L({-7}), 23);
    CHECK(verify_certificate(c, P("23x - 7")));
  }
}

TEST_CASE("build_certificate rejects a leading coefficient below the bound") {
  CHECK_THROWS_AS(build_certificate(L({1}), 7), BoundViolated);
}

TEST_CASE("an injected non-Hilbert atom fails verification") {
  Certificate c = build_certificate(L({-1}), 8);
  // Patch things so the combiner still sums to the target but one leaf is 2x.
  Polynomial target = P("8x - 1");
  c.atoms.push_back({P("2x"), AtomTag::kMonomialProposition});
  c.atoms.push_back({P("-2x"), AtomTag::kMonomialProposition});  // also not Hilbert
  c.combiner.children.push_back(CertNode::leaf(c.atoms.size() - 2));
  c.combiner.children.push_back(CertNode::leaf(c.atoms.size() - 1));
  CHECK(!verify_certificate(c, target));
}

TEST_CASE("certificates verify on random instances and atoms are Hilbert") {
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> coeff(-12, 12), extra(0, 5);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<unsigned> deg(1, 4);
    LowerCoefficients lower;
    unsigned d = deg(rng);
    for (unsigned i = 0; i < d; ++i)
      lower.a.emplace_back(coeff(rng));
    Integer n = leading_bound(lower) + extra(rng);
    Certificate c = build_certificate(lower, n);
    Polynomial target = to_polynomial(lower, n);
    CHECK(verify_certificate(c, target));
    for (const CertAtom& atom : c.atoms)
      CHECK(is_hilbert(atom.poly));
    // A verified certificate implies the decision procedure agrees.
    CHECK(is_hilbert(target));
  }
}

TEST_CASE("minimal_leading") {
  CHECK(minimal_leading(L({1})) == 1);   // the bound 8 is not tight here
  CHECK(minimal_leading(L({0})) == 3);
  CHECK(minimal_leading(L({0, 0})) == 3);
}

TEST_CASE("minimal_leading never exceeds the bound and is sharp") {
  std::mt19937 rng(47);
  std::uniform_int_distribution<int> coeff(-6, 6);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<unsigned> deg(1, 3);
    LowerCoefficients lower;
    unsigned d = deg(rng);
    for (unsigned i = 0; i < d; ++i)
      lower.a.emplace_back(coeff(rng));
    Integer n = minimal_leading(lower);
    CHECK(n <= leading_bound(lower));
    CHECK(is_hilbert(to_polynomial(lower, n)));
    if (n > 1)
      CHECK(!is_hilbert(to_polynomial(lower, n - 1)));
  }
}
