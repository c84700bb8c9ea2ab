// Acceptance suite: runs every criterion end to end, prints one line per
// criterion, exits with the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hilbert/macaulay.hpp"
#include "hilbert/oracle.hpp"
#include "hilbert/parser.hpp"
#include "hilbert/polynomial.hpp"
#include "hilbert/realizer.hpp"

#include "generators.hpp"

using namespace hilbert;
using hilbert::testing::all_patterns;
using hilbert::testing::random_hilbert;
using hilbert::testing::random_integer_valued;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double limit_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed > limit_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
  }
  std::printf("%s criterion %d: %s (%.2fs%s%s)\n", ok ? "PASS" : "FAIL", number, name.c_str(),
              elapsed, detail.empty() ? "" : "; ", detail.c_str());
  if (!ok)
    ++failures;
}

Polynomial P(const char* text) { return parse_poly(text); }

bool monomial_table(std::string& detail) {
  for (Integer t = 1; t <= 50; ++t)
    for (unsigned d = 0; d <= 6; ++d)
      if (classify_monomial(t, d) != is_hilbert(Polynomial::monomial(Rational(t), d))) {
        detail = "mismatch at t=" + t.str() + ", d=" + std::to_string(d);
        return false;
      }
  for (const char* text : {"x", "2x", "x^2", "2x^2"})
    if (is_hilbert(P(text))) {
      detail = std::string(text) + " wrongly accepted";
      return false;
    }
  for (const char* text : {"3x", "4x", "5x", "3x^2", "4x^2", "5x^2", "x^3"})
    if (!is_hilbert(P(text))) {
      detail = std::string(text) + " wrongly rejected";
      return false;
    }
  return true;
}

bool theorem_thresholds(std::string& detail) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> coeff(-9, 9);
  bool saw_low = false, saw_high = false;
  for (unsigned d = 1; d <= 4; ++d)
    for (int trial = 0; trial < 200; ++trial) {
      LowerCoefficients lower;
      for (unsigned i = 0; i < d; ++i)
        lower.a.emplace_back(coeff(rng));
      (lower.min() >= -2 ? saw_high : saw_low) = true;
      if (!is_hilbert(to_polynomial(lower, leading_bound(lower)))) {
        detail = "failed at " + to_string(to_polynomial(lower, leading_bound(lower)));
        return false;
      }
    }
  if (!saw_low || !saw_high) {
    detail = "sampling missed one branch of the bound";
    return false;
  }
  return true;
}

bool corollary_sweep(std::string& detail) {
  std::size_t total = 0;
  for (unsigned d = 1; d <= 6; ++d)
    for (const SignPattern& s : all_patterns(d)) {
      ++total;
      Polynomial f = realize_signs(s);
      if (f.degree() != d || sign_pattern(f) != s || !is_hilbert(f)) {
        detail = "failed for " + to_string(f);
        return false;
      }
    }
  if (total != 1092) {
    detail = "expected 1092 patterns, swept " + std::to_string(total);
    return false;
  }
  return true;
}

bool decomposition_identity(std::string& detail) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 500; ++trial) {
    Polynomial f = random_integer_valued(rng, 8);
    MacaulayParams m = macaulay_params(f);
    Polynomial sum;
    for (std::size_t i = 0; i < m.params.size(); ++i)
      sum = sum + macaulay_term(static_cast<unsigned>(i), m.params[i]);
    if (sum != f) {
      detail = "recomposition mismatch for " + to_string(f);
      return false;
    }
  }
  return true;
}

bool closure_suite(std::string& detail) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial f = random_hilbert(rng);
    Polynomial g = random_hilbert(rng);
    if (!is_hilbert(f + g) || !is_hilbert(f * g) || !is_hilbert(f.scaled(7))) {
      detail = "closure failed for f = " + to_string(f) + ", g = " + to_string(g);
      return false;
    }
  }
  return true;
}

bool oracle_corpus(std::string& detail) {
  for (unsigned n = 1; n <= 5; ++n) {
    CrossCheck r = cross_check(MonomialIdeal(n, {}), 25);
    Polynomial expected = n == 1 ? Polynomial::constant(1) : binomial_poly(n - 1, n - 1);
    if (r.poly != expected || !r.pass) {
      detail = "full ring n=" + std::to_string(n) + " gave " + to_string(r.poly);
      return false;
    }
  }
  struct Item {
    MonomialIdeal ideal;
    const char* poly;
  };
  std::vector<Item> corpus = {
      {MonomialIdeal(3, {{2, 0, 0}, {1, 1, 0}}), "x + 2"},
      {MonomialIdeal(1, {{2}}), "0"},
      {MonomialIdeal(2, {{3, 0}}), "3"},
      {MonomialIdeal(4, {{1, 1, 0, 0}, {0, 0, 2, 0}}), nullptr},
      {MonomialIdeal(3, {{2, 1, 0}, {0, 0, 4}}), nullptr},
  };
  for (const Item& item : corpus) {
    CrossCheck r = cross_check(item.ideal, 25);
    if (!r.pass || (item.poly && r.poly != parse_poly(item.poly))) {
      detail = "quotient corpus entry gave " + to_string(r.poly);
      return false;
    }
  }
  CrossCheck r = cross_check(MonomialIdeal(3, {{2, 0, 0}, {1, 1, 0}}), 25);
  if (r.params.params != std::vector<Integer>{2, 1}) {
    detail = "M(x+2) came out wrong";
    return false;
  }
  return true;
}

bool certificate_soundness(std::string& detail) {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> coeff(-12, 12), extra(0, 6);
  std::uniform_int_distribution<unsigned> deg(1, 4);
  for (int trial = 0; trial < 50; ++trial) {
    LowerCoefficients lower;
    unsigned d = deg(rng);
    for (unsigned i = 0; i < d; ++i)
      lower.a.emplace_back(coeff(rng));
    Integer n = leading_bound(lower) + extra(rng);
    Polynomial target = to_polynomial(lower, n);
    Certificate cert = build_certificate(lower, n);
    if (!verify_certificate(cert, target)) {
      detail = "certificate for " + to_string(target) + " did not verify";
      return false;
    }
    std::uniform_int_distribution<std::size_t> pick(0, cert.atoms.size() - 1);
    Certificate corrupted = cert;
    corrupted.atoms[pick(rng)].poly = P("2x");
    if (verify_certificate(corrupted, target)) {
      detail = "corrupted certificate still verified for " + to_string(target);
      return false;
    }
  }
  return true;
}

bool known_values(std::string& detail) {
  struct Known {
    const char* poly;
    std::vector<Integer> params;
  };
  for (const Known& k : {Known{"2x + 1", {2, 2}}, Known{"5x - 5", {5, 5}},
                         Known{"x^3", {67, 17, 9, 6}}}) {
    Polynomial f = P(k.poly);
    MacaulayParams m = macaulay_params(f);
    if (m.params != k.params) {
      detail = std::string("M(") + k.poly + ") came out wrong";
      return false;
    }
    if (!is_hilbert(f)) {
      detail = std::string(k.poly) + " wrongly rejected";
      return false;
    }
    Polynomial sum;
    for (std::size_t i = 0; i < m.params.size(); ++i)
      sum = sum + macaulay_term(static_cast<unsigned>(i), m.params[i]);
    if (sum != f) {
      detail = std::string("recomposition mismatch for ") + k.poly;
      return false;
    }
    for (int x = 0; x <= 10; ++x)
      if (sum.evaluate(x) != f.evaluate(x)) {
        detail = std::string("evaluation mismatch for ") + k.poly;
        return false;
      }
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "monomial classification table", 1.0, monomial_table);
  criterion(2, "threshold theorem over random lower coefficients", 5.0, theorem_thresholds);
  criterion(3, "sign pattern sweep (1092 patterns)", 5.0, corollary_sweep);
  criterion(4, "Macaulay decomposition identity", 5.0, decomposition_identity);
  criterion(5, "closure under +, *, and positive scaling", 10.0, closure_suite);
  criterion(6, "monomial ideal oracle cross-check", 10.0, oracle_corpus);
  criterion(7, "certificate soundness and corruption", 5.0, certificate_soundness);
  criterion(8, "known Macaulay parameter values", 1.0, known_values);
  return failures;
}
