#include "hilbert/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "hilbert/errors.hpp"

namespace hilbert {

namespace {

bool divides(const std::vector<unsigned>& gen, const std::vector<unsigned>& expo) {
  for (std::size_t j = 0; j < gen.size(); ++j)
    if (gen[j] > expo[j])
      return false;
  return true;
}

// Enumerates exponents for variables var.. summing to `remaining`; counts
// leaves divisible by no generator. `alive` holds generators not yet ruled
// out on the assigned prefix; a generator whose unassigned part is all zero
// divides everything below, so that subtree contributes nothing.
std::uint64_t count_rec(const MonomialIdeal& ideal, std::vector<unsigned>& expo, unsigned var,
                        unsigned remaining, const std::vector<std::size_t>& alive) {
  const auto& gens = ideal.generators();
  unsigned n = ideal.n_vars();
  if (var == n)
    return alive.empty() ? 1 : 0;
  if (var == n - 1) {
    expo[var] = remaining;
    for (std::size_t g : alive)
      if (gens[g][var] <= remaining)
        return 0;
    return 1;
  }
  std::uint64_t total = 0;
  for (unsigned e = 0; e <= remaining; ++e) {
    expo[var] = e;
    std::vector<std::size_t> next;
    bool pruned = false;
    for (std::size_t g : alive) {
      if (gens[g][var] > e)
        continue;  // this generator cannot divide anything in the subtree
      bool rest_zero = true;
      for (unsigned j = var + 1; j < n; ++j)
        if (gens[g][j] != 0) {
          rest_zero = false;
          break;
        }
      if (rest_zero) {
        pruned = true;  // generator already divides the whole subtree
        break;
      }
      next.push_back(g);
    }
    if (!pruned)
      total += count_rec(ideal, expo, var + 1, remaining - e, next);
  }
  return total;
}

}  // namespace

MonomialIdeal::MonomialIdeal(unsigned n_vars, std::vector<std::vector<unsigned>> generators)
    : n_vars_(n_vars) {
  if (n_vars == 0)
    throw std::invalid_argument("MonomialIdeal: need at least one variable");
  for (const auto& g : generators) {
    if (g.size() != n_vars)
      throw std::invalid_argument("MonomialIdeal: generator arity mismatch");
    if (std::all_of(g.begin(), g.end(), [](unsigned e) { return e == 0; }))
      throw std::invalid_argument("MonomialIdeal: the unit monomial is not a valid generator");
  }
  // Keep only minimal generators; sorted so equal ideals compare equal.
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (const auto& g : generators) {
    bool redundant = false;
    for (const auto& h : generators)
      if (h != g && divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant)
      generators_.push_back(g);
  }
}

bool MonomialIdeal::contains(const std::vector<unsigned>& exponents) const {
  for (const auto& g : generators_)
    if (divides(g, exponents))
      return true;
  return false;
}

std::uint64_t count_monomials(const MonomialIdeal& ideal, unsigned t) {
  std::vector<unsigned> expo(ideal.n_vars());
  std::vector<std::size_t> alive(ideal.generators().size());
  for (std::size_t g = 0; g < alive.size(); ++g)
    alive[g] = g;
  return count_rec(ideal, expo, 0, t, alive);
}

HilbertTable hilbert_table(const MonomialIdeal& ideal, unsigned t_max) {
  HilbertTable table;
  table.values.reserve(t_max + 1);
  for (unsigned t = 0; t <= t_max; ++t)
    table.values.push_back(count_monomials(ideal, t));
  return table;
}

Interpolation interpolate_eventual(const HilbertTable& table) {
  const auto& v = table.values;
  std::size_t len = v.size();
  for (unsigned d = 0; d + 3 <= len; ++d) {
    std::size_t w = len - (d + 3);  // window start: d+1 fit points + 2 checks
    std::vector<Rational> diffs(v.begin() + w, v.begin() + w + d + 1);
    for (unsigned k = 1; k <= d; ++k)
      for (unsigned i = d; i >= k; --i)
        diffs[i] = diffs[i] - diffs[i - 1];
    Polynomial poly;
    for (unsigned k = 0; k <= d; ++k) {
      Polynomial basis = k == 0 ? Polynomial::constant(1) : binomial_poly(-Integer(w), k);
      poly = poly + basis.scaled(diffs[k]);
    }
    bool verified = true;
    for (std::size_t t = w + d + 1; t < len; ++t)
      if (poly.evaluate(Integer(t)) != Rational(v[t])) {
        verified = false;
        break;
      }
    if (!verified)
      continue;
    std::size_t stab = w;
    while (stab > 0 && poly.evaluate(Integer(stab - 1)) == Rational(v[stab - 1]))
      --stab;
    return Interpolation{std::move(poly), static_cast<unsigned>(stab)};
  }
  throw StabilizationNotDetected("interpolate_eventual: table of length " + std::to_string(len) +
                                 " has no stable trailing window; raise t_max");
}

CrossCheck cross_check(const MonomialIdeal& ideal, unsigned t_max) {
  HilbertTable table = hilbert_table(ideal, t_max);
  Interpolation interp = interpolate_eventual(table);
  bool pass = is_hilbert(interp.poly);
  MacaulayParams params =
      is_integer_valued(interp.poly) ? macaulay_params(interp.poly) : MacaulayParams{};
  return CrossCheck{std::move(table), std::move(interp.poly), std::move(params),
                    interp.stabilization, pass};
}

}  // namespace hilbert
