#include "gtkey/polyops.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "gtkey/lattice.hpp"

namespace gtkey {

namespace {

void check_index(const MultiPoly& f, int i) {
  if (i < 1 || i > f.nvars() - 1)
    throw input_error("operator index " + std::to_string(i) + " out of range for " + std::to_string(f.nvars()) +
                      " variables");
}

// Adds sign * sum_{t=lo}^{hi-1} z_i^t z_{i+1}^{lo+hi-1-t} times the rest of e.
void add_geometric(MultiPoly& out, Exponent e, int i, int lo, int hi, const Rational& c) {
  const auto a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(i);
  for (int t = lo; t < hi; ++t) {
    e[a] = t;
    e[b] = lo + hi - 1 - t;
    out.add_term(e, c);
  }
}

MultiPoly difference_shifted(const MultiPoly& f, int i, int shift) {
  check_index(f, i);
  MultiPoly out(f.nvars());
  const auto a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(i);
  for (const auto& [e, c] : f.terms()) {
    const int p = e[a] + shift, q = e[b];
    if (p > q)
      add_geometric(out, e, i, q, p, c);
    else if (p < q)
      add_geometric(out, e, i, p, q, -c);
  }
  return out;
}

}  // namespace

MultiPoly swap_vars(const MultiPoly& f, int i) {
  check_index(f, i);
  MultiPoly out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    Exponent g = e;
    std::swap(g[static_cast<std::size_t>(i - 1)], g[static_cast<std::size_t>(i)]);
    out.add_term(g, c);
  }
  return out;
}

MultiPoly divided_difference(const MultiPoly& f, int i) { return difference_shifted(f, i, 0); }

MultiPoly pi_op(const MultiPoly& f, int i) { return difference_shifted(f, i, 1); }

MultiPoly apply_word(const MultiPoly& f, const Word& w) {
  MultiPoly g = f;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) g = pi_op(g, *it);
  return g;
}

MultiPoly monomial_of(const Partition& lambda) {
  Exponent e;
  for (Entry p : lambda.parts()) {
    if (p > std::numeric_limits<int>::max()) throw input_error("exponent too large");
    e.push_back(static_cast<int>(p));
  }
  return MultiPoly::monomial(std::move(e));
}

MultiPoly key_via_word(const Partition& lambda, const Word& w) {
  if (!is_reduced(w, static_cast<int>(lambda.size()))) throw input_error("word is not reduced");
  MultiPoly f = apply_word(monomial_of(lambda), w);
  require_nonnegative_integral(f, "key polynomial");
  return f;
}

MultiPoly key_via_operators(const Partition& lambda, const Permutation& sigma) {
  if (static_cast<int>(lambda.size()) != sigma.size()) throw input_error("lambda and sigma must have the same n");
  return key_via_word(lambda, canonical_reduced_word(sigma));
}

namespace {

MultiPoly weight_sum(const PolytopeSpec& spec) {
  std::map<Exponent, Integer> tally;
  Exponent e(static_cast<std::size_t>(spec.n));
  for_each_point(spec, [&](const PatternView& v) {
    Entry prev = 0;
    for (int j = 1; j <= v.m(); ++j) prev += v.at(0, j);
    for (int i = 1; i <= spec.n; ++i) {
      Entry s = 0;
      const int width = spec.kind == PolytopeKind::triangular ? i : v.m();
      for (int j = 1; j <= width; ++j) s += v.at(i, j);
      e[static_cast<std::size_t>(i - 1)] = static_cast<int>(s - prev);
      prev = s;
    }
    ++tally[e];
  });
  MultiPoly f(spec.n);
  for (const auto& [ex, c] : tally) f.add_term(ex, Rational(c));
  return f;
}

}  // namespace

MultiPoly schur(const Partition& lambda, int n) {
  if (static_cast<int>(lambda.size()) > n)
    for (std::size_t r = static_cast<std::size_t>(n); r < lambda.size(); ++r)
      if (lambda[r] != 0) throw input_error("lambda has more than n non-zero parts");
  return weight_sum(PolytopeSpec::triangular(lambda.resized(static_cast<std::size_t>(n))));
}

MultiPoly skew_schur(const Partition& lambda, const Partition& mu, int n) {
  return weight_sum(PolytopeSpec::skew(lambda, mu, n));
}

Integer eval_ones(const MultiPoly& f) {
  const Rational v = f.eval_ones();
  if (v.get_den() != 1) throw std::domain_error("value at (1,...,1) is not an integer");
  return v.get_num();
}

Integer kostka(const Partition& lambda, const WeightVector& mu) {
  const std::size_t n = std::max(lambda.size(), mu.size());
  std::vector<Entry> w = mu.vec();
  w.resize(n, 0);
  return count_points(PolytopeSpec::triangular(lambda.resized(n), WeightVector(std::move(w))));
}

Integer skew_kostka(const Partition& lambda, const Partition& mu, const WeightVector& nu) {
  return count_points(PolytopeSpec::skew(lambda, mu, static_cast<int>(nu.size()), nu));
}

Integer rearrangements(const std::vector<Entry>& v) {
  std::map<Entry, unsigned long> mult;
  for (Entry x : v) ++mult[x];
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), v.size());
  for (const auto& [x, m] : mult) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), m);
    r /= f;
  }
  return r;
}

void require_nonnegative_integral(const MultiPoly& f, const char* what) {
  if (!f.has_nonnegative_integer_coefficients())
    throw std::logic_error(std::string(what) + " has a coefficient that is not a non-negative integer");
}

}  // namespace gtkey
