#include "gtkey/ehrhart.hpp"

#include <stdexcept>

#include "gtkey/lattice.hpp"

namespace gtkey {

std::string to_string(ObjectKind k) {
  switch (k) {
    case ObjectKind::gt: return "gt";
    case ObjectKind::skew: return "skew";
    case ObjectKind::gt_weight: return "gt_weight";
    case ObjectKind::skew_weight: return "skew_weight";
    case ObjectKind::key_complex: return "key_complex";
    case ObjectKind::kogan_face: return "kogan_face";
  }
  return "?";
}

ObjectKind parse_object_kind(const std::string& s) {
  for (ObjectKind k : {ObjectKind::gt, ObjectKind::skew, ObjectKind::gt_weight, ObjectKind::skew_weight,
                       ObjectKind::key_complex, ObjectKind::kogan_face})
    if (to_string(k) == s) return k;
  throw input_error("unknown object kind '" + s + "'");
}

CountedObject CountedObject::gt(Partition lambda) {
  CountedObject o;
  o.kind = ObjectKind::gt;
  o.n = static_cast<int>(lambda.size());
  o.lambda = std::move(lambda);
  PolytopeSpec::triangular(o.lambda);
  return o;
}

CountedObject CountedObject::skew(Partition lambda, Partition mu, int n) {
  CountedObject o;
  o.kind = ObjectKind::skew;
  const std::size_t m = std::max(lambda.size(), mu.size());
  o.lambda = lambda.resized(m);
  o.mu = mu.resized(m);
  o.n = n;
  PolytopeSpec::skew(o.lambda, o.mu, n);
  return o;
}

CountedObject CountedObject::gt_weight(Partition lambda, WeightVector w) {
  CountedObject o;
  o.kind = ObjectKind::gt_weight;
  const std::size_t n = std::max(lambda.size(), w.size());
  std::vector<Entry> wv = w.vec();
  wv.resize(n, 0);
  o.lambda = lambda.resized(n);
  o.weight = WeightVector(std::move(wv));
  o.n = static_cast<int>(n);
  PolytopeSpec::triangular(o.lambda, o.weight);
  return o;
}

CountedObject CountedObject::skew_weight(Partition lambda, Partition mu, WeightVector nu) {
  CountedObject o;
  o.kind = ObjectKind::skew_weight;
  const std::size_t m = std::max(lambda.size(), mu.size());
  o.lambda = lambda.resized(m);
  o.mu = mu.resized(m);
  o.n = static_cast<int>(nu.size());
  o.weight = std::move(nu);
  PolytopeSpec::skew(o.lambda, o.mu, o.n, o.weight);
  return o;
}

CountedObject CountedObject::key_complex(Partition lambda, Permutation sigma) {
  if (static_cast<int>(lambda.size()) != sigma.size()) throw input_error("lambda and sigma must have the same n");
  CountedObject o;
  o.kind = ObjectKind::key_complex;
  o.n = sigma.size();
  o.lambda = std::move(lambda);
  o.sigma = std::move(sigma);
  return o;
}

CountedObject CountedObject::kogan_face(Partition lambda, KoganFace face) {
  if (static_cast<int>(lambda.size()) != face.n) throw input_error("face and lambda must have the same n");
  CountedObject o;
  o.kind = ObjectKind::kogan_face;
  o.n = face.n;
  o.lambda = std::move(lambda);
  o.face = std::move(face);
  return o;
}

int CountedObject::degree_bound() const {
  const int tri = n * (n - 1) / 2;
  const int m = static_cast<int>(lambda.size());
  switch (kind) {
    case ObjectKind::gt: return tri;
    case ObjectKind::skew: return n * m;
    case ObjectKind::gt_weight: return tri - (n - 1);
    case ObjectKind::skew_weight: return n * m - n;
    case ObjectKind::key_complex: return tri - static_cast<int>(perm_length(longest_times(sigma)));
    case ObjectKind::kogan_face: return tri - static_cast<int>(face.cells.size());
  }
  return tri;
}

Integer CountedObject::count(Entry k) const {
  switch (kind) {
    case ObjectKind::gt: return count_points(PolytopeSpec::triangular(lambda), k);
    case ObjectKind::skew: return count_points(PolytopeSpec::skew(lambda, mu, n), k);
    case ObjectKind::gt_weight: return count_points(PolytopeSpec::triangular(lambda, weight), k);
    case ObjectKind::skew_weight: return count_points(PolytopeSpec::skew(lambda, mu, n, weight), k);
    case ObjectKind::key_complex: return count_complex_points(lambda, sigma, k);
    case ObjectKind::kogan_face: return count_points(PolytopeSpec::triangular(lambda), face.cells, k);
  }
  return 0;
}

std::string CountedObject::label() const {
  std::string s = to_string(kind) + " " + to_string(lambda);
  switch (kind) {
    case ObjectKind::gt: break;
    case ObjectKind::skew: s += "/" + to_string(mu) + " n=" + std::to_string(n); break;
    case ObjectKind::gt_weight: s += " w=" + to_string(weight); break;
    case ObjectKind::skew_weight: s += "/" + to_string(mu) + " w=" + to_string(weight); break;
    case ObjectKind::key_complex: s += " sigma=" + to_string(sigma); break;
    case ObjectKind::kogan_face: {
      s += " cells=";
      for (std::size_t i = 0; i < face.cells.size(); ++i)
        s += (i ? ";" : "") + std::to_string(face.cells[i].first) + "," + std::to_string(face.cells[i].second);
      break;
    }
  }
  return s;
}

EhrhartResult fit_counts(const CountedObject& object, int degree_bound, const std::vector<Integer>& counts) {
  if (degree_bound < 0) throw input_error("degree bound must be non-negative");
  const auto need = static_cast<std::size_t>(degree_bound + 1 + kVerifyPoints);
  if (counts.size() < need) throw input_error("not enough samples for the degree bound");
  EhrhartResult r;
  r.object = object;
  r.degree_bound = degree_bound;
  std::vector<std::pair<Rational, Rational>> pts;
  bool all_empty = true;
  for (int k = 0; k <= degree_bound; ++k) {
    const Integer& c = counts[static_cast<std::size_t>(k)];
    r.samples.emplace_back(k, c);
    pts.emplace_back(Rational(k), Rational(c));
    if (k >= 1 && c != 0) all_empty = false;
  }
  for (int t = 1; t <= kVerifyPoints; ++t)
    if (counts[static_cast<std::size_t>(degree_bound + t)] != 0) all_empty = false;
  r.empty = all_empty && degree_bound + kVerifyPoints >= 1;
  if (!r.empty) r.poly = interpolate(pts);
  for (int t = 1; t <= kVerifyPoints; ++t) {
    const Entry k = degree_bound + t;
    const Integer& c = counts[static_cast<std::size_t>(k)];
    const Rational pred = r.poly(Rational(k));
    r.verify_points.push_back({k, c, pred, pred == Rational(c)});
  }
  r.nonneg = r.poly.has_nonnegative_coefficients();
  r.valid = counts[0] == 1;
  for (const auto& v : r.verify_points) r.valid = r.valid && v.matched;
  return r;
}

EhrhartResult ehrhart_of(const CountedObject& object, int degree_bound, const std::function<Integer(Entry)>& count) {
  std::vector<Integer> counts;
  for (int k = 0; k <= degree_bound + kVerifyPoints; ++k) counts.push_back(count(k));
  return fit_counts(object, degree_bound, counts);
}

EhrhartResult ehrhart_of(const CountedObject& object, std::optional<int> degree_bound) {
  return ehrhart_of(object, degree_bound.value_or(object.degree_bound()),
                    [&](Entry k) { return object.count(k); });
}

UniPoly ehrhart_gt_product(const Partition& lambda) {
  const auto n = lambda.size();
  UniPoly p = UniPoly::constant(1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational d(static_cast<long>(j - i));
      p = p * UniPoly({Rational(1), Rational(static_cast<long>(lambda[i] - lambda[j])) / d});
    }
  return p;
}

std::vector<std::vector<int>> flag_sequences(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> b(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int i, int lo) -> void {
    if (i > n) {
      out.push_back(b);
      return;
    }
    for (int v = std::max(lo, i); v <= n; ++v) {
      b[static_cast<std::size_t>(i - 1)] = v;
      self(self, i + 1, v);
    }
  };
  rec(rec, 1, 1);
  return out;
}

namespace {

UniPoly cofactor_det(const std::vector<std::vector<UniPoly>>& m, std::size_t row, std::vector<bool>& used) {
  if (row == m.size()) return UniPoly::constant(1);
  UniPoly det;
  int sign = 1;
  for (std::size_t c = 0; c < m.size(); ++c) {
    if (used[c]) continue;
    if (!m[row][c].is_zero()) {
      used[c] = true;
      UniPoly term = m[row][c] * cofactor_det(m, row + 1, used);
      used[c] = false;
      if (sign > 0)
        det += term;
      else
        det -= term;
    }
    sign = -sign;
  }
  return det;
}

}  // namespace

UniPoly determinant_formula(const Partition& lambda, const std::vector<int>& b) {
  const int n = static_cast<int>(lambda.size());
  if (static_cast<int>(b.size()) != n) throw input_error("flag must have n entries");
  for (int i = 1; i <= n; ++i) {
    const int bi = b[static_cast<std::size_t>(i - 1)];
    if (bi < i || bi > n || (i > 1 && bi < b[static_cast<std::size_t>(i - 2)]))
      throw input_error("invalid flag sequence");
  }
  std::vector<std::vector<UniPoly>> m(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int bi = b[static_cast<std::size_t>(i - 1)];
    const UniPoly x({Rational(bi - i), Rational(static_cast<long>(lambda[static_cast<std::size_t>(i - 1)]))});
    for (int j = 1; j <= n; ++j) m[static_cast<std::size_t>(i - 1)].push_back(falling_binomial(x, bi - j));
  }
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  return cofactor_det(m, 0, used);
}

std::vector<std::vector<int>> flag_matches(const Partition& lambda, const Permutation& sigma) {
  if (!avoids_pattern(sigma, Permutation({2, 3, 1}))) throw input_error("flag_match needs a 231-avoiding permutation");
  const UniPoly target = ehrhart_of(CountedObject::key_complex(lambda, sigma)).poly;
  std::vector<std::vector<int>> out;
  for (const auto& b : flag_sequences(sigma.size()))
    if (determinant_formula(lambda, b) == target) out.push_back(b);
  return out;
}

std::optional<std::vector<int>> flag_match(const Partition& lambda, const Permutation& sigma) {
  auto all = flag_matches(lambda, sigma);
  if (all.empty()) return std::nullopt;
  return all.front();
}

Integer power_sum(int l, Entry k) {
  if (l < 0 || k < 0) throw input_error("power_sum needs l, k >= 0");
  Integer s = 0, t;
  for (Entry j = 1; j <= k + 1; ++j) {
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(l));
    s += t;
  }
  return s;
}

UniPoly faulhaber_face(int l) {
  if (l < 0) throw input_error("faulhaber_face needs l >= 0");
  std::vector<std::pair<Rational, Rational>> pts;
  for (int k = 0; k <= l + 1; ++k) pts.emplace_back(Rational(k), Rational(power_sum(l, k)));
  return interpolate(pts);
}

MultiPoly fit_key_complex_abk(const Permutation& sigma, int grid) {
  if (sigma.size() != 3) throw input_error("the (a, b, k) fit is defined for n = 3");
  if (grid < 1) throw input_error("grid must be positive");
  auto poly_at = [&](int a, int b) {
    const EhrhartResult r = ehrhart_of(CountedObject::key_complex(Partition({a + b, a, 0}), sigma));
    if (!r.valid) throw std::runtime_error("key complex fit failed verification at a=" + std::to_string(a) +
                                           " b=" + std::to_string(b));
    return r.poly;
  };
  std::vector<std::vector<UniPoly>> grid_polys(static_cast<std::size_t>(grid));
  int kdeg = 0;
  for (int a = 0; a < grid; ++a)
    for (int b = 0; b < grid; ++b) {
      grid_polys[static_cast<std::size_t>(a)].push_back(poly_at(a, b));
      kdeg = std::max(kdeg, grid_polys[static_cast<std::size_t>(a)].back().degree());
    }
  MultiPoly out(3);
  for (int d = 0; d <= kdeg; ++d) {
    // Coefficient of k^d as a polynomial in b for each a, then in a.
    std::vector<UniPoly> in_b;
    for (int a = 0; a < grid; ++a) {
      std::vector<std::pair<Rational, Rational>> pts;
      for (int b = 0; b < grid; ++b)
        pts.emplace_back(Rational(b), grid_polys[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].coeff(d));
      in_b.push_back(interpolate(pts));
    }
    for (int e = 0; e < grid; ++e) {
      std::vector<std::pair<Rational, Rational>> pts;
      for (int a = 0; a < grid; ++a) pts.emplace_back(Rational(a), in_b[static_cast<std::size_t>(a)].coeff(e));
      const UniPoly in_a = interpolate(pts);
      for (int f = 0; f <= in_a.degree(); ++f) out.add_term({f, e, d}, in_a.coeff(f));
    }
  }
  // Confirm on the next ring of the grid.
  for (int a = 0; a <= grid; ++a)
    for (int b = 0; b <= grid; ++b) {
      if (a < grid && b < grid) continue;
      const UniPoly p = poly_at(a, b);
      for (int d = 0; d <= std::max(p.degree(), kdeg) + 1; ++d) {
        Rational v = 0;
        for (const auto& [ex, c] : out.terms())
          if (ex[2] == d) {
            Rational t = c;
            for (int i = 0; i < ex[0]; ++i) t *= a;
            for (int i = 0; i < ex[1]; ++i) t *= b;
            v += t;
          }
        if (v != p.coeff(d)) throw std::runtime_error("(a, b, k) fit does not extend beyond the grid");
      }
    }
  return out;
}

}  // namespace gtkey
