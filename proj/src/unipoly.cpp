#include "gtkey/unipoly.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace gtkey {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }
UniPoly UniPoly::variable() { return UniPoly({Rational(0), Rational(1)}); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::coeff(int d) const {
  return d >= 0 && d < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(d)] : Rational(0);
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(r));
}

Rational UniPoly::operator()(const Rational& k) const {
  Rational v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * k + *it;
  return v;
}

bool UniPoly::has_nonnegative_coefficients() const { return negative_indices().empty(); }

std::vector<int> UniPoly::negative_indices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] < 0) out.push_back(static_cast<int>(i));
  return out;
}

namespace {

std::string power(int d) {
  if (d == 0) return "";
  if (d == 1) return "k";
  return "k^" + std::to_string(d);
}

// Terms highest degree first; sep joins a coefficient to its power.
std::string render(const std::vector<Rational>& c, const char* sep) {
  std::ostringstream os;
  bool first = true;
  for (int d = static_cast<int>(c.size()) - 1; d >= 0; --d) {
    const Rational& v = c[static_cast<std::size_t>(d)];
    if (v == 0) continue;
    const Rational mag = abs(v);
    if (first)
      os << (v < 0 ? "-" : "");
    else
      os << (v < 0 ? " - " : " + ");
    first = false;
    if (d == 0)
      os << mag.get_str();
    else if (mag == 1)
      os << power(d);
    else
      os << mag.get_str() << sep << power(d);
  }
  return first ? "0" : os.str();
}

}  // namespace

std::string UniPoly::to_string() const { return render(c_, "*"); }

std::string UniPoly::to_scaled_string() const {
  if (c_.empty()) return "0";
  Integer den = 1;
  for (const auto& c : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  if (den == 1) return render(c_, "");
  std::vector<Rational> scaled;
  for (const auto& c : c_) scaled.push_back(c * Rational(den));
  return "1/" + den.get_str() + " (" + render(scaled, "") + ")";
}

std::vector<std::string> UniPoly::coeff_strings() const {
  std::vector<std::string> out;
  for (const auto& c : c_) out.push_back(c.get_str());
  return out;
}

UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& samples) {
  if (samples.empty()) throw input_error("interpolation needs at least one sample");
  std::set<Rational> ks;
  for (const auto& s : samples)
    if (!ks.insert(s.first).second) throw input_error("repeated sample point " + s.first.get_str());
  // Newton divided differences, then expansion in the monomial basis.
  const std::size_t m = samples.size();
  std::vector<Rational> dd;
  for (const auto& s : samples) dd.push_back(s.second);
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (samples[i].first - samples[i - level].first);
  UniPoly result = UniPoly::constant(dd[m - 1]);
  for (std::size_t i = m - 1; i-- > 0;) {
    result = result * UniPoly({-samples[i].first, Rational(1)});
    result += UniPoly::constant(dd[i]);
  }
  return result;
}

UniPoly falling_binomial(const UniPoly& x, int r) {
  if (r < 0) return UniPoly();
  UniPoly p = UniPoly::constant(1);
  Integer fact = 1;
  for (int t = 0; t < r; ++t) {
    p = p * (x - UniPoly::constant(t));
    fact *= t + 1;
  }
  return p * Rational(Integer(1), fact);
}

}  // namespace gtkey
