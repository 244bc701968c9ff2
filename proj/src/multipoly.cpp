#include "gtkey/multipoly.hpp"

#include <numeric>
#include <sstream>

namespace gtkey {

bool GradedLexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const long da = std::accumulate(a.begin(), a.end(), 0L);
  const long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da > db;
  return b < a;
}

MultiPoly MultiPoly::monomial(Exponent e, const Rational& c) {
  MultiPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  return monomial(Exponent(static_cast<std::size_t>(nvars), 0), c);
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw input_error("variable index out of range");
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i - 1)] = 1;
  return monomial(std::move(e));
}

Rational MultiPoly::coefficient(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw input_error("exponent length does not match the number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_arity(const MultiPoly& o) const {
  if (o.nvars_ != nvars_) throw input_error("polynomials have different numbers of variables");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_arity(b);
  MultiPoly r(a.nvars_);
  Exponent e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(nvars_, 1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

MultiPoly MultiPoly::times_monomial(const Exponent& m) const {
  if (static_cast<int>(m.size()) != nvars_) throw input_error("exponent length does not match the number of variables");
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += m[i];
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = degree();
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
  return true;
}

bool MultiPoly::has_nonnegative_integer_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (c < 0 || c.get_den() != 1) return false;
  return true;
}

bool MultiPoly::has_nonnegative_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

Rational MultiPoly::eval_ones() const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != nvars_) throw input_error("evaluation point has the wrong dimension");
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    s += t;
  }
  return s;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool any_var = false;
    std::ostringstream vars;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any_var) vars << '*';
      vars << (names.empty() ? "z" + std::to_string(i + 1) : names[i]);
      if (e[i] > 1) vars << '^' << e[i];
      any_var = true;
    }
    if (!any_var)
      os << mag.get_str();
    else if (mag == 1)
      os << vars.str();
    else
      os << mag.get_str() << '*' << vars.str();
  }
  return os.str();
}

}  // namespace gtkey
