#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "gtkey/numeric.hpp"

namespace gtkey {

using Exponent = std::vector<int>;

/// Graded lexicographic order with z_1 > z_2 > ... > z_n; "less" means "printed first".
struct GradedLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse polynomial in a fixed number of variables with exact rational
/// coefficients. Zero coefficients are never stored.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Rational, GradedLexGreater>;

  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  static MultiPoly monomial(Exponent e, const Rational& c = 1);
  static MultiPoly constant(int nvars, const Rational& c);
  /// z_i, 1-based.
  static MultiPoly variable(int nvars, int i);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const { return *this * Rational(-1); }
  MultiPoly pow(unsigned e) const;
  MultiPoly times_monomial(const Exponent& e) const;

  bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  bool has_nonnegative_integer_coefficients() const;
  bool has_nonnegative_coefficients() const;

  Rational eval_ones() const;
  Rational evaluate(std::span<const Rational> point) const;

  /// e.g. "z1^2*z2 + 1/2*z3"; names default to z1..zn.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void check_arity(const MultiPoly& o) const;

  int nvars_;
  TermMap terms_;
};

}  // namespace gtkey
