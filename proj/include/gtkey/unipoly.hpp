#pragma once

// Univariate polynomials in the dilation variable k with rational coefficients.

#include <string>
#include <utility>
#include <vector>

#include "gtkey/numeric.hpp"

namespace gtkey {

class UniPoly {
 public:
  UniPoly() = default;
  /// coeffs[d] is the coefficient of k^d; trailing zeros are trimmed.
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(const Rational& c);
  /// The polynomial k.
  static UniPoly variable();

  const std::vector<Rational>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int d) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  Rational operator()(const Rational& k) const;
  bool has_nonnegative_coefficients() const;
  /// Indices d with a negative coefficient of k^d.
  std::vector<int> negative_indices() const;

  /// "1/2*k^2 + 3/2*k + 1", highest degree first.
  std::string to_string() const;
  /// Common denominator pulled out: "1/8 (k^6 + 9k^5 + ... + 8)".
  std::string to_scaled_string() const;
  /// Coefficients lowest degree first, as exact strings.
  std::vector<std::string> coeff_strings() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Unique polynomial of degree < samples.size() through the points (k, value).
/// Throws input_error on repeated k or an empty sample list.
UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& samples);

/// binom(x, r) = x(x-1)...(x-r+1)/r! for polynomial x; 0 for r < 0, 1 for r = 0.
UniPoly falling_binomial(const UniPoly& x, int r);

}  // namespace gtkey
