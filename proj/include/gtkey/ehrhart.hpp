#pragma once

// Ehrhart polynomials by exact interpolation, closed product and determinant
// formulas, and the power-sum face.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gtkey/kogan.hpp"
#include "gtkey/multipoly.hpp"
#include "gtkey/unipoly.hpp"

namespace gtkey {

enum class ObjectKind { gt, skew, gt_weight, skew_weight, key_complex, kogan_face };

std::string to_string(ObjectKind k);
ObjectKind parse_object_kind(const std::string& s);

/// A family of lattice-point sets indexed by the dilation k.
struct CountedObject {
  ObjectKind kind = ObjectKind::gt;
  Partition lambda;
  Partition mu;         // skew, skew_weight
  WeightVector weight;  // gt_weight, skew_weight
  int n = 0;
  Permutation sigma;  // key_complex
  KoganFace face;     // kogan_face

  static CountedObject gt(Partition lambda);
  static CountedObject skew(Partition lambda, Partition mu, int n);
  static CountedObject gt_weight(Partition lambda, WeightVector w);
  static CountedObject skew_weight(Partition lambda, Partition mu, WeightVector nu);
  static CountedObject key_complex(Partition lambda, Permutation sigma);
  static CountedObject kogan_face(Partition lambda, KoganFace face);

  /// Upper bound on the degree of the counting function.
  int degree_bound() const;
  /// Number of lattice points of the k-th dilate.
  Integer count(Entry k) const;
  /// Short human-readable name, e.g. "skew 3,2,1/2,1 n=3".
  std::string label() const;
};

struct VerifyPoint {
  Entry k;
  Integer count;
  Rational predicted;
  bool matched;
};

struct EhrhartResult {
  CountedObject object;
  UniPoly poly;
  int degree_bound = 0;
  std::vector<std::pair<Entry, Integer>> samples;  // k = 0..degree_bound
  std::vector<VerifyPoint> verify_points;          // k = degree_bound+1, +2
  bool nonneg = true;
  bool valid = true;
  /// Every dilate with k >= 1 is empty; poly is then the zero polynomial.
  bool empty = false;
};

/// Number of extra dilations used to confirm a fit.
inline constexpr int kVerifyPoints = 2;

/// Fits counts[k] for k = 0..D+kVerifyPoints (D = degree bound).
EhrhartResult fit_counts(const CountedObject& object, int degree_bound, const std::vector<Integer>& counts);
/// Samples, interpolates and verifies; degree_bound defaults to object.degree_bound().
EhrhartResult ehrhart_of(const CountedObject& object, std::optional<int> degree_bound = std::nullopt);
/// Same, with counts supplied by a callback (used for caching).
EhrhartResult ehrhart_of(const CountedObject& object, int degree_bound, const std::function<Integer(Entry)>& count);

/// prod_{i<j} (k(lambda_i - lambda_j) + j - i) / (j - i).
UniPoly ehrhart_gt_product(const Partition& lambda);

/// Non-decreasing b with i <= b_i <= n, in lexicographic order.
std::vector<std::vector<int>> flag_sequences(int n);
/// det( binom(k lambda_i + b_i - i, b_i - j) ), by cofactor expansion.
UniPoly determinant_formula(const Partition& lambda, const std::vector<int>& b);
/// First flag whose determinant equals the key-complex Ehrhart polynomial.
std::optional<std::vector<int>> flag_match(const Partition& lambda, const Permutation& sigma);
/// Every flag whose determinant equals the key-complex Ehrhart polynomial.
std::vector<std::vector<int>> flag_matches(const Partition& lambda, const Permutation& sigma);

/// sum_{j=1}^{k+1} j^l as a polynomial in k.
UniPoly faulhaber_face(int l);
/// Direct big-integer value of sum_{j=1}^{k+1} j^l.
Integer power_sum(int l, Entry k);

/// Fits the key-complex Ehrhart polynomial of lambda = (a+b, a, 0) as a
/// polynomial in (a, b, k) from the grid a, b in {0..grid-1}.
MultiPoly fit_key_complex_abk(const Permutation& sigma, int grid = 4);

}  // namespace gtkey
