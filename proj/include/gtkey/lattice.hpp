#pragma once

// Integer points of GT(lambda), GT(lambda/mu) and their weight slices.
//
// Points are generated top row first: given row i+1, each entry of row i
// ranges over an interval that depends only on its two upper neighbours and
// on mu, so every partial pattern extends and no branch dead-ends. With a
// weight filter every row sum is fixed and entries are pruned by running
// row-sum bounds. Output order is lexicographic in the rows read top to
// bottom, left to right.

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "gtkey/gt.hpp"

namespace gtkey {

enum class PolytopeKind { triangular, skew };

struct PolytopeSpec {
  PolytopeKind kind = PolytopeKind::triangular;
  Partition top;                       // lambda
  Partition bottom;                    // mu, skew only
  std::optional<WeightVector> weight;  // restricts to GT(lambda, w) / GT(lambda/mu, w)
  int n = 0;                           // rows 1..n are free except the top row n

  static PolytopeSpec triangular(Partition lambda, std::optional<WeightVector> w = std::nullopt);
  /// Skew with n letters; lambda and mu are padded to a common width.
  static PolytopeSpec skew(Partition lambda, Partition mu, int n, std::optional<WeightVector> w = std::nullopt);

  /// Width m of each row in the parallelogram representation (n for triangular).
  int width() const;
  PolytopeSpec dilated(Entry k) const;
  /// Throws input_error on inconsistent shapes.
  void validate() const;

  bool operator==(const PolytopeSpec&) const = default;
};

/// Cell (i, j) with 1 <= j <= i <= n-1 imposes x_{ij} = x_{i+1,j}.
using EqualityCell = std::pair<int, int>;

/// Read-only view of the pattern under construction, valid during a visit.
class PatternView {
 public:
  PatternView(const Entry* data, int n, int m, bool triangular) : data_(data), n_(n), m_(m), triangular_(triangular) {}

  int n() const { return n_; }
  int m() const { return m_; }
  /// x_{ij}; row 0 is mu (zeros for triangular patterns).
  Entry at(int i, int j) const { return data_[i * m_ + (j - 1)]; }

  GTPattern triangular() const;
  SkewGTPattern skew() const;

 private:
  const Entry* data_;
  int n_;
  int m_;
  bool triangular_;
};

using PointVisitor = std::function<void(const PatternView&)>;

/// Visits every integer point exactly once in canonical order.
void for_each_point(const PolytopeSpec& spec, const PointVisitor& visit);
/// Same, restricted to the face cut out by the given equalities (triangular only).
void for_each_point(const PolytopeSpec& spec, const std::vector<EqualityCell>& equalities, const PointVisitor& visit);

std::vector<GTPattern> enumerate_points(const PolytopeSpec& spec);
std::vector<SkewGTPattern> enumerate_skew_points(const PolytopeSpec& spec);

/// |k P ∩ Z^d|, enumerating the spec with top k*lambda, bottom k*mu, weight k*w.
Integer count_points(const PolytopeSpec& spec, Entry k = 1);
Integer count_points(const PolytopeSpec& spec, const std::vector<EqualityCell>& equalities, Entry k = 1);

}  // namespace gtkey
