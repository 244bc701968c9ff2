#pragma once

// Gelfand-Tsetlin patterns and their tableau bijection.
//
// Rows are stored bottom-to-top. In a triangular pattern row i (1 <= i <= n)
// has i entries x_{i1} >= ... >= x_{ii} and the top row n is lambda. In a skew
// (parallelogram) pattern rows 0..n all have m entries; row n is lambda and
// row 0 is mu. Adjacent rows interlace: x_{i+1,j} >= x_{ij} >= x_{i+1,j+1}.

#include <string>
#include <vector>

#include "gtkey/combinat.hpp"

namespace gtkey {

class GTPattern {
 public:
  GTPattern() = default;
  /// rows[0] is row 1 (one entry), rows.back() is the top row. Throws on bad shape.
  explicit GTPattern(std::vector<std::vector<Entry>> rows_bottom_up);

  int n() const { return static_cast<int>(rows_.size()); }
  /// x_{ij}, 1-based.
  Entry at(int i, int j) const { return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }
  const std::vector<Entry>& row(int i) const { return rows_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<std::vector<Entry>>& rows() const { return rows_; }
  Partition top() const;

  auto operator<=>(const GTPattern&) const = default;

 private:
  std::vector<std::vector<Entry>> rows_;
};

class SkewGTPattern {
 public:
  SkewGTPattern() = default;
  /// rows[0] is mu, rows.back() is lambda; n+1 rows of equal width m.
  explicit SkewGTPattern(std::vector<std::vector<Entry>> rows_bottom_up);

  int n() const { return static_cast<int>(rows_.size()) - 1; }
  int m() const { return rows_.empty() ? 0 : static_cast<int>(rows_.front().size()); }
  /// x_{ij} with 0 <= i <= n, 1 <= j <= m.
  Entry at(int i, int j) const { return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)]; }
  const std::vector<Entry>& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
  const std::vector<std::vector<Entry>>& rows() const { return rows_; }
  Partition top() const;
  Partition bottom() const;

  auto operator<=>(const SkewGTPattern&) const = default;

 private:
  std::vector<std::vector<Entry>> rows_;
};

bool validate_pattern(const GTPattern& p);
bool validate_pattern(const SkewGTPattern& p);

/// weight_i = rowsum(i) - rowsum(i-1), with rowsum(0) = 0 (triangular) or |mu| (skew).
WeightVector weight(const GTPattern& p);
WeightVector weight(const SkewGTPattern& p);

/// Semi-standard tableau of straight shape. rows[r] lists row r left to right;
/// shape may carry trailing zeros.
struct SSYT {
  Partition shape;
  std::vector<std::vector<int>> rows;

  auto operator<=>(const SSYT&) const = default;
};

/// Skew tableau; rows[r] lists the cells of columns inner[r]+1 .. outer[r].
struct SkewSSYT {
  Partition outer;
  Partition inner;
  std::vector<std::vector<int>> rows;

  auto operator<=>(const SkewSSYT&) const = default;
};

/// Row/column conditions and entries in 1..max_entry.
bool is_semistandard(const SSYT& t, int max_entry);
bool is_semistandard(const SkewSSYT& t, int max_entry);

SSYT pattern_to_tableau(const GTPattern& p);
GTPattern tableau_to_pattern(const SSYT& t, int n);
SkewSSYT pattern_to_tableau(const SkewGTPattern& p);
SkewGTPattern tableau_to_pattern(const SkewSSYT& t, int n);

/// Multiline display, top row first, entries staggered as in the usual drawing.
std::string to_display_string(const GTPattern& p);
std::string to_display_string(const SkewGTPattern& p);

}  // namespace gtkey
