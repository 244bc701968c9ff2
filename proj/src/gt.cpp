#include "gtkey/gt.hpp"

#include <algorithm>
#include <sstream>

namespace gtkey {

GTPattern::GTPattern(std::vector<std::vector<Entry>> rows_bottom_up) : rows_(std::move(rows_bottom_up)) {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i].size() != i + 1)
      throw input_error("triangular pattern row " + std::to_string(i + 1) + " must have " +
                        std::to_string(i + 1) + " entries");
}

Partition GTPattern::top() const { return rows_.empty() ? Partition() : Partition(rows_.back()); }

SkewGTPattern::SkewGTPattern(std::vector<std::vector<Entry>> rows_bottom_up) : rows_(std::move(rows_bottom_up)) {
  if (rows_.empty()) throw input_error("skew pattern needs at least one row");
  for (const auto& r : rows_)
    if (r.size() != rows_.front().size()) throw input_error("skew pattern rows must have equal width");
}

Partition SkewGTPattern::top() const { return Partition(rows_.back()); }
Partition SkewGTPattern::bottom() const { return Partition(rows_.front()); }

bool validate_pattern(const GTPattern& p) {
  const int n = p.n();
  for (int i = 1; i < n; ++i)
    for (int j = 1; j <= i; ++j)
      if (!(p.at(i + 1, j) >= p.at(i, j) && p.at(i, j) >= p.at(i + 1, j + 1))) return false;
  // Rows then weakly decrease; checked again as a consistency guard.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < i; ++j)
      if (p.at(i, j) < p.at(i, j + 1)) return false;
  return true;
}

bool validate_pattern(const SkewGTPattern& p) {
  const int n = p.n(), m = p.m();
  for (int i = 0; i <= n; ++i)
    for (int j = 1; j <= m; ++j)
      if (p.at(i, j) < 0) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= m; ++j) {
      if (p.at(i + 1, j) < p.at(i, j)) return false;
      if (j < m && p.at(i, j) < p.at(i + 1, j + 1)) return false;
    }
  return true;
}

namespace {

Entry row_sum(const std::vector<Entry>& r) {
  Entry s = 0;
  for (Entry x : r) s += x;
  return s;
}

}  // namespace

WeightVector weight(const GTPattern& p) {
  std::vector<Entry> w(static_cast<std::size_t>(p.n()));
  Entry prev = 0;
  for (int i = 1; i <= p.n(); ++i) {
    const Entry s = row_sum(p.row(i));
    w[static_cast<std::size_t>(i - 1)] = s - prev;
    prev = s;
  }
  return WeightVector(std::move(w));
}

WeightVector weight(const SkewGTPattern& p) {
  std::vector<Entry> w(static_cast<std::size_t>(p.n()));
  Entry prev = row_sum(p.row(0));
  for (int i = 1; i <= p.n(); ++i) {
    const Entry s = row_sum(p.row(i));
    w[static_cast<std::size_t>(i - 1)] = s - prev;
    prev = s;
  }
  return WeightVector(std::move(w));
}

namespace {

// Shared row/column check. cell(r, c) returns 0 for cells outside the skew shape.
bool semistandard_rows(const Partition& outer, const Partition& inner,
                       const std::vector<std::vector<int>>& rows, int max_entry) {
  if (rows.size() > outer.size()) return false;
  for (std::size_t r = 0; r < outer.size(); ++r) {
    const Entry width = outer[r] - inner.at_or_zero(r);
    if (width < 0) return false;
    const std::size_t have = r < rows.size() ? rows[r].size() : 0;
    if (static_cast<Entry>(have) != width) return false;
  }
  auto cell = [&](std::size_t r, Entry c) -> int {  // c is a 0-based column
    const Entry start = inner.at_or_zero(r);
    if (r >= rows.size() || c < start || c >= outer[r]) return 0;
    return rows[r][static_cast<std::size_t>(c - start)];
  };
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const int v = rows[r][c];
      if (v < 1 || v > max_entry) return false;
      if (c + 1 < rows[r].size() && rows[r][c + 1] < v) return false;
    }
    if (r + 1 < rows.size()) {
      const Entry start = inner.at_or_zero(r);
      for (Entry c = start; c < outer[r]; ++c) {
        const int below = cell(r + 1, c);
        if (below != 0 && below <= cell(r, c)) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_semistandard(const SSYT& t, int max_entry) {
  return semistandard_rows(t.shape, Partition(), t.rows, max_entry);
}

bool is_semistandard(const SkewSSYT& t, int max_entry) {
  if (!t.outer.contains(t.inner) || t.inner.size() > t.outer.size()) return false;
  return semistandard_rows(t.outer, t.inner, t.rows, max_entry);
}

SSYT pattern_to_tableau(const GTPattern& p) {
  const int n = p.n();
  SSYT t{p.top(), std::vector<std::vector<int>>(static_cast<std::size_t>(n))};
  // Row r holds x_{v,r} - x_{v-1,r} copies of v; x_{v,r} = 0 when r > v.
  for (int r = 1; r <= n; ++r) {
    auto& out = t.rows[static_cast<std::size_t>(r - 1)];
    Entry prev = 0;
    for (int v = r; v <= n; ++v) {
      const Entry cur = p.at(v, r);
      for (Entry c = prev; c < cur; ++c) out.push_back(v);
      prev = cur;
    }
  }
  return t;
}

GTPattern tableau_to_pattern(const SSYT& t, int n) {
  if (static_cast<int>(t.shape.size()) > n) {
    // Tolerate trailing zero parts beyond n.
    for (std::size_t r = static_cast<std::size_t>(n); r < t.shape.size(); ++r)
      if (t.shape[r] != 0) throw input_error("tableau has more than n rows");
  }
  if (!is_semistandard(t, n)) throw input_error("not a semi-standard tableau with entries <= n");
  std::vector<std::vector<Entry>> rows(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) {
    auto& row = rows[static_cast<std::size_t>(v - 1)];
    for (int r = 1; r <= v; ++r) {
      Entry cnt = 0;
      if (static_cast<std::size_t>(r) <= t.rows.size())
        for (int e : t.rows[static_cast<std::size_t>(r - 1)])
          if (e <= v) ++cnt;
      row.push_back(cnt);
    }
  }
  return GTPattern(std::move(rows));
}

SkewSSYT pattern_to_tableau(const SkewGTPattern& p) {
  const int n = p.n(), m = p.m();
  SkewSSYT t{p.top(), p.bottom(), std::vector<std::vector<int>>(static_cast<std::size_t>(m))};
  for (int r = 1; r <= m; ++r) {
    auto& out = t.rows[static_cast<std::size_t>(r - 1)];
    for (int v = 1; v <= n; ++v)
      for (Entry c = p.at(v - 1, r); c < p.at(v, r); ++c) out.push_back(v);
  }
  return t;
}

SkewGTPattern tableau_to_pattern(const SkewSSYT& t, int n) {
  if (!is_semistandard(t, n)) throw input_error("not a semi-standard skew tableau with entries <= n");
  const std::size_t m = t.outer.size();
  std::vector<std::vector<Entry>> rows(static_cast<std::size_t>(n + 1), std::vector<Entry>(m, 0));
  for (int v = 0; v <= n; ++v)
    for (std::size_t r = 0; r < m; ++r) {
      Entry cnt = t.inner.at_or_zero(r);
      if (r < t.rows.size())
        for (int e : t.rows[r])
          if (e <= v) ++cnt;
      rows[static_cast<std::size_t>(v)][r] = cnt;
    }
  return SkewGTPattern(std::move(rows));
}

namespace {

std::string staggered(const std::vector<std::vector<Entry>>& rows_top_down, const std::vector<int>& indent) {
  std::size_t w = 1;
  for (const auto& r : rows_top_down)
    for (Entry x : r) w = std::max(w, std::to_string(x).size());
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_top_down.size(); ++i) {
    os << std::string(static_cast<std::size_t>(indent[i]) * w, ' ');
    for (std::size_t j = 0; j < rows_top_down[i].size(); ++j) {
      const std::string s = std::to_string(rows_top_down[i][j]);
      if (j) os << std::string(w, ' ');
      os << std::string(w - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string to_display_string(const GTPattern& p) {
  std::vector<std::vector<Entry>> rows(p.rows().rbegin(), p.rows().rend());
  std::vector<int> indent;
  for (int i = 0; i < p.n(); ++i) indent.push_back(i);
  return staggered(rows, indent);
}

std::string to_display_string(const SkewGTPattern& p) {
  std::vector<std::vector<Entry>> rows(p.rows().rbegin(), p.rows().rend());
  std::vector<int> indent;
  for (int i = 0; i <= p.n(); ++i) indent.push_back(i);
  return staggered(rows, indent);
}

}  // namespace gtkey
