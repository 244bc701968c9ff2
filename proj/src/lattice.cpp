#include "gtkey/lattice.hpp"

#include <algorithm>
#include <limits>

namespace gtkey {

PolytopeSpec PolytopeSpec::triangular(Partition lambda, std::optional<WeightVector> w) {
  PolytopeSpec s;
  s.kind = PolytopeKind::triangular;
  s.n = static_cast<int>(lambda.size());
  s.top = std::move(lambda);
  s.weight = std::move(w);
  s.validate();
  return s;
}

PolytopeSpec PolytopeSpec::skew(Partition lambda, Partition mu, int n, std::optional<WeightVector> w) {
  PolytopeSpec s;
  s.kind = PolytopeKind::skew;
  const std::size_t m = std::max(lambda.size(), mu.size());
  s.top = lambda.resized(m);
  s.bottom = mu.resized(m);
  s.n = n;
  s.weight = std::move(w);
  s.validate();
  return s;
}

int PolytopeSpec::width() const {
  return kind == PolytopeKind::triangular ? n : static_cast<int>(std::max(top.size(), bottom.size()));
}

PolytopeSpec PolytopeSpec::dilated(Entry k) const {
  if (k < 0) throw input_error("dilation factor must be non-negative");
  PolytopeSpec s = *this;
  s.top = top.dilated(k);
  s.bottom = bottom.dilated(k);
  if (weight) s.weight = weight->dilated(k);
  return s;
}

void PolytopeSpec::validate() const {
  if (n < 1) throw input_error("polytope needs n >= 1");
  if (kind == PolytopeKind::triangular) {
    if (static_cast<int>(top.size()) != n) throw input_error("triangular polytope: lambda must have n parts");
    if (!bottom.empty()) throw input_error("triangular polytope has no bottom row");
  } else {
    if (top.size() != bottom.size()) throw input_error("skew polytope: lambda and mu must be padded to equal width");
    if (!top.contains(bottom)) throw input_error("skew polytope: mu must be contained in lambda");
  }
  if (weight && static_cast<int>(weight->size()) != n)
    throw input_error("weight must have n = " + std::to_string(n) + " entries");
}

GTPattern PatternView::triangular() const {
  std::vector<std::vector<Entry>> rows(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= i; ++j) rows[static_cast<std::size_t>(i - 1)].push_back(at(i, j));
  return GTPattern(std::move(rows));
}

SkewGTPattern PatternView::skew() const {
  std::vector<std::vector<Entry>> rows(static_cast<std::size_t>(n_ + 1));
  for (int i = 0; i <= n_; ++i)
    for (int j = 1; j <= m_; ++j) rows[static_cast<std::size_t>(i)].push_back(at(i, j));
  return SkewGTPattern(std::move(rows));
}

namespace {

// Exact count accumulator: machine words until they overflow, then GMP.
class Tally {
 public:
  void add(const std::vector<Entry>& factors) {
    unsigned __int128 prod = 1;
    bool small = true;
    for (Entry f : factors) {
      if (f == 0) return;
      const auto uf = static_cast<unsigned __int128>(f);
      if (prod > std::numeric_limits<unsigned __int128>::max() / uf) {
        small = false;
        break;
      }
      prod *= uf;
    }
    if (small && prod <= std::numeric_limits<unsigned __int128>::max() - fast_) {
      fast_ += prod;
      return;
    }
    Integer p = 1;
    for (Entry f : factors) p *= Integer(static_cast<long>(f));
    big_ += p;
  }
  void add_one() {
    if (fast_ == std::numeric_limits<unsigned __int128>::max()) flush();
    ++fast_;
  }
  Integer total() {
    flush();
    return big_;
  }

 private:
  void flush() {
    const auto hi = static_cast<unsigned long>(fast_ >> 64);
    const auto lo = static_cast<unsigned long>(fast_);
    Integer v = hi;
    v <<= 64;
    v += lo;
    big_ += v;
    fast_ = 0;
  }
  unsigned __int128 fast_ = 0;
  Integer big_ = 0;
};

class Search {
 public:
  Search(const PolytopeSpec& spec, const std::vector<EqualityCell>& equalities)
      : n_(spec.n), m_(spec.width()), triangular_(spec.kind == PolytopeKind::triangular) {
    spec.validate();
    const auto N = static_cast<std::size_t>((n_ + 1) * m_);
    x_.assign(N, 0);
    lo_.assign(N, 0);
    hi_.assign(N, 0);
    suf_lo_.assign(static_cast<std::size_t>((n_ + 1) * (m_ + 1)), 0);
    suf_hi_.assign(static_cast<std::size_t>((n_ + 1) * (m_ + 1)), 0);
    forced_.assign(N, 0);
    for (int j = 1; j <= m_; ++j) {
      x(n_, j) = spec.top.at_or_zero(static_cast<std::size_t>(j - 1));
      x(0, j) = triangular_ ? 0 : spec.bottom[static_cast<std::size_t>(j - 1)];
    }
    for (const auto& [i, j] : equalities) {
      if (!triangular_) throw input_error("face equalities apply to triangular patterns only");
      if (i < 1 || i > n_ - 1 || j < 1 || j > i)
        throw input_error("equality cell (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
      forced_[idx(i, j)] = 1;
    }
    if (spec.weight) {
      weighted_ = true;
      target_.assign(static_cast<std::size_t>(n_ + 1), 0);
      Entry s = 0;
      for (int j = 1; j <= m_; ++j) s += x(0, j);
      target_[0] = s;
      for (int i = 1; i <= n_; ++i) target_[static_cast<std::size_t>(i)] = s = checked_add(s, (*spec.weight)[static_cast<std::size_t>(i - 1)]);
    }
    feasible_ = top_feasible();
  }

  void run(const PointVisitor& visit) {
    visit_ = &visit;
    counting_ = false;
    if (feasible_) descend(n_ - 1);
  }

  Integer count() {
    counting_ = true;
    if (feasible_) descend(n_ - 1);
    return tally_.total();
  }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i * m_ + (j - 1)); }
  Entry& x(int i, int j) { return x_[idx(i, j)]; }
  Entry x(int i, int j) const { return x_[idx(i, j)]; }
  std::size_t sidx(int i, int j) const { return static_cast<std::size_t>(i * (m_ + 1) + (j - 1)); }

  // mu ⊆ lambda is validated; the columns of lambda/mu must also fit in n rows.
  bool top_feasible() const {
    for (int j = 1; j <= m_; ++j) {
      if (x(n_, j) < x(0, j)) return false;
      if (j - n_ >= 1 && x(n_, j) > x(0, j - n_)) return false;
    }
    if (weighted_) {
      Entry s = 0;
      for (int j = 1; j <= m_; ++j) s += x(n_, j);
      if (s != target_[static_cast<std::size_t>(n_)]) return false;
    }
    return true;
  }

  Entry lower(int i, int j) const {
    const Entry diag = j < m_ ? x(i + 1, j + 1) : 0;
    return std::max(diag, x(0, j));
  }
  Entry upper(int i, int j) const {
    const Entry up = x(i + 1, j);
    return j - i >= 1 ? std::min(up, x(0, j - i)) : up;
  }

  // Interval of each entry of row i, given row i+1. Returns false if some interval is empty.
  bool row_bounds(int i) {
    for (int j = 1; j <= m_; ++j) {
      Entry lo = lower(i, j), hi = upper(i, j);
      if (forced_[idx(i, j)]) {
        const Entry v = x(i + 1, j);
        if (v < lo || v > hi) return false;
        lo = hi = v;
      }
      if (lo > hi) return false;
      lo_[idx(i, j)] = lo;
      hi_[idx(i, j)] = hi;
    }
    suf_lo_[sidx(i, m_ + 1)] = 0;
    suf_hi_[sidx(i, m_ + 1)] = 0;
    for (int j = m_; j >= 1; --j) {
      suf_lo_[sidx(i, j)] = suf_lo_[sidx(i, j + 1)] + lo_[idx(i, j)];
      suf_hi_[sidx(i, j)] = suf_hi_[sidx(i, j + 1)] + hi_[idx(i, j)];
    }
    return true;
  }

  // Necessary condition for row i: its achievable sums must reach the target.
  bool row_sum_reachable(int i) const {
    Entry lo = 0, hi = 0;
    for (int j = 1; j <= m_; ++j) {
      lo += lower(i, j);
      hi += upper(i, j);
    }
    const Entry t = target_[static_cast<std::size_t>(i)];
    return lo <= t && t <= hi;
  }

  void descend(int i) {
    if (i == 0) {
      leaf();
      return;
    }
    if (!row_bounds(i)) return;
    if (weighted_) {
      const Entry t = target_[static_cast<std::size_t>(i)];
      if (t < suf_lo_[sidx(i, 1)] || t > suf_hi_[sidx(i, 1)]) return;
    } else if (counting_ && i == 1) {
      // Row 1 entries are independent: multiply the interval lengths.
      factors_.clear();
      for (int j = 1; j <= m_; ++j) factors_.push_back(hi_[idx(1, j)] - lo_[idx(1, j)] + 1);
      tally_.add(factors_);
      return;
    }
    place(i, 1, 0);
  }

  void place(int i, int j, Entry partial) {
    if (j > m_) {
      if (weighted_ && i > 1 && !row_sum_reachable(i - 1)) return;
      descend(i - 1);
      return;
    }
    Entry lo = lo_[idx(i, j)], hi = hi_[idx(i, j)];
    if (weighted_) {
      const Entry rest = target_[static_cast<std::size_t>(i)] - partial;
      lo = std::max(lo, rest - suf_hi_[sidx(i, j + 1)]);
      hi = std::min(hi, rest - suf_lo_[sidx(i, j + 1)]);
    }
    for (Entry v = lo; v <= hi; ++v) {
      x(i, j) = v;
      place(i, j + 1, partial + v);
    }
  }

  void leaf() {
    if (counting_) {
      tally_.add_one();
      return;
    }
    (*visit_)(PatternView(x_.data(), n_, m_, triangular_));
  }

  int n_;
  int m_;
  bool triangular_;
  bool weighted_ = false;
  bool feasible_ = true;
  bool counting_ = false;
  std::vector<Entry> x_, lo_, hi_, suf_lo_, suf_hi_, target_;
  std::vector<char> forced_;
  std::vector<Entry> factors_;
  const PointVisitor* visit_ = nullptr;
  Tally tally_;
};

}  // namespace

void for_each_point(const PolytopeSpec& spec, const PointVisitor& visit) { for_each_point(spec, {}, visit); }

void for_each_point(const PolytopeSpec& spec, const std::vector<EqualityCell>& equalities, const PointVisitor& visit) {
  Search(spec, equalities).run(visit);
}

std::vector<GTPattern> enumerate_points(const PolytopeSpec& spec) {
  if (spec.kind != PolytopeKind::triangular) throw input_error("enumerate_points: triangular spec expected");
  std::vector<GTPattern> out;
  for_each_point(spec, [&](const PatternView& v) { out.push_back(v.triangular()); });
  return out;
}

std::vector<SkewGTPattern> enumerate_skew_points(const PolytopeSpec& spec) {
  std::vector<SkewGTPattern> out;
  for_each_point(spec, [&](const PatternView& v) { out.push_back(v.skew()); });
  return out;
}

Integer count_points(const PolytopeSpec& spec, Entry k) { return count_points(spec, {}, k); }

Integer count_points(const PolytopeSpec& spec, const std::vector<EqualityCell>& equalities, Entry k) {
  return Search(spec.dilated(k), equalities).count();
}

}  // namespace gtkey
