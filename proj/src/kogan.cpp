#include "gtkey/kogan.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "gtkey/polyops.hpp"

namespace gtkey {

KoganFace KoganFace::make(int n, std::vector<EqualityCell> cells) {
  if (n < 1) throw input_error("face needs n >= 1");
  std::sort(cells.begin(), cells.end());
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end()) throw input_error("face has a repeated cell");
  for (const auto& [i, j] : cells)
    if (i < 1 || i > n - 1 || j < 1 || j > i)
      throw input_error("cell (" + std::to_string(i) + "," + std::to_string(j) + ") out of range for n = " +
                        std::to_string(n));
  return KoganFace{n, std::move(cells)};
}

std::vector<EqualityCell> all_cells(int n) {
  std::vector<EqualityCell> out;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= i; ++j) out.emplace_back(i, j);
  return out;
}

int cell_letter(int n, const EqualityCell& c) { return n - c.first + c.second - 1; }

Word face_word(const KoganFace& f) {
  Word w;
  for (const auto& c : f.cells) w.letters.push_back(cell_letter(f.n, c));
  return w;
}

bool is_reduced_face(const KoganFace& f) { return is_reduced(face_word(f), f.n); }

std::optional<Permutation> face_type(const KoganFace& f) {
  const Word w = face_word(f);
  if (!is_reduced(w, f.n)) return std::nullopt;
  return word_to_perm(w, f.n);
}

int face_dimension(const KoganFace& f) { return f.n * (f.n - 1) / 2 - static_cast<int>(f.cells.size()); }

namespace {

// Subsets of the cells, in reading order, whose words are reduced. A prefix of
// a reduced word is reduced, so non-reduced prefixes are cut.
void reduced_subsets(int n, std::size_t max_len, const std::function<void(const std::vector<EqualityCell>&, const Word&)>& emit) {
  const auto cells = all_cells(n);
  std::vector<EqualityCell> chosen;
  Word w;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == cells.size()) {
      emit(chosen, w);
      return;
    }
    rec(pos + 1);
    if (w.size() >= max_len) return;
    w.letters.push_back(cell_letter(n, cells[pos]));
    if (is_reduced(w, n)) {
      chosen.push_back(cells[pos]);
      rec(pos + 1);
      chosen.pop_back();
    }
    w.letters.pop_back();
  };
  rec(0);
}

}  // namespace

std::vector<KoganFace> enumerate_reduced_faces(int n, const Permutation& tau) {
  if (tau.size() != n) throw input_error("type must be a permutation of size n");
  const std::size_t len = perm_length(tau);
  std::vector<KoganFace> out;
  reduced_subsets(n, len, [&](const std::vector<EqualityCell>& cells, const Word& w) {
    if (w.size() == len && word_to_perm(w, n) == tau) out.push_back(KoganFace{n, cells});
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<KoganFace> all_reduced_faces(int n) {
  if (n < 1) throw input_error("n must be positive");
  std::vector<KoganFace> out;
  reduced_subsets(n, static_cast<std::size_t>(n * (n - 1) / 2),
                  [&](const std::vector<EqualityCell>& cells, const Word&) { out.push_back(KoganFace{n, cells}); });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void check_face_lambda(const Partition& lambda, const KoganFace& f) {
  if (static_cast<int>(lambda.size()) != f.n) throw input_error("face and lambda must have the same n");
}

std::vector<Entry> top_down_key(const GTPattern& p) {
  std::vector<Entry> key;
  for (auto r = p.rows().rbegin(); r != p.rows().rend(); ++r) key.insert(key.end(), r->begin(), r->end());
  return key;
}

}  // namespace

std::vector<GTPattern> face_points(const Partition& lambda, const KoganFace& f, Entry k) {
  check_face_lambda(lambda, f);
  std::vector<GTPattern> out;
  for_each_point(PolytopeSpec::triangular(lambda).dilated(k), f.cells,
                 [&](const PatternView& v) { out.push_back(v.triangular()); });
  return out;
}

std::vector<GTPattern> complex_points(const Partition& lambda, const Permutation& sigma, Entry k) {
  const int n = static_cast<int>(lambda.size());
  if (sigma.size() != n) throw input_error("lambda and sigma must have the same n");
  std::map<std::vector<Entry>, GTPattern> seen;
  for (const KoganFace& f : enumerate_reduced_faces(n, longest_times(sigma)))
    for (GTPattern& p : face_points(lambda, f, k)) {
      auto key = top_down_key(p);
      seen.try_emplace(std::move(key), std::move(p));
    }
  std::vector<GTPattern> out;
  out.reserve(seen.size());
  for (auto& [key, p] : seen) out.push_back(std::move(p));
  return out;
}

MultiPoly key_via_faces(const Partition& lambda, const Permutation& sigma) {
  const int n = static_cast<int>(lambda.size());
  MultiPoly f(n);
  Exponent e(static_cast<std::size_t>(n));
  for (const GTPattern& p : complex_points(lambda, sigma, 1)) {
    const WeightVector w = weight(p);
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = static_cast<int>(w[static_cast<std::size_t>(i)]);
    f.add_term(e, 1);
  }
  require_nonnegative_integral(f, "key polynomial");
  return f;
}

namespace {

using Wide = unsigned __int128;

void bump(Wide& slot, Wide by) {
  if (__builtin_add_overflow(slot, by, &slot)) throw std::overflow_error("equality histogram overflow");
}

Integer to_integer(Wide v) {
  Integer z = static_cast<unsigned long>(v >> 64);
  z <<= 64;
  z += static_cast<unsigned long>(v);
  return z;
}

class HistogramSearch {
 public:
  explicit HistogramSearch(const Partition& lambda) : n_(static_cast<int>(lambda.size())) {
    if (n_ < 1) throw input_error("lambda must have at least one part");
    const int cells = n_ * (n_ - 1) / 2;
    if (cells > 20) throw input_error("equality histogram supports n <= 6");
    counts_.assign(std::size_t{1} << cells, 0);
    rows_.resize(static_cast<std::size_t>(n_ + 1));
    for (int i = 1; i <= n_; ++i) rows_[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i), 0);
    for (int j = 1; j <= n_; ++j) x(n_, j) = lambda[static_cast<std::size_t>(j - 1)];
  }

  std::map<std::uint32_t, Integer> run() {
    if (n_ == 1)
      counts_[0] = 1;
    else
      fill(n_ - 1, 1, 0);
    std::map<std::uint32_t, Integer> out;
    for (std::size_t m = 0; m < counts_.size(); ++m)
      if (counts_[m] != 0) out.emplace(static_cast<std::uint32_t>(m), to_integer(counts_[m]));
    return out;
  }

 private:
  Entry& x(int i, int j) { return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)]; }
  static int bit(int i, int j) { return (i - 1) * i / 2 + (j - 1); }

  void fill(int i, int j, std::uint32_t mask) {
    if (i == 1) {
      // x_{11} ranges over [x_{22}, x_{21}]; only its top value meets cell (1,1).
      const Entry len = x(2, 1) - x(2, 2) + 1;
      bump(counts_[mask], static_cast<Wide>(len - 1));
      bump(counts_[mask | 1u], 1);
      return;
    }
    if (j > i) {
      fill(i - 1, 1, mask);
      return;
    }
    const Entry lo = x(i + 1, j + 1), hi = x(i + 1, j);
    for (Entry v = lo; v <= hi; ++v) {
      x(i, j) = v;
      fill(i, j + 1, v == hi ? mask | (1u << bit(i, j)) : mask);
    }
  }

  int n_;
  std::vector<std::vector<Entry>> rows_;
  std::vector<Wide> counts_;
};

std::uint32_t face_mask(const KoganFace& f) {
  std::uint32_t m = 0;
  for (const auto& [i, j] : f.cells) m |= 1u << ((i - 1) * i / 2 + (j - 1));
  return m;
}

}  // namespace

std::map<std::uint32_t, Integer> equality_histogram(const Partition& lambda) { return HistogramSearch(lambda).run(); }

std::map<Permutation, Integer> complex_counts_by_type(const Partition& lambda, Entry k) {
  const int n = static_cast<int>(lambda.size());
  const auto hist = equality_histogram(lambda.dilated(k));
  std::map<Permutation, std::vector<std::uint32_t>> masks_by_type;
  for (const KoganFace& f : all_reduced_faces(n)) masks_by_type[*face_type(f)].push_back(face_mask(f));
  std::map<Permutation, Integer> out;
  for (const auto& [tau, masks] : masks_by_type) {
    Integer total = 0;
    for (const auto& [m, c] : hist)
      if (std::any_of(masks.begin(), masks.end(), [m](std::uint32_t f) { return (f & m) == f; })) total += c;
    out.emplace(longest_times(tau), total);
  }
  return out;
}

Integer count_complex_points(const Partition& lambda, const Permutation& sigma, Entry k) {
  if (sigma.size() != static_cast<int>(lambda.size())) throw input_error("lambda and sigma must have the same n");
  const int n = sigma.size();
  const auto hist = equality_histogram(lambda.dilated(k));
  std::vector<std::uint32_t> masks;
  for (const KoganFace& f : enumerate_reduced_faces(n, longest_times(sigma))) masks.push_back(face_mask(f));
  Integer total = 0;
  for (const auto& [m, c] : hist)
    if (std::any_of(masks.begin(), masks.end(), [m](std::uint32_t f) { return (f & m) == f; })) total += c;
  return total;
}

}  // namespace gtkey
