#include "gtkey/combinat.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

namespace gtkey {

// Partition / WeightVector -----------------------------------------------------

Partition::Partition(std::vector<Entry> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw input_error("partition has a negative part");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw input_error("partition parts must be weakly decreasing");
  }
}

Entry Partition::total() const {
  Entry s = 0;
  for (Entry p : parts_) s = checked_add(s, p);
  return s;
}

Partition Partition::dilated(Entry k) const {
  std::vector<Entry> out(parts_.size());
  for (std::size_t i = 0; i < parts_.size(); ++i) out[i] = checked_mul(parts_[i], k);
  return Partition(std::move(out));
}

Partition Partition::resized(std::size_t n) const {
  std::vector<Entry> out(n, 0);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i < n)
      out[i] = parts_[i];
    else if (parts_[i] != 0)
      throw input_error("partition " + to_string(*this) + " has more than " +
                        std::to_string(n) + " non-zero parts");
  }
  return Partition(std::move(out));
}

bool Partition::contains(const Partition& inner) const {
  const std::size_t n = std::max(size(), inner.size());
  for (std::size_t i = 0; i < n; ++i)
    if (inner.at_or_zero(i) > at_or_zero(i)) return false;
  return true;
}

WeightVector::WeightVector(std::vector<Entry> w) : w_(std::move(w)) {
  for (Entry x : w_)
    if (x < 0) throw input_error("weight has a negative entry");
}

Entry WeightVector::total() const {
  Entry s = 0;
  for (Entry x : w_) s = checked_add(s, x);
  return s;
}

WeightVector WeightVector::dilated(Entry k) const {
  std::vector<Entry> out(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i) out[i] = checked_mul(w_[i], k);
  return WeightVector(std::move(out));
}

// Permutations ----------------------------------------------------------------

Permutation::Permutation(std::vector<int> one_line) : p_(std::move(one_line)) {
  std::vector<bool> seen(p_.size() + 1, false);
  for (int v : p_) {
    if (v < 1 || v > static_cast<int>(p_.size()) || seen[static_cast<std::size_t>(v)])
      throw input_error("not a permutation of 1..n");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  return Permutation(std::move(p));
}

Permutation Permutation::inverse() const {
  std::vector<int> q(p_.size());
  for (std::size_t i = 0; i < p_.size(); ++i) q[static_cast<std::size_t>(p_[i] - 1)] = static_cast<int>(i + 1);
  return Permutation(std::move(q));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < p_.size(); ++i)
    if (p_[i] != static_cast<int>(i + 1)) return false;
  return true;
}

Permutation word_to_perm(const Word& w, int n) {
  if (n < 1) throw input_error("n must be positive");
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  for (int letter : w.letters)
    if (letter < 1 || letter > n - 1)
      throw input_error("letter " + std::to_string(letter) + " out of range 1.." + std::to_string(n - 1));
  // Right factor first.
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    const auto i = static_cast<std::size_t>(*it - 1);
    std::swap(p[i], p[i + 1]);
  }
  return Permutation(std::move(p));
}

std::size_t perm_length(const Permutation& sigma) {
  const auto& p = sigma.one_line();
  std::size_t inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv;
}

bool is_reduced(const Word& w, int n) { return perm_length(word_to_perm(w, n)) == w.size(); }

Word canonical_reduced_word(const Permutation& sigma) {
  std::vector<int> p = sigma.one_line();
  Word w;
  for (;;) {
    std::size_t i = 0;
    while (i + 1 < p.size() && p[i] < p[i + 1]) ++i;
    if (i + 1 >= p.size()) break;
    std::swap(p[i], p[i + 1]);
    w.letters.push_back(static_cast<int>(i + 1));
  }
  return w;
}

std::vector<Word> all_reduced_words(const Permutation& sigma) {
  // sigma = s_i * sigma' with l(sigma') = l(sigma) - 1 exactly when i is a descent.
  std::vector<Word> out;
  std::function<void(std::vector<int>&, Word&)> rec = [&](std::vector<int>& p, Word& prefix) {
    bool any = false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] < p[i + 1]) continue;
      any = true;
      std::swap(p[i], p[i + 1]);
      prefix.letters.push_back(static_cast<int>(i + 1));
      rec(p, prefix);
      prefix.letters.pop_back();
      std::swap(p[i], p[i + 1]);
    }
    if (!any) out.push_back(prefix);
  };
  std::vector<int> p = sigma.one_line();
  Word prefix;
  rec(p, prefix);
  std::sort(out.begin(), out.end());
  return out;
}

bool avoids_pattern(const Permutation& sigma, const Permutation& pattern) {
  if (pattern.size() != 3) throw input_error("only patterns of length 3 are supported");
  const auto& p = sigma.one_line();
  const auto& q = pattern.one_line();
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const int a = p[i], b = p[j], c = p[k];
        if ((a < b) == (q[0] < q[1]) && (a < c) == (q[0] < q[2]) && (b < c) == (q[1] < q[2]))
          return false;
      }
  return true;
}

Permutation longest_element(int n) {
  if (n < 1) throw input_error("n must be positive");
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(p));
}

Permutation multiply(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw input_error("permutation sizes differ");
  // Letters of v act on positions before those of u: (u*v)(j) = v(u(j)).
  std::vector<int> r(u.one_line().size());
  for (int j = 1; j <= u.size(); ++j) r[static_cast<std::size_t>(j - 1)] = v(u(j));
  return Permutation(std::move(r));
}

Permutation longest_times(const Permutation& sigma) {
  std::vector<int> r(sigma.one_line().rbegin(), sigma.one_line().rend());
  return Permutation(std::move(r));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Partition generators --------------------------------------------------------

std::vector<Partition> partitions_of(Entry m, std::size_t n) {
  std::vector<Partition> out;
  std::vector<Entry> cur;
  std::function<void(Entry, Entry)> rec = [&](Entry remaining, Entry max_part) {
    if (remaining == 0) {
      std::vector<Entry> p = cur;
      p.resize(n, 0);
      out.emplace_back(std::move(p));
      return;
    }
    if (cur.size() == n) return;
    for (Entry part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

std::vector<Partition> partitions_bounded(std::size_t n, Entry max_part) {
  return partitions_inside(Partition(std::vector<Entry>(n, max_part)));
}

std::vector<Partition> partitions_inside(const Partition& bound) {
  std::vector<Partition> out;
  std::vector<Entry> cur;
  std::function<void(std::size_t, Entry)> rec = [&](std::size_t i, Entry prev) {
    if (i == bound.size()) {
      out.emplace_back(cur);
      return;
    }
    for (Entry v = 0; v <= std::min(prev, bound[i]); ++v) {
      cur.push_back(v);
      rec(i + 1, v);
      cur.pop_back();
    }
  };
  rec(0, bound.empty() ? 0 : bound[0]);
  return out;
}

std::vector<WeightVector> compositions(Entry total, std::size_t n) {
  std::vector<WeightVector> out;
  if (n == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  std::vector<Entry> cur;
  std::function<void(Entry)> rec = [&](Entry remaining) {
    if (cur.size() + 1 == n) {
      cur.push_back(remaining);
      out.emplace_back(cur);
      cur.pop_back();
      return;
    }
    for (Entry v = 0; v <= remaining; ++v) {
      cur.push_back(v);
      rec(remaining - v);
      cur.pop_back();
    }
  };
  rec(total);
  return out;
}

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.total() != mu.total()) return false;
  Entry a = 0, b = 0;
  const std::size_t n = std::max(lambda.size(), mu.size());
  for (std::size_t i = 0; i < n; ++i) {
    a += lambda.at_or_zero(i);
    b += mu.at_or_zero(i);
    if (a < b) return false;
  }
  return true;
}

Integer catalan(unsigned n) {
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
  return c / (n + 1);
}

// Text formats ----------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

template <typename Int>
std::vector<Int> parse_list(std::string_view text) {
  text = trim(text);
  std::vector<Int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view item = trim(text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos));
    Int v{};
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw input_error("expected an integer list, got '" + std::string(text) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

template <typename Seq>
std::string join(const Seq& seq) {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : seq) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os.str();
}

}  // namespace

std::vector<Entry> parse_entries(std::string_view text) { return parse_list<Entry>(text); }

Partition parse_partition(std::string_view text) {
  text = trim(text);
  if (text == "-" || text == "[]") return Partition();
  return Partition(parse_list<Entry>(text));
}

WeightVector parse_weight(std::string_view text) { return WeightVector(parse_list<Entry>(text)); }

Permutation parse_permutation(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw input_error("unbalanced bracket in permutation");
    text = text.substr(1, text.size() - 2);
  }
  return Permutation(parse_list<int>(text));
}

Word parse_word(std::string_view text) { return Word{parse_list<int>(text)}; }

std::string to_string(const Partition& p) { return join(p.vec()); }
std::string to_string(const WeightVector& w) { return join(w.vec()); }
std::string to_string(const Permutation& p) { return "[" + join(p.one_line()) + "]"; }
std::string to_string(const Word& w) { return join(w.letters); }

}  // namespace gtkey
