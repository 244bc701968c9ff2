#pragma once

// Partitions, permutations and words in simple transpositions.
//
// Permutations use one-line notation with values 1..n. A word
// [i_1, ..., i_l] denotes the product s_{i_1} ... s_{i_l}, where the right
// factor acts first on positions: word_to_perm({3,2}, 4) == [1,3,4,2].

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gtkey/numeric.hpp"

namespace gtkey {

/// Weakly decreasing sequence of non-negative parts. Trailing zeros are kept:
/// they fix the number of variables.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<Entry> parts);

  std::span<const Entry> parts() const { return parts_; }
  const std::vector<Entry>& vec() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  Entry operator[](std::size_t i) const { return parts_[i]; }
  /// Part i, or 0 past the end.
  Entry at_or_zero(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  Entry total() const;
  Partition dilated(Entry k) const;
  /// Pads with zeros (or drops trailing zeros) to length n.
  Partition resized(std::size_t n) const;
  /// Componentwise containment after padding.
  bool contains(const Partition& inner) const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<Entry> parts_;
};

/// Arbitrary non-negative integer vector (content of a tableau).
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Entry> w);

  std::span<const Entry> values() const { return w_; }
  const std::vector<Entry>& vec() const { return w_; }
  std::size_t size() const { return w_.size(); }
  Entry operator[](std::size_t i) const { return w_[i]; }
  Entry total() const;
  WeightVector dilated(Entry k) const;

  auto operator<=>(const WeightVector&) const = default;

 private:
  std::vector<Entry> w_;
};

class Permutation {
 public:
  Permutation() = default;
  /// One-line notation; must be a bijection on {1..n}.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);

  const std::vector<int>& one_line() const { return p_; }
  int size() const { return static_cast<int>(p_.size()); }
  /// Value at 1-based position i.
  int operator()(int i) const { return p_[static_cast<std::size_t>(i - 1)]; }

  Permutation inverse() const;
  bool is_identity() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> p_;
};

/// Letters 1..n-1; letter i stands for s_i.
struct Word {
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  auto operator<=>(const Word&) const = default;
};

Permutation word_to_perm(const Word& w, int n);
std::size_t perm_length(const Permutation& sigma);
bool is_reduced(const Word& w, int n);
/// Bubble sort: repeatedly swap the leftmost descent.
Word canonical_reduced_word(const Permutation& sigma);
/// Every reduced word of sigma, lexicographically sorted.
std::vector<Word> all_reduced_words(const Permutation& sigma);

/// True iff no i<j<k has (sigma(i),sigma(j),sigma(k)) order-isomorphic to pattern.
bool avoids_pattern(const Permutation& sigma, const Permutation& pattern);
Permutation longest_element(int n);

/// Product matching word concatenation: word_to_perm(u ++ v) == multiply(word_to_perm(u), word_to_perm(v)).
Permutation multiply(const Permutation& u, const Permutation& v);
/// w_0 * sigma, i.e. sigma read backwards.
Permutation longest_times(const Permutation& sigma);

/// All of S_n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

// Partition generators --------------------------------------------------------

/// Partitions of m with at most n parts, padded to length n, in decreasing lex order.
std::vector<Partition> partitions_of(Entry m, std::size_t n);
/// All partitions of length n (trailing zeros allowed) with parts <= max_part.
std::vector<Partition> partitions_bounded(std::size_t n, Entry max_part);
/// All partitions lambda of length bound.size() with lambda ⊆ bound.
std::vector<Partition> partitions_inside(const Partition& bound);
/// Weak compositions of total into n non-negative parts, lex order.
std::vector<WeightVector> compositions(Entry total, std::size_t n);
/// Dominance order for equal-size vectors (sorted decreasingly first).
bool dominates(const Partition& lambda, const Partition& mu);

Integer catalan(unsigned n);

// Text formats: partitions and words "4,3,3,2", permutations "[2,4,3,1]".
Partition parse_partition(std::string_view text);
WeightVector parse_weight(std::string_view text);
Permutation parse_permutation(std::string_view text);
Word parse_word(std::string_view text);
std::vector<Entry> parse_entries(std::string_view text);

std::string to_string(const Partition& p);
std::string to_string(const WeightVector& w);
std::string to_string(const Permutation& p);
std::string to_string(const Word& w);

}  // namespace gtkey
