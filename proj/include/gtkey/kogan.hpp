#pragma once

// Kogan faces of GT(lambda) and the key polytopal complex GT(lambda, sigma).
//
// Cell (i, j), 1 <= j <= i <= n-1, is the equality x_{ij} = x_{i+1,j} and
// carries the letter n-i+j-1. The word of a face reads its cells with i
// ascending, then j ascending. GT(lambda, sigma) is the union of the reduced
// faces of type w_0 sigma.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gtkey/gt.hpp"
#include "gtkey/lattice.hpp"
#include "gtkey/multipoly.hpp"

namespace gtkey {

struct KoganFace {
  int n = 0;
  std::vector<EqualityCell> cells;  // sorted, no duplicates

  /// Sorts and validates; throws input_error on out-of-range or repeated cells.
  static KoganFace make(int n, std::vector<EqualityCell> cells);

  auto operator<=>(const KoganFace&) const = default;
};

/// All n(n-1)/2 cells in reading order.
std::vector<EqualityCell> all_cells(int n);
int cell_letter(int n, const EqualityCell& c);

Word face_word(const KoganFace& f);
bool is_reduced_face(const KoganFace& f);
/// Permutation of the face word, or nullopt if the word is not reduced.
std::optional<Permutation> face_type(const KoganFace& f);

/// Every reduced face of type tau, sorted by cell list.
std::vector<KoganFace> enumerate_reduced_faces(int n, const Permutation& tau);
/// Every reduced face of any type, sorted by cell list.
std::vector<KoganFace> all_reduced_faces(int n);

/// Number of free coordinates of the face, n(n-1)/2 - |cells|.
int face_dimension(const KoganFace& f);

/// Union of the points of k GT(lambda) on the faces of type w_0 sigma,
/// without duplicates, in canonical order.
std::vector<GTPattern> complex_points(const Partition& lambda, const Permutation& sigma, Entry k = 1);
/// Sum of z^weight over complex_points(lambda, sigma, 1).
MultiPoly key_via_faces(const Partition& lambda, const Permutation& sigma);

/// Points of the face of k GT(lambda) cut out by f.
std::vector<GTPattern> face_points(const Partition& lambda, const KoganFace& f, Entry k = 1);

/// Histogram of the points of GT(lambda) by the set of cells whose equality
/// holds (bit b stands for all_cells(n)[b]).
std::map<std::uint32_t, Integer> equality_histogram(const Partition& lambda);

/// |GT(k lambda, sigma)| for every sigma in S_n from a single enumeration.
std::map<Permutation, Integer> complex_counts_by_type(const Partition& lambda, Entry k);
Integer count_complex_points(const Partition& lambda, const Permutation& sigma, Entry k);

}  // namespace gtkey
