#include <doctest.h>

#include <fstream>
#include <set>

#include "gtkey/ehrhart.hpp"
#include "gtkey/io.hpp"
#include "gtkey/kogan.hpp"
#include "gtkey/verify.hpp"
#include "gtkey/polyops.hpp"
#include "oracles.hpp"

using namespace gtkey;

namespace {

KoganFace face(int n, std::vector<EqualityCell> cells) { return KoganFace::make(n, std::move(cells)); }

}  // namespace

TEST_CASE("face_word and face_type examples") {
  CHECK(face_word(face(4, {{2, 2}, {3, 1}, {3, 2}, {3, 3}})) == Word{{3, 1, 2, 3}});
  CHECK(face_word(face(4, {})).empty());
  CHECK(face_word(face(4, {{1, 1}, {3, 2}})) == Word{{3, 2}});
  CHECK(face_type(face(4, {{2, 2}, {3, 2}})) == Permutation({1, 3, 4, 2}));
  CHECK(face_type(face(4, all_cells(4))) == longest_element(4));
  CHECK(face_dimension(face(4, {{1, 1}, {3, 2}})) == 4);
  CHECK_THROWS_AS(face(4, {{4, 1}}), input_error);
  CHECK_THROWS_AS(face(4, {{1, 1}, {1, 1}}), input_error);
  CHECK_THROWS_AS(face(4, {{2, 3}}), input_error);
}

TEST_CASE("property: face types over all 64 subsets for n=4") {
  const auto cells = all_cells(4);
  REQUIRE(cells.size() == 6);
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::vector<EqualityCell> cs;
    std::vector<int> word;
    for (unsigned b = 0; b < 6; ++b)
      if (mask >> b & 1U) {
        cs.push_back(cells[b]);
        word.push_back(4 - cells[b].first + cells[b].second - 1);
      }
    const KoganFace f = face(4, cs);
    const auto p = oracle::word_product(word, 4);
    const bool reduced = oracle::inversions(p) == word.size();
    CHECK(is_reduced_face(f) == reduced);
    if (reduced)
      CHECK(face_type(f) == Permutation(p));
    else
      CHECK_FALSE(face_type(f).has_value());
  }
}

TEST_CASE("enumerate_reduced_faces examples") {
  const auto abc = enumerate_reduced_faces(4, Permutation({1, 3, 4, 2}));
  CHECK(abc.size() == 3);
  const std::set<KoganFace> want{face(4, {{2, 2}, {3, 2}}), face(4, {{1, 1}, {3, 2}}), face(4, {{1, 1}, {2, 1}})};
  CHECK(std::set<KoganFace>(abc.begin(), abc.end()) == want);
  const auto id = enumerate_reduced_faces(4, Permutation::identity(4));
  REQUIRE(id.size() == 1);
  CHECK(id.front().cells.empty());
}

TEST_CASE("property: every type has a face, 132-avoiding types exactly one") {
  const Permutation p132({1, 3, 2});
  for (int n = 1; n <= 5; ++n)
    for (const auto& tau : all_permutations(n)) {
      const auto faces = enumerate_reduced_faces(n, tau);
      if (n <= 4) CHECK(!faces.empty());
      if (avoids_pattern(tau, p132)) CHECK(faces.size() == 1);
    }
}

TEST_CASE("census of faces with 132-avoiding type for n=4") {
  const Permutation p132({1, 3, 2});
  std::set<KoganFace> faces;
  for (const auto& tau : all_permutations(4))
    if (avoids_pattern(tau, p132))
      for (const auto& f : enumerate_reduced_faces(4, tau)) faces.insert(f);
  CHECK(faces.size() == 14);
  CHECK(Integer(static_cast<unsigned long>(faces.size())) == catalan(4));
  // Three of them have at most two cells: {}, {(3,1)}, {(2,1),(3,1)}.
  CHECK(faces.count(face(4, {})) == 1);
  CHECK(faces.count(face(4, {{3, 1}})) == 1);
  CHECK(faces.count(face(4, {{2, 1}, {3, 1}})) == 1);
}

TEST_CASE("complex_points examples") {
  const auto pts = complex_points(Partition({2, 1, 0, 0}), Permutation({2, 4, 3, 1}), 1);
  CHECK(pts.size() == 9);
  const Partition lambda({4, 3, 3, 2});
  CHECK(face_points(lambda, face(4, {{2, 2}, {3, 1}, {3, 2}, {3, 3}}), 1).size() == 3);
  for (const auto& sigma : all_permutations(3)) CHECK(key_via_faces(Partition({0, 0, 0}), sigma) == MultiPoly::constant(3, 1));
  CHECK(complex_points(Partition({2, 1, 0}), longest_element(3), 2).size() ==
        static_cast<std::size_t>(count_points(PolytopeSpec::triangular(Partition({2, 1, 0})), 2).get_ui()));
}

TEST_CASE("key_via_faces for lambda=(2,1,0), sigma=[3,1,2] matches table row [2,3,1]") {
  std::ifstream in(default_data_dir() + "/table23.json");
  REQUIRE(in);
  const Json data = Json::parse(in);
  const MultiPoly k = key_via_faces(Partition({2, 1, 0}), Permutation({3, 1, 2}));
  bool found = false;
  for (const auto& row : data.at("rows")) {
    if (row.at("label").get<std::string>() != "[2,3,1]") continue;
    for (const auto& s : row.at("key_samples"))
      if (s.at("a").get<int>() == 1 && s.at("b").get<int>() == 1) {
        CHECK(k == poly_from_json(s.at("poly"), 3));
        found = true;
      }
  }
  CHECK(found);
  CHECK(k == key_via_operators(Partition({2, 1, 0}), Permutation({3, 1, 2})));
}

TEST_CASE("property: complex points respect dilation") {
  for (const Partition& lambda : {Partition({2, 1, 0}), Partition({1, 1, 0}), Partition({3, 1, 0})})
    for (const auto& sigma : all_permutations(3))
      for (Entry k = 0; k <= 3; ++k) CHECK(complex_points(lambda, sigma, k) == complex_points(lambda.dilated(k), sigma, 1));
}

TEST_CASE("property: the all-cells face has one point") {
  for (int n = 1; n <= 4; ++n)
    for (const Partition& lambda : partitions_bounded(static_cast<std::size_t>(n), 2))
      for (Entry k = 1; k <= 2; ++k) CHECK(face_points(lambda, face(n, all_cells(n)), k).size() == 1);
}

TEST_CASE("property: histogram counts agree with direct enumeration") {
  for (const Partition& lambda : {Partition({2, 1, 0, 0}), Partition({2, 2, 1, 0}), Partition({3, 1, 1, 0})})
    for (Entry k = 0; k <= 2; ++k) {
      const auto by_type = complex_counts_by_type(lambda, k);
      for (const auto& sigma : all_permutations(4)) {
        const Integer direct(static_cast<unsigned long>(complex_points(lambda, sigma, k).size()));
        CHECK(by_type.at(sigma) == direct);
        CHECK(count_complex_points(lambda, sigma, k) == direct);
      }
    }
}

TEST_CASE("property: sigma = w0 gives all of GT") {
  for (const Partition& lambda : partitions_bounded(4, 2))
    CHECK(count_complex_points(lambda, longest_element(4), 1) == count_points(PolytopeSpec::triangular(lambda)));
}
