#include <doctest.h>

#include "gtkey/gt.hpp"
#include "gtkey/lattice.hpp"
#include "oracles.hpp"

using namespace gtkey;

namespace {

// The six-row pattern with top row (5,4,2,1,1,0), stored bottom-up.
GTPattern figure_one() {
  return GTPattern({{3}, {3, 2}, {3, 3, 1}, {3, 3, 2, 1}, {5, 3, 2, 1, 0}, {5, 4, 2, 1, 1, 0}});
}

}  // namespace

TEST_CASE("validate_pattern examples") {
  CHECK(validate_pattern(figure_one()));
  CHECK(validate_pattern(GTPattern({{0}, {0, 0}, {0, 0, 0}})));
  CHECK_FALSE(validate_pattern(GTPattern({{3}, {2, 0}})));
  CHECK_THROWS_AS(GTPattern({{1}, {1}}), input_error);
  CHECK(validate_pattern(SkewGTPattern({{1, 0}, {2, 1}, {2, 2}})));
  CHECK_FALSE(validate_pattern(SkewGTPattern({{1, 0}, {0, 0}})));
}

TEST_CASE("weight examples") {
  CHECK(weight(figure_one()) == WeightVector({3, 2, 2, 2, 2, 2}));
  // Point C of the worked (2,1,0,0) example: monomial z_1 z_4^2.
  CHECK(weight(GTPattern({{1}, {1, 0}, {1, 0, 0}, {2, 1, 0, 0}})) == WeightVector({1, 0, 0, 2}));
  const SkewGTPattern s({{1, 0}, {2, 1}, {2, 2}});
  CHECK(weight(s) == WeightVector({2, 1}));
}

TEST_CASE("tableau bijection on the figure") {
  const SSYT t = pattern_to_tableau(figure_one());
  const std::vector<std::vector<int>> rows{{1, 1, 1, 5, 5}, {2, 2, 3, 6}, {3, 4}, {4}, {6}, {}};
  CHECK(t.rows == rows);
  CHECK(t.shape == Partition({5, 4, 2, 1, 1, 0}));
  CHECK(tableau_to_pattern(t, 6) == figure_one());
  CHECK(is_semistandard(t, 6));
  CHECK_THROWS_AS(tableau_to_pattern(SSYT{Partition({2}), {{2, 1}}}, 2), input_error);
}

TEST_CASE("one-row tableau") {
  const SSYT t{Partition({3}), {{1, 1, 1}}};
  CHECK(tableau_to_pattern(t, 1) == GTPattern(std::vector<std::vector<Entry>>{{3}}));
  CHECK(pattern_to_tableau(GTPattern(std::vector<std::vector<Entry>>{{3}})).rows == std::vector<std::vector<int>>{{1, 1, 1}});
}

TEST_CASE("round trip on GT(2,1,0)") {
  const auto pts = enumerate_points(PolytopeSpec::triangular(Partition({2, 1, 0})));
  CHECK(pts.size() == 8);
  for (const auto& p : pts) CHECK(tableau_to_pattern(pattern_to_tableau(p), 3) == p);
}

TEST_CASE("property: bijection and weights for |lambda| <= 6, n <= 4") {
  int patterns = 0;
  for (int n = 1; n <= 4; ++n)
    for (Entry size = 0; size <= 6; ++size)
      for (const Partition& lambda : partitions_of(size, static_cast<std::size_t>(n))) {
        const auto pts = enumerate_points(PolytopeSpec::triangular(lambda));
        const auto tableaux = oracle::ssyt(lambda.vec(), {}, n);
        CHECK(pts.size() == tableaux.size());
        for (const auto& p : pts) {
          ++patterns;
          const SSYT t = pattern_to_tableau(p);
          REQUIRE(is_semistandard(t, n));
          CHECK(tableau_to_pattern(t, n) == p);
          const auto w = weight(p);
          const auto c = oracle::content(t.rows, n);
          for (int i = 0; i < n; ++i) CHECK(w[static_cast<std::size_t>(i)] == c[static_cast<std::size_t>(i)]);
          // x_{i+1,j} - x_{ij} boxes of content i+1 in row j.
          for (int i = 1; i < n; ++i)
            for (int j = 1; j <= i + 1; ++j) {
              const Entry below = j <= i ? p.at(i, j) : 0;
              const auto& row = t.rows[static_cast<std::size_t>(j - 1)];
              const auto boxes = std::count(row.begin(), row.end(), i + 1);
              CHECK(p.at(i + 1, j) - below == boxes);
            }
        }
      }
  CHECK(patterns > 1000);
}

TEST_CASE("property: skew bijection for shapes inside (3,2,1), n = 3") {
  for (const Partition& lambda : partitions_inside(Partition({3, 2, 1})))
    for (const Partition& mu : partitions_inside(lambda)) {
      const auto pts = enumerate_skew_points(PolytopeSpec::skew(lambda, mu, 3));
      CHECK(pts.size() == oracle::ssyt(lambda.vec(), mu.vec(), 3).size());
      for (const auto& p : pts) {
        REQUIRE(validate_pattern(p));
        const SkewSSYT t = pattern_to_tableau(p);
        REQUIRE(is_semistandard(t, 3));
        CHECK(tableau_to_pattern(t, 3) == p);
        const auto c = oracle::content(t.rows, 3);
        const auto w = weight(p);
        for (int i = 0; i < 3; ++i) CHECK(w[static_cast<std::size_t>(i)] == c[static_cast<std::size_t>(i)]);
      }
    }
}

TEST_CASE("display string") {
  const GTPattern p({{1}, {1, 0}, {2, 1, 0}});
  CHECK(to_display_string(p) == "2 1 0\n 1 0\n  1\n");
}
