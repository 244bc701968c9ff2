#include <doctest.h>

#include <set>

#include "gtkey/ehrhart.hpp"
#include "gtkey/lattice.hpp"
#include "oracles.hpp"

using namespace gtkey;

namespace {

std::vector<Entry> flat_top_down(const GTPattern& p) {
  std::vector<Entry> v;
  for (auto r = p.rows().rbegin(); r != p.rows().rend(); ++r) v.insert(v.end(), r->begin(), r->end());
  return v;
}

}  // namespace

TEST_CASE("enumerate_points examples") {
  CHECK(enumerate_points(PolytopeSpec::triangular(Partition({2, 1, 0, 0}))).size() == 20);
  const auto zero = enumerate_points(PolytopeSpec::triangular(Partition({0, 0, 0})));
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == GTPattern({{0}, {0, 0}, {0, 0, 0}}));
  CHECK(enumerate_points(PolytopeSpec::triangular(Partition({2, 1, 0}), WeightVector({1, 1, 1}))).size() == 2);
}

TEST_CASE("count_points examples") {
  CHECK(count_points(PolytopeSpec::triangular(Partition({1, 0})), 3) == 4);
  CHECK(count_points(PolytopeSpec::skew(Partition({2, 2, 1}), Partition(), 3), 2) == 6);
  CHECK(count_points(PolytopeSpec::triangular(Partition({2, 1, 0, 0})), 1) == 20);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(PolytopeSpec::skew(Partition({1, 0}), Partition({2, 0}), 2), input_error);
  CHECK_THROWS_AS(PolytopeSpec::triangular(Partition({2, 1}), WeightVector({1, 1, 1})), input_error);
  CHECK_THROWS_AS(count_points(PolytopeSpec::triangular(Partition({1, 0})), -1), input_error);
}

TEST_CASE("property: dilation identity") {
  for (const Partition& lambda : partitions_bounded(3, 2))
    for (Entry k = 0; k <= 4; ++k) {
      CHECK(count_points(PolytopeSpec::triangular(lambda), k) ==
            count_points(PolytopeSpec::triangular(lambda.dilated(k)), 1));
      if (lambda[0] == 0) continue;
      CHECK(count_points(PolytopeSpec::skew(lambda, Partition({1}), 3), k) ==
            count_points(PolytopeSpec::skew(lambda.dilated(k), Partition({k}), 3), 1));
    }
}

TEST_CASE("property: counts equal the product formula for lambda inside (4,4,4,4)") {
  for (int n = 1; n <= 4; ++n)
    for (const Partition& lambda : partitions_bounded(static_cast<std::size_t>(n), 4))
      CHECK(Rational(count_points(PolytopeSpec::triangular(lambda))) == ehrhart_gt_product(lambda)(Rational(1)));
}

TEST_CASE("property: weight slices partition the polytope") {
  for (int n = 1; n <= 4; ++n)
    for (const Partition& lambda : partitions_bounded(static_cast<std::size_t>(n), 3)) {
      Integer sum = 0;
      for (const WeightVector& w : compositions(lambda.total(), static_cast<std::size_t>(n)))
        sum += count_points(PolytopeSpec::triangular(lambda, w));
      CHECK(sum == count_points(PolytopeSpec::triangular(lambda)));
    }
}

TEST_CASE("property: weighted counts agree with the tableau oracle") {
  for (const Partition& lambda : partitions_bounded(3, 3))
    for (const WeightVector& w : compositions(lambda.total(), 3)) {
      int expected = 0;
      for (const auto& t : oracle::ssyt(lambda.vec(), {}, 3)) {
        const auto c = oracle::content(t, 3);
        expected += std::equal(c.begin(), c.end(), w.vec().begin());
      }
      CHECK(count_points(PolytopeSpec::triangular(lambda, w)) == expected);
    }
  for (const Partition& lambda : partitions_inside(Partition({3, 2, 1})))
    for (const Partition& mu : partitions_inside(lambda))
      for (const WeightVector& nu : compositions(lambda.total() - mu.total(), 3)) {
        int expected = 0;
        for (const auto& t : oracle::ssyt(lambda.vec(), mu.vec(), 3)) {
          const auto c = oracle::content(t, 3);
          expected += std::equal(c.begin(), c.end(), nu.vec().begin());
        }
        CHECK(count_points(PolytopeSpec::skew(lambda, mu, 3, nu)) == expected);
      }
}

TEST_CASE("property: enumeration equals the naive grid filter, in canonical order") {
  for (const Partition& lambda : {Partition({2, 1, 0}), Partition({3, 1, 0, 0}), Partition({2, 2, 1, 0}),
                                  Partition({3, 2, 1, 0}), Partition({2, 1, 1, 0})}) {
    const auto pts = enumerate_points(PolytopeSpec::triangular(lambda));
    std::vector<std::vector<Entry>> got;
    for (const auto& p : pts) got.push_back(flat_top_down(p));
    CHECK(std::is_sorted(got.begin(), got.end()));
    CHECK(std::set<std::vector<Entry>>(got.begin(), got.end()).size() == got.size());
    CHECK(got == oracle::grid_patterns(lambda.vec()));
  }
}

TEST_CASE("face equalities restrict the enumeration") {
  const Partition lambda({4, 3, 3, 2});
  const std::vector<EqualityCell> cells{{2, 2}, {3, 1}, {3, 2}, {3, 3}};
  std::vector<GTPattern> pts;
  for_each_point(PolytopeSpec::triangular(lambda), cells, [&](const PatternView& v) { pts.push_back(v.triangular()); });
  CHECK(pts.size() == 3);
  for (const auto& p : pts)
    for (const auto& [i, j] : cells) CHECK(p.at(i, j) == p.at(i + 1, j));
  CHECK(count_points(PolytopeSpec::triangular(lambda), cells, 1) == 3);
  CHECK_THROWS_AS(count_points(PolytopeSpec::triangular(lambda), {{4, 1}}, 1), input_error);
}

TEST_CASE("large dilations stay exact") {
  const Integer c = count_points(PolytopeSpec::triangular(Partition({1, 0})), 1000000000000LL);
  CHECK(c == Integer("1000000000001"));
  CHECK_THROWS(count_points(PolytopeSpec::triangular(Partition({1LL << 40, 0})), 1LL << 40));
}
