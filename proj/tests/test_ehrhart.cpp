#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "gtkey/cache.hpp"
#include "gtkey/ehrhart.hpp"
#include "gtkey/io.hpp"
#include "gtkey/kogan.hpp"
#include "gtkey/polyops.hpp"
#include "gtkey/scan.hpp"
#include "gtkey/verify.hpp"

using namespace gtkey;

namespace {

UniPoly poly(std::vector<Rational> c) { return UniPoly(std::move(c)); }

}  // namespace

TEST_CASE("interpolate examples") {
  CHECK(interpolate({{0, 1}, {1, 2}, {2, 3}}) == poly({1, 1}));
  CHECK(interpolate({{0, 1}, {1, 3}, {2, 6}}) == poly({1, Rational(3, 2), Rational(1, 2)}));
  CHECK(interpolate({{0, 5}}) == UniPoly::constant(5));
  CHECK_THROWS_AS(interpolate({{1, 1}, {1, 2}}), input_error);
  CHECK_THROWS_AS(interpolate({}), input_error);
}

TEST_CASE("UniPoly formatting") {
  const UniPoly p = poly({1, Rational(3, 2), Rational(1, 2)});
  CHECK(p.to_string() == "1/2*k^2 + 3/2*k + 1");
  CHECK(p.to_scaled_string() == "1/2 (k^2 + 3k + 2)");
  CHECK(p.coeff_strings() == std::vector<std::string>{"1", "3/2", "1/2"});
  CHECK(UniPoly().to_string() == "0");
  CHECK(poly({0, -1}).negative_indices() == std::vector<int>{1});
}

TEST_CASE("product formula examples") {
  CHECK(ehrhart_gt_product(Partition({1, 0})) == poly({1, 1}));
  CHECK(ehrhart_gt_product(Partition({2, 1, 0}))(1) == 8);
  CHECK(ehrhart_gt_product(Partition({0, 0, 0})) == UniPoly::constant(1));
}

TEST_CASE("ehrhart_of examples") {
  const EhrhartResult w = ehrhart_of(CountedObject::gt_weight(Partition({2, 1, 0}), WeightVector({1, 1, 1})));
  CHECK(w.valid);
  CHECK(w.poly == poly({1, 1}));
  const EhrhartResult s = ehrhart_of(CountedObject::skew(Partition({3, 2, 1}), Partition({2, 1}), 3));
  CHECK(s.valid);
  CHECK(s.poly.to_scaled_string() == "1/8 (k^6 + 9k^5 + 33k^4 + 63k^3 + 66k^2 + 36k + 8)");
  CHECK(s.verify_points.size() == static_cast<std::size_t>(kVerifyPoints));
  const EhrhartResult f =
      ehrhart_of(CountedObject::kogan_face(Partition({4, 3, 3, 2}), KoganFace::make(4, {{2, 2}, {3, 1}, {3, 2}, {3, 3}})));
  CHECK(f.poly == poly({1, Rational(3, 2), Rational(1, 2)}));
}

TEST_CASE("empty objects give the zero polynomial") {
  // No tableau of shape (2,1) has content (3,0,0).
  const EhrhartResult r = ehrhart_of(CountedObject::gt_weight(Partition({2, 1, 0}), WeightVector({3, 0, 0})));
  CHECK(r.empty);
  CHECK(r.poly.is_zero());
}

TEST_CASE("an undersized degree bound is detected") {
  const EhrhartResult r = ehrhart_of(CountedObject::gt(Partition({2, 1, 0})), 1);
  CHECK_FALSE(r.valid);
}

TEST_CASE("fixture suites") {
  for (const std::string suite : {"table1", "table3", "example-gtkey", "weyl", "determinant"})
    for (const Check& c : run_suite(suite, default_data_dir())) {
      INFO(c.suite << ": " << c.name << " " << c.detail);
      CHECK(c.passed);
    }
  CHECK_THROWS_AS(run_suite("nope", default_data_dir()), input_error);
}

TEST_CASE("flag sequences") {
  CHECK(flag_sequences(4).size() == 14);
  for (int n = 1; n <= 6; ++n) CHECK(Integer(static_cast<unsigned long>(flag_sequences(n).size())) == catalan(static_cast<unsigned>(n)));
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> b(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i)] = i + 1;
    for (const Partition& lambda : partitions_bounded(static_cast<std::size_t>(n), 2))
      CHECK(determinant_formula(lambda, b) == UniPoly::constant(1));
  }
  // b = (n,...,n) recovers the product formula.
  CHECK(determinant_formula(Partition({2, 1, 0}), {3, 3, 3}) == ehrhart_gt_product(Partition({2, 1, 0})));
  CHECK_THROWS(flag_matches(Partition({2, 1, 0, 0}), Permutation({2, 3, 1, 4})));
}

TEST_CASE("Faulhaber examples and values") {
  CHECK(faulhaber_face(0) == poly({1, 1}));
  CHECK(faulhaber_face(1) == poly({1, Rational(3, 2), Rational(1, 2)}));
  CHECK_FALSE(faulhaber_face(20).has_nonnegative_coefficients());
  for (int l = 0; l <= 20; ++l)
    for (Entry k = 0; k <= 5; ++k) CHECK(faulhaber_face(l)(Rational(k)) == Rational(power_sum(l, k)));
  CHECK(power_sum(3, 2) == 36);
}

TEST_CASE("property: product formula equals the fitted GT polynomial") {
  for (int n = 1; n <= 4; ++n)
    for (const Partition& lambda : partitions_bounded(static_cast<std::size_t>(n), 3)) {
      const EhrhartResult r = ehrhart_of(CountedObject::gt(lambda));
      CHECK(r.valid);
      CHECK(r.poly == ehrhart_gt_product(lambda));
      CHECK(r.poly.coeff(0) == 1);
      CHECK(ehrhart_of(CountedObject::key_complex(lambda, longest_element(n))).poly == r.poly);
    }
}

TEST_CASE("property: Ehrhart polynomials have constant term 1") {
  for (const Partition& lambda : partitions_bounded(3, 3))
    for (const auto& sigma : all_permutations(3)) {
      const EhrhartResult r = ehrhart_of(CountedObject::key_complex(lambda, sigma));
      CHECK(r.valid);
      CHECK(r.poly.coeff(0) == 1);
      CHECK(r.poly(1) == Rational(eval_ones(key_via_operators(lambda, sigma))));
    }
}

TEST_CASE("cache round trip") {
  const auto path = std::filesystem::temp_directory_path() / "gtkey_cache_test.jsonl";
  std::filesystem::remove(path);
  const CountedObject o = CountedObject::skew(Partition({2, 2, 1}), Partition({1}), 3);
  EhrhartResult first;
  {
    ResultCache cache(path.string());
    CHECK(cache.size() == 0);
    first = cached_ehrhart(o, &cache);
    CHECK(cache.size() == 1);
    CHECK(cache.lookup(o, o.degree_bound()).has_value());
  }
  {
    ResultCache cache(path.string());
    CHECK(cache.size() == 1);
    const EhrhartResult again = cached_ehrhart(o, &cache);
    CHECK(again.poly == first.poly);
    CHECK(again.valid);
    CHECK(cache.size() == 1);
  }
  {
    std::ofstream out(path, std::ios::app);
    out << "not json\n";
  }
  CHECK(ResultCache(path.string()).size() == 1);
  std::filesystem::remove(path);
}

TEST_CASE("scan ranges") {
  const Ranges r = parse_ranges("bound=2,1;n=2");
  CHECK(r.at("bound") == "2,1");
  CHECK(resolve_ranges(ScanFamily::skew_gt, {}).at("n") == "3");
  CHECK_THROWS_AS(resolve_ranges(ScanFamily::skew_gt, parse_ranges("colour=red")), input_error);
  CHECK_THROWS_AS(parse_ranges("bound"), input_error);
  CHECK_THROWS_AS(parse_scan_family("nope"), input_error);
}

TEST_CASE("small scans are clean") {
  for (const ScanFamily f : {ScanFamily::skew_gt, ScanFamily::skew_kostka}) {
    const ScanReport rep = scan(f, parse_ranges("bound=2,1;n=2"));
    CHECK(rep.status() == ScanStatus::ok);
    CHECK(!rep.results.empty());
  }
  const ScanReport k = scan(ScanFamily::key_complex, parse_ranges("n=3;max_part=2"));
  CHECK(k.status() == ScanStatus::ok);
  CHECK(k.results.size() == 10 * 6);
}

TEST_CASE("JSON serialization") {
  CHECK(to_json(Permutation({2, 1})).dump() == "[2,1]");
  CHECK(to_json(KoganFace::make(4, {{3, 2}, {1, 1}})).dump() == R"({"n":4,"cells":[[1,1],[3,2]]})");
  const MultiPoly f = MultiPoly::monomial({1, 0}, Rational(1, 2)) + MultiPoly::monomial({0, 0});
  CHECK(to_json(f).dump() == R"([{"coeff":"1/2","exp":[1,0]},{"coeff":"1","exp":[0,0]}])");
  CHECK(poly_from_json(to_json(f), 2) == f);
  const GTPattern g({{1}, {2, 0}});
  CHECK(pattern_from_json(to_json(g)) == g);
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("plain") == "plain");
}
