// Acceptance run: one PASS/FAIL line per criterion. Exits 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "gtkey/ehrhart.hpp"
#include "gtkey/kogan.hpp"
#include "gtkey/polyops.hpp"
#include "gtkey/scan.hpp"
#include "gtkey/verify.hpp"

using namespace gtkey;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

// Time limit per criterion, in seconds.
constexpr double kTimeLimit = 300.0;
// Operator-law trials on random polynomials.
constexpr int kLawTrials = 300;
constexpr std::uint32_t kLawSeed = 20240611;

Outcome suite(const std::string& name) {
  int ok = 0, total = 0;
  std::string first_fail;
  const auto checks = run_suite(name, default_data_dir());
  for (const Check& c : checks) {
    ++total;
    if (c.passed)
      ++ok;
    else if (first_fail.empty())
      first_fail = "; first failure: " + c.name + " (" + c.detail + ")";
  }
  std::string detail = std::to_string(ok) + "/" + std::to_string(total) + " checks" + first_fail;
  if (checks.size() == 1) detail += " (" + checks.front().name + ": " + checks.front().detail + ")";
  return {ok == total && total > 0, detail};
}

Outcome oracle_equivalence() {
  int total = 0, ok = 0;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (const auto& sigma : all_permutations(3)) {
        const Partition lambda({a + b, a, 0});
        ++total;
        ok += key_via_operators(lambda, sigma) == key_via_faces(lambda, sigma);
      }
  for (const Partition& lambda : partitions_bounded(4, 3))
    for (const auto& sigma : all_permutations(4)) {
      ++total;
      ok += key_via_operators(lambda, sigma) == key_via_faces(lambda, sigma);
    }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " (lambda, sigma) pairs agree"};
}

Outcome census() {
  const Permutation p132({1, 3, 2});
  std::set<KoganFace> faces;
  bool every_type = true, unique = true;
  for (const auto& tau : all_permutations(4)) {
    const auto f = enumerate_reduced_faces(4, tau);
    every_type = every_type && !f.empty();
    if (avoids_pattern(tau, p132)) {
      unique = unique && f.size() == 1;
      faces.insert(f.begin(), f.end());
    }
  }
  const std::size_t flags = flag_sequences(4).size();
  const bool count_ok = faces.size() == 11;
  std::string detail = std::to_string(faces.size()) + " faces with 132-avoiding type (expected 11); every type has a face: " +
                       (every_type ? "yes" : "no") + "; 132-avoiding types unique: " + (unique ? "yes" : "no") +
                       "; flag sequences: " + std::to_string(flags);
  return {count_ok && every_type && unique && flags == 14, detail};
}

Outcome faulhaber() {
  bool low = true, values = true;
  for (int l = 0; l <= 5; ++l) low = low && faulhaber_face(l).has_nonnegative_coefficients();
  const UniPoly p20 = faulhaber_face(20);
  for (int l = 0; l <= 20; ++l)
    for (Entry k = 0; k <= 5; ++k) values = values && faulhaber_face(l)(Rational(k)) == Rational(power_sum(l, k));
  std::string neg;
  for (int d : p20.negative_indices()) neg += (neg.empty() ? "" : ",") + std::to_string(d);
  return {low && !p20.has_nonnegative_coefficients() && values,
          std::string("l<=5 non-negative: ") + (low ? "yes" : "no") + "; l=20 negative at k^{" + neg + "}; direct sums " +
              (values ? "match" : "differ")};
}

Outcome scans() {
  std::string detail;
  bool ok = true;
  for (const ScanFamily f : {ScanFamily::skew_gt, ScanFamily::skew_kostka, ScanFamily::key_complex}) {
    const ScanReport r = scan(f, {});
    ok = ok && r.status() == ScanStatus::ok;
    detail += (detail.empty() ? "" : "; ") + to_string(f) + ": " + std::to_string(r.results.size()) + " objects, " +
              std::to_string(r.violations) + " violations, " + std::to_string(r.failures) + " verification failures";
  }
  return {ok, detail};
}

Outcome stretched() {
  const ScanReport r = scan(ScanFamily::stretched_kostka, {});
  int valid = 0;
  for (const auto& e : r.results) valid += e.valid;
  return {valid == static_cast<int>(r.results.size()) && !r.results.empty(),
          std::to_string(valid) + "/" + std::to_string(r.results.size()) + " pass both verify points; " +
              std::to_string(r.violations) + " with a negative coefficient"};
}

MultiPoly random_poly(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> deg(0, 6), coeff(-9, 9), terms(1, 6);
  MultiPoly f(n);
  const int t = terms(rng);
  for (int s = 0; s < t; ++s) {
    Exponent e(static_cast<std::size_t>(n), 0);
    int budget = deg(rng);
    for (int i = 0; i < n && budget > 0; ++i) {
      std::uniform_int_distribution<int> part(0, budget);
      e[static_cast<std::size_t>(i)] = part(rng);
      budget -= e[static_cast<std::size_t>(i)];
    }
    f.add_term(e, Rational(coeff(rng)));
  }
  return f;
}

bool preserves_degree(const MultiPoly& f, int i) {
  // Each homogeneous piece maps into the same degree.
  std::map<int, MultiPoly> pieces;
  for (const auto& [e, c] : f.terms()) {
    const int d = std::accumulate(e.begin(), e.end(), 0);
    pieces.try_emplace(d, f.nvars()).first->second.add_term(e, c);
  }
  for (const auto& [d, p] : pieces) {
    const MultiPoly q = pi_op(p, i);
    if (!q.is_zero() && (!q.is_homogeneous() || q.degree() != d)) return false;
  }
  return true;
}

Outcome operator_laws() {
  std::mt19937 rng(kLawSeed);
  long checks = 0, ok = 0;
  auto check = [&](bool b) {
    ++checks;
    ok += b;
  };
  for (int trial = 0; trial < kLawTrials; ++trial) {
    const int n = 2 + trial % 3;
    const MultiPoly f = random_poly(rng, n);
    for (int i = 1; i < n; ++i) {
      const MultiPoly p = pi_op(f, i);
      check(pi_op(p, i) == p);
      check(preserves_degree(f, i));
      const MultiPoly d = divided_difference(f, i);
      check(swap_vars(d, i) == d);
      for (int j = i + 2; j < n; ++j) check(pi_op(pi_op(f, i), j) == pi_op(pi_op(f, j), i));
      if (i + 1 < n) check(pi_op(pi_op(pi_op(f, i), i + 1), i) == pi_op(pi_op(pi_op(f, i + 1), i), i + 1));
    }
  }
  for (const Partition& lambda : partitions_bounded(4, 2))
    for (const auto& sigma : all_permutations(4)) {
      const auto words = all_reduced_words(sigma);
      const MultiPoly first = key_via_word(lambda, words.front());
      for (const auto& w : words) check(key_via_word(lambda, w) == first);
    }
  for (const Partition& lambda : partitions_bounded(3, 3))
    for (const auto& sigma : all_permutations(3))
      for (int m = 0; m <= 3; ++m) {
        std::vector<Entry> shifted = lambda.vec();
        for (auto& x : shifted) x += m;
        check(key_via_operators(Partition(shifted), sigma) == key_via_operators(lambda, sigma).times_monomial(Exponent(3, m)));
      }
  return {ok == checks, std::to_string(ok) + "/" + std::to_string(checks) + " law checks"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"key oracle equivalence", oracle_equivalence},
      {"worked key example", [] { return suite("example-gtkey"); }},
      {"skew Ehrhart table", [] { return suite("table1"); }},
      {"key and key-complex tables", [] { return suite("table3"); }},
      {"Weyl dimension formula", [] { return suite("weyl"); }},
      {"Kogan face census", census},
      {"determinant formula", [] { return suite("determinant"); }},
      {"Faulhaber counterexample", faulhaber},
      {"non-negativity scans", scans},
      {"stretched Kostka period collapse", stretched},
      {"operator laws", operator_laws},
  };
  int failed = 0, index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > kTimeLimit) {
      o.passed = false;
      o.detail += "; over the time limit";
    }
    failed += !o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << " [" << index << "] " << name << ": " << o.detail << " ("
              << static_cast<int>(secs * 1000) << " ms)" << std::endl;
  }
  std::cout << (index - failed) << "/" << index << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
