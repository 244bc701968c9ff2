#include "gtkey/scan.hpp"

#include <algorithm>

#include "gtkey/kogan.hpp"

namespace gtkey {

std::string to_string(ScanFamily f) {
  switch (f) {
    case ScanFamily::skew_gt: return "skew_gt";
    case ScanFamily::skew_kostka: return "skew_kostka";
    case ScanFamily::stretched_kostka: return "stretched_kostka";
    case ScanFamily::key_complex: return "key_complex";
  }
  return "?";
}

ScanFamily parse_scan_family(const std::string& s) {
  for (ScanFamily f : {ScanFamily::skew_gt, ScanFamily::skew_kostka, ScanFamily::stretched_kostka, ScanFamily::key_complex})
    if (to_string(f) == s) return f;
  throw input_error("unknown scan family '" + s + "'");
}

std::string to_string(ScanStatus s) {
  switch (s) {
    case ScanStatus::ok: return "ok";
    case ScanStatus::violation: return "violation";
    case ScanStatus::verification_failure: return "verification_failure";
  }
  return "?";
}

Ranges parse_ranges(std::string_view text) {
  Ranges r;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(';', pos), text.size());
    const std::string_view item = text.substr(pos, end - pos);
    if (!item.empty()) {
      const std::size_t eq = item.find('=');
      if (eq == std::string_view::npos || eq == 0) throw input_error("range item '" + std::string(item) + "' is not key=value");
      r[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    }
    pos = end + 1;
  }
  return r;
}

Ranges resolve_ranges(ScanFamily f, const Ranges& given) {
  Ranges r;
  switch (f) {
    case ScanFamily::skew_gt:
    case ScanFamily::skew_kostka: r = {{"bound", "3,2,1"}, {"n", "3"}}; break;
    case ScanFamily::stretched_kostka: r = {{"m", "6"}, {"n", "4"}}; break;
    case ScanFamily::key_complex: r = {{"n", "4"}, {"max_part", "3"}}; break;
  }
  for (const auto& [k, v] : given) {
    if (!r.count(k)) throw input_error("range key '" + k + "' does not apply to family " + to_string(f));
    r[k] = v;
  }
  return r;
}

ScanStatus ScanReport::status() const {
  if (failures) return ScanStatus::verification_failure;
  if (violations) return ScanStatus::violation;
  return ScanStatus::ok;
}

namespace {

int int_range(const Ranges& r, const std::string& key, int lo, int hi) {
  const auto v = parse_entries(r.at(key));
  if (v.size() != 1 || v[0] < lo || v[0] > hi)
    throw input_error("range " + key + " must be an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(v[0]);
}

void tally(ScanReport& rep, EhrhartResult r) {
  if (!r.valid)
    ++rep.failures;
  else if (!r.nonneg)
    ++rep.violations;
  rep.results.push_back(std::move(r));
}

}  // namespace

std::vector<EhrhartResult> key_complex_batch(const Partition& lambda, ResultCache* cache) {
  const int n = static_cast<int>(lambda.size());
  const auto perms = all_permutations(n);
  std::vector<CountedObject> objs;
  for (const auto& s : perms) objs.push_back(CountedObject::key_complex(lambda, s));
  bool all_cached = cache != nullptr;
  if (cache)
    for (const auto& o : objs) all_cached = all_cached && cache->lookup(o, o.degree_bound()).has_value();
  std::vector<EhrhartResult> out;
  if (all_cached) {
    for (const auto& o : objs) out.push_back(fit_counts(o, o.degree_bound(), *cache->lookup(o, o.degree_bound())));
    return out;
  }
  int kmax = 0;
  for (const auto& o : objs) kmax = std::max(kmax, o.degree_bound() + kVerifyPoints);
  std::vector<std::map<Permutation, Integer>> by_k;
  for (int k = 0; k <= kmax; ++k) by_k.push_back(complex_counts_by_type(lambda, k));
  for (const auto& o : objs) {
    const int d = o.degree_bound();
    std::vector<Integer> counts;
    for (int k = 0; k <= d + kVerifyPoints; ++k) counts.push_back(by_k[static_cast<std::size_t>(k)].at(o.sigma));
    if (cache) cache->store(o, d, counts);
    out.push_back(fit_counts(o, d, counts));
  }
  return out;
}

ScanReport scan(ScanFamily family, const Ranges& given, ResultCache* cache) {
  ScanReport rep;
  rep.family = family;
  rep.ranges = resolve_ranges(family, given);
  const Ranges& r = rep.ranges;
  switch (family) {
    case ScanFamily::skew_gt:
    case ScanFamily::skew_kostka: {
      const Partition bound = parse_partition(r.at("bound"));
      const int n = int_range(r, "n", 1, 8);
      for (const Partition& lambda : partitions_inside(bound))
        for (const Partition& mu : partitions_inside(lambda)) {
          if (family == ScanFamily::skew_gt) {
            tally(rep, cached_ehrhart(CountedObject::skew(lambda, mu, n), cache));
            continue;
          }
          for (const WeightVector& nu : compositions(lambda.total() - mu.total(), static_cast<std::size_t>(n)))
            tally(rep, cached_ehrhart(CountedObject::skew_weight(lambda, mu, nu), cache));
        }
      break;
    }
    case ScanFamily::stretched_kostka: {
      const int m = int_range(r, "m", 0, 12);
      const int nmax = int_range(r, "n", 1, 6);
      for (int n = 1; n <= nmax; ++n)
        for (int size = 0; size <= m; ++size) {
          const auto parts = partitions_of(size, static_cast<std::size_t>(n));
          for (const Partition& lambda : parts)
            for (const Partition& mu : parts)
              if (dominates(lambda, mu))
                tally(rep, cached_ehrhart(CountedObject::gt_weight(lambda, WeightVector(mu.vec())), cache));
        }
      break;
    }
    case ScanFamily::key_complex: {
      const int n = int_range(r, "n", 1, 5);
      const int max_part = int_range(r, "max_part", 0, 12);
      for (const Partition& lambda : partitions_bounded(static_cast<std::size_t>(n), max_part))
        for (EhrhartResult& res : key_complex_batch(lambda, cache)) tally(rep, std::move(res));
      break;
    }
  }
  return rep;
}

}  // namespace gtkey
