#pragma once

// Exhaustive non-negativity scans over families of Ehrhart polynomials.
//
// Families and their ranges ("key=value;key=value"):
//   skew_gt           bound=3,2,1;n=3   every lambda inside bound, every mu inside lambda
//   skew_kostka       bound=3,2,1;n=3   as above, every weight nu of |lambda|-|mu| in n parts
//   stretched_kostka  m=6;n=4           lambda, mu of size <= m with <= n' parts, n' <= n, lambda >= mu
//   key_complex       n=4;max_part=3    every lambda with n parts <= max_part, every sigma in S_n

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gtkey/cache.hpp"
#include "gtkey/ehrhart.hpp"

namespace gtkey {

enum class ScanFamily { skew_gt, skew_kostka, stretched_kostka, key_complex };
enum class ScanStatus { ok, violation, verification_failure };

std::string to_string(ScanFamily f);
ScanFamily parse_scan_family(const std::string& s);
std::string to_string(ScanStatus s);

using Ranges = std::map<std::string, std::string>;

/// Parses "key=value;key=value". Throws input_error on malformed items.
Ranges parse_ranges(std::string_view text);
/// Family defaults overlaid with the given ranges; unknown keys are rejected.
Ranges resolve_ranges(ScanFamily f, const Ranges& given);

struct ScanReport {
  ScanFamily family = ScanFamily::skew_gt;
  Ranges ranges;
  std::vector<EhrhartResult> results;
  int violations = 0;  // valid results with a negative coefficient
  int failures = 0;    // results whose verify points did not match

  /// verification_failure dominates violation.
  ScanStatus status() const;
};

ScanReport scan(ScanFamily family, const Ranges& ranges, ResultCache* cache = nullptr);

/// Key-complex Ehrhart polynomials of every sigma in S_n from one histogram per dilation.
std::vector<EhrhartResult> key_complex_batch(const Partition& lambda, ResultCache* cache = nullptr);

}  // namespace gtkey
