#pragma once

// Append-only JSON-lines store of sampled counts, keyed by object descriptor.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gtkey/ehrhart.hpp"

namespace gtkey {

class ResultCache {
 public:
  /// Loads existing entries; a missing file is an empty cache. Malformed lines are skipped.
  explicit ResultCache(std::string path);

  /// Counts for k = 0..D+kVerifyPoints, if stored.
  std::optional<std::vector<Integer>> lookup(const CountedObject& o, int degree_bound) const;
  /// Appends one line; no-op if the key is already present.
  void store(const CountedObject& o, int degree_bound, const std::vector<Integer>& counts);

  std::size_t size() const { return entries_.size(); }
  const std::string& path() const { return path_; }

 private:
  static std::string key(const CountedObject& o, int degree_bound);
  std::string path_;
  std::map<std::string, std::vector<Integer>> entries_;
};

/// ehrhart_of with counts served from, and written back to, the cache.
EhrhartResult cached_ehrhart(const CountedObject& o, ResultCache* cache);

}  // namespace gtkey
