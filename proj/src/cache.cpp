#include "gtkey/cache.hpp"

#include <fstream>

#include "gtkey/io.hpp"

namespace gtkey {

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      const Json j = Json::parse(line);
      std::vector<Integer> counts;
      for (const auto& c : j.at("counts")) counts.emplace_back(c.get<std::string>());
      entries_[j.at("key").dump() + "#" + std::to_string(j.at("degree_bound").get<int>())] = std::move(counts);
    } catch (const std::exception&) {
      // A torn final line from an interrupted run is ignored.
    }
  }
}

std::string ResultCache::key(const CountedObject& o, int degree_bound) {
  return to_json(o).dump() + "#" + std::to_string(degree_bound);
}

std::optional<std::vector<Integer>> ResultCache::lookup(const CountedObject& o, int degree_bound) const {
  const auto it = entries_.find(key(o, degree_bound));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::store(const CountedObject& o, int degree_bound, const std::vector<Integer>& counts) {
  const std::string k = key(o, degree_bound);
  if (entries_.count(k)) return;
  entries_[k] = counts;
  Json cs = Json::array();
  for (const auto& c : counts) cs.push_back(c.get_str());
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("cannot write cache file " + path_);
  out << Json{{"key", to_json(o)}, {"degree_bound", degree_bound}, {"counts", cs}}.dump() << '\n';
}

EhrhartResult cached_ehrhart(const CountedObject& o, ResultCache* cache) {
  const int d = o.degree_bound();
  if (cache)
    if (auto hit = cache->lookup(o, d)) return fit_counts(o, d, *hit);
  std::vector<Integer> counts;
  for (int k = 0; k <= d + kVerifyPoints; ++k) counts.push_back(o.count(k));
  if (cache) cache->store(o, d, counts);
  return fit_counts(o, d, counts);
}

}  // namespace gtkey
