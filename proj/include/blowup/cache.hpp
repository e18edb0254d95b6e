#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace blowup {

struct CacheEntry {
  long long value = 0;
  std::vector<std::string> witnesses;  // graph6
  unsigned long long explored = 0;
};

// Append-only JSON-lines store for oracle results, keyed by the canonical
// family key and n. Safe for concurrent use within one process; reruns
// append fresh lines and later lines win on load.
class OracleCache {
 public:
  explicit OracleCache(std::string directory);

  std::optional<CacheEntry> lookup(const std::string& key);
  void store(const std::string& key, const CacheEntry& entry);

  const std::string& path() const { return path_; }

 private:
  void load();

  std::string path_;
  bool loaded_ = false;
  std::map<std::string, CacheEntry> entries_;
  std::mutex mutex_;
};

}  // namespace blowup
