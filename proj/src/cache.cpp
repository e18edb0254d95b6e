#include "blowup/cache.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace blowup {

OracleCache::OracleCache(std::string directory) {
  std::filesystem::create_directories(directory);
  path_ = (std::filesystem::path(directory) / "oracle-cache.jsonl").string();
}

void OracleCache::load() {
  if (loaded_) return;
  loaded_ = true;
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.contains("key")) continue;
    CacheEntry entry;
    entry.value = j.value("value", 0LL);
    entry.explored = j.value("explored", 0ULL);
    if (j.contains("witnesses"))
      entry.witnesses = j["witnesses"].get<std::vector<std::string>>();
    entries_[j["key"].get<std::string>()] = std::move(entry);
  }
}

std::optional<CacheEntry> OracleCache::lookup(const std::string& key) {
  std::lock_guard<std::mutex> lock(mutex_);
  load();
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void OracleCache::store(const std::string& key, const CacheEntry& entry) {
  std::lock_guard<std::mutex> lock(mutex_);
  load();
  entries_[key] = entry;
  nlohmann::json j{{"key", key},
                   {"value", entry.value},
                   {"witnesses", entry.witnesses},
                   {"explored", entry.explored},
                   {"stored_at_ms",
                    std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::system_clock::now().time_since_epoch())
                        .count()}};
  std::ofstream out(path_, std::ios::app);
  out << j.dump() << '\n';
}

}  // namespace blowup
