#pragma once

#include <optional>
#include <string>

namespace teich {

inline constexpr const char* kCacheVersion = "1";

// One JSON record per canonical key, stored under the cache directory from
// --cache-dir or TEICHCURVE_CACHE. Version-tagged; corrupt or mismatched
// records are ignored with a warning. All failures degrade to uncached
// computation.
class ResultCache {
 public:
  explicit ResultCache(std::string dir) : dir_(std::move(dir)) {}

  bool enabled() const { return !dir_.empty(); }
  // Returns the payload JSON text for the key, when present and valid.
  std::optional<std::string> lookup(const std::string& key) const;
  void store(const std::string& key, const std::string& payload_json) const;

 private:
  std::string path_for(const std::string& key) const;
  std::string dir_;
};

}  // namespace teich
