#include "teich/cache.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace teich {

namespace fs = std::filesystem;

std::string ResultCache::path_for(const std::string& key) const {
  std::string safe;
  for (char c : key) safe += (std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  return (fs::path(dir_) / (safe + ".json")).string();
}

std::optional<std::string> ResultCache::lookup(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.value("version", "") != kCacheVersion) return std::nullopt;
    if (j.value("key", "") != key) return std::nullopt;
    return j.at("payload").dump();
  } catch (const std::exception& e) {
    std::cerr << "warning: ignoring corrupt cache record for " << key << ": " << e.what()
              << "\n";
    return std::nullopt;
  }
}

void ResultCache::store(const std::string& key, const std::string& payload_json) const {
  if (!enabled()) return;
  try {
    fs::create_directories(dir_);
    nlohmann::json j;
    j["version"] = kCacheVersion;
    j["key"] = key;
    j["payload"] = nlohmann::json::parse(payload_json);
    std::ofstream out(path_for(key));
    if (!out) throw std::runtime_error("cannot open cache file");
    out << j.dump() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "warning: cache directory unusable (" << e.what()
              << "); continuing uncached\n";
  }
}

}  // namespace teich
