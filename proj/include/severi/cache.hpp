#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "severi/coeffs.hpp"

namespace severi {

constexpr int kCacheFormatVersion = 1;

std::string sha256_hex(const std::string& bytes);

nlohmann::json template_data_to_json(const TemplateData& data);
// Re-validates every graph as a template of the stated cogenus.
TemplateData template_data_from_json(const nlohmann::json& j);

struct CacheEntry {
  unsigned delta = 0;
  nlohmann::json payload;  // {"templates": [...], "table": {...}}
  std::string hash;        // sha256 of payload.dump()

  nlohmann::json to_json() const;
};

CacheEntry make_cache_entry(const TemplateData& data, const CoeffTable& table);

// One file per delta. Loading returns nullopt on a miss, a version
// mismatch, a parse error or a hash mismatch; callers then recompute.
class TemplateCache {
 public:
  explicit TemplateCache(std::filesystem::path dir);

  // $SEVERI_CACHE_DIR, else $XDG_CACHE_HOME/toric-severi, else ~/.cache/toric-severi.
  static std::filesystem::path default_directory();

  std::filesystem::path path_for(unsigned delta) const;
  std::optional<CacheEntry> load(unsigned delta) const;
  void store(const CacheEntry& entry) const;
  void clear() const;

 private:
  std::filesystem::path dir_;
};

}  // namespace severi
