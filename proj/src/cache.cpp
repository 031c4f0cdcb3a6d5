#include "severi/cache.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace severi {

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

nlohmann::json template_data_to_json(const TemplateData& data) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : data.records) {
    nlohmann::json eta = nlohmann::json::array();
    for (const auto& e : r.form.eta) eta.push_back(to_string(e));
    nlohmann::json j = graph_to_json(r.tmpl.graph());
    j["eta"] = eta;
    list.push_back(j);
  }
  return {{"delta", data.delta}, {"templates", list}};
}

TemplateData template_data_from_json(const nlohmann::json& j) {
  TemplateData data;
  data.delta = j.at("delta").get<unsigned>();
  for (const auto& t : j.at("templates")) {
    LongEdgeGraph g = graph_from_json(t);
    if (cogenus(g) != data.delta) throw std::invalid_argument("cached template has the wrong cogenus");
    std::vector<Rational> eta;
    for (const auto& e : t.at("eta")) eta.push_back(parse_rational(e.get<std::string>()));
    if (eta.size() != length(g) + 1) throw std::invalid_argument("cached linear form has the wrong length");
    data.records.push_back(make_record(Template(std::move(g)), make_linear_form(std::move(eta))));
  }
  return data;
}

nlohmann::json CacheEntry::to_json() const {
  return {{"format", "toric-severi-template-cache"},
          {"version", kCacheFormatVersion},
          {"delta", delta},
          {"payload", payload},
          {"sha256", hash}};
}

CacheEntry make_cache_entry(const TemplateData& data, const CoeffTable& table) {
  CacheEntry e;
  e.delta = data.delta;
  e.payload = {{"templates", template_data_to_json(data)}, {"table", coeff_table_to_json(table)}};
  e.hash = sha256_hex(e.payload.dump());
  return e;
}

TemplateCache::TemplateCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path TemplateCache::default_directory() {
  if (const char* d = std::getenv("SEVERI_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "toric-severi";
  if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "toric-severi";
  return std::filesystem::temp_directory_path() / "toric-severi";
}

std::filesystem::path TemplateCache::path_for(unsigned delta) const {
  return dir_ / ("templates-v" + std::to_string(kCacheFormatVersion) + "-delta" + std::to_string(delta) + ".json");
}

std::optional<CacheEntry> TemplateCache::load(unsigned delta) const {
  std::ifstream in(path_for(delta));
  if (!in) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("version").get<int>() != kCacheFormatVersion) return std::nullopt;
    CacheEntry e;
    e.delta = j.at("delta").get<unsigned>();
    e.payload = j.at("payload");
    e.hash = j.at("sha256").get<std::string>();
    if (e.delta != delta || sha256_hex(e.payload.dump()) != e.hash) return std::nullopt;
    return e;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void TemplateCache::store(const CacheEntry& entry) const {
  std::filesystem::create_directories(dir_);
  auto target = path_for(entry.delta);
  auto tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << entry.to_json().dump(1) << '\n';
  }
  std::filesystem::rename(tmp, target);
}

void TemplateCache::clear() const {
  if (!std::filesystem::exists(dir_)) return;
  for (const auto& f : std::filesystem::directory_iterator(dir_))
    if (f.path().filename().string().rfind("templates-v", 0) == 0) std::filesystem::remove(f.path());
}

}  // namespace severi
