#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "weylell/ell.hpp"

namespace weylell {

inline constexpr int kProfileSchemaVersion = 1;

/// The cached ell profile of a root system: both invariants with their
/// attaining data and witnesses, plus cheap derived facts.
struct TypeProfile {
  std::string type;
  Int ell = 0;
  int ell_h_index = 0;
  int ell_lambda_index = 0;
  std::string ell_witness;
  Int ell_sd = 0;
  std::vector<Int> sd_h_coords;
  int sd_lambda_index = 0;
  std::string sd_witness;
  Int num_positive_roots = 0;
  bool minus_one = false;
};

inline TypeProfile compute_profile(const RootSystem& rs) {
  TypeProfile p;
  p.type = rs.type_string();
  const auto d = ell_delta(rs);
  p.ell = d.value;
  p.ell_h_index = d.h_index;
  p.ell_lambda_index = d.lambda_index;
  p.ell_witness = format_word(d.best.witness, rs.rank());
  const auto sd = ell_sd_delta(rs);
  p.ell_sd = sd.value;
  p.sd_h_coords = sd.h.coords;
  p.sd_lambda_index = sd.lambda_index;
  p.sd_witness = format_word(sd.best.witness, rs.rank());
  p.num_positive_roots = rs.num_positive_roots();
  p.minus_one = minus_one_longest(rs);
  return p;
}

inline nlohmann::ordered_json profile_to_json(const TypeProfile& p) {
  nlohmann::ordered_json j;
  j["schemaVersion"] = kProfileSchemaVersion;
  j["type"] = p.type;
  j["ell"] = p.ell;
  j["ellAttaining"] = {{"h", "w" + std::to_string(p.ell_h_index)},
                       {"lambda", "w" + std::to_string(p.ell_lambda_index)},
                       {"witness", p.ell_witness}};
  j["ellSd"] = p.ell_sd;
  j["ellSdAttaining"] = {{"hCoords", p.sd_h_coords},
                         {"lambda", "w" + std::to_string(p.sd_lambda_index)},
                         {"witness", p.sd_witness}};
  j["numPositiveRoots"] = p.num_positive_roots;
  j["minusOneLongest"] = p.minus_one;
  return j;
}

inline std::optional<TypeProfile> profile_from_json(const nlohmann::json& j) {
  if (!j.is_object()) return std::nullopt;
  if (!j.contains("schemaVersion") || j["schemaVersion"] != kProfileSchemaVersion)
    return std::nullopt;
  try {
    TypeProfile p;
    p.type = j.at("type").get<std::string>();
    p.ell = j.at("ell").get<Int>();
    p.ell_h_index = std::stoi(j.at("ellAttaining").at("h").get<std::string>().substr(1));
    p.ell_lambda_index = std::stoi(j.at("ellAttaining").at("lambda").get<std::string>().substr(1));
    p.ell_witness = j.at("ellAttaining").at("witness").get<std::string>();
    p.ell_sd = j.at("ellSd").get<Int>();
    p.sd_h_coords = j.at("ellSdAttaining").at("hCoords").get<std::vector<Int>>();
    p.sd_lambda_index =
        std::stoi(j.at("ellSdAttaining").at("lambda").get<std::string>().substr(1));
    p.sd_witness = j.at("ellSdAttaining").at("witness").get<std::string>();
    p.num_positive_roots = j.at("numPositiveRoots").get<Int>();
    p.minus_one = j.at("minusOneLongest").get<bool>();
    return p;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

/// Cache directory resolution: explicit flag beats WEYLELL_CACHE_DIR beats
/// XDG_CACHE_HOME/weylell beats ~/.cache/weylell.
inline std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("WEYLELL_CACHE_DIR")) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
    return std::filesystem::path(xdg) / "weylell";
  if (const char* home = std::getenv("HOME"))
    return std::filesystem::path(home) / ".cache" / "weylell";
  return std::filesystem::temp_directory_path() / "weylell-cache";
}

class ProfileCache {
 public:
  explicit ProfileCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::filesystem::path path_for(const std::string& type) const { return dir_ / (type + ".json"); }

  /// Missing file, unreadable JSON or schema mismatch all mean "recompute";
  /// a warning is recorded for corrupt files, never a partial read.
  std::optional<TypeProfile> load(const std::string& type) {
    const auto p = path_for(type);
    std::ifstream in(p);
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      warnings_.push_back("cache file " + p.string() + " is corrupt (" + e.what() +
                          "); recomputing");
      return std::nullopt;
    }
    auto prof = profile_from_json(j);
    if (!prof)
      warnings_.push_back("cache file " + p.string() +
                          " has a stale or foreign schema; recomputing");
    return prof;
  }

  void store(const TypeProfile& p) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    std::ofstream out(path_for(p.type));
    if (!out) {
      warnings_.push_back("cannot write cache file " + path_for(p.type).string());
      return;
    }
    out << profile_to_json(p).dump(2) << "\n";
  }

  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  std::filesystem::path dir_;
  std::vector<std::string> warnings_;
};

}  // namespace weylell
