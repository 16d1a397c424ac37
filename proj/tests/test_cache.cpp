#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "weylell/profile_cache.hpp"

using namespace weylell;

namespace {
struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("weylell-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};
}  // namespace

TEST_CASE("profile round-trips through the cache") {
  TempDir tmp;
  ProfileCache cache(tmp.path);

  const auto rs = RootSystem::from_string("G2");
  const TypeProfile p = compute_profile(rs);
  REQUIRE(p.ell == 3);
  REQUIRE(p.ell_sd == 3);
  REQUIRE(p.minus_one);

  REQUIRE(!cache.load("G2").has_value());  // cold
  cache.store(p);
  auto again = cache.load("G2");
  REQUIRE(again.has_value());
  REQUIRE(again->ell == p.ell);
  REQUIRE(again->ell_sd == p.ell_sd);
  REQUIRE(again->ell_witness == p.ell_witness);
  REQUIRE(again->sd_h_coords == p.sd_h_coords);
  REQUIRE(cache.warnings().empty());
}

TEST_CASE("corrupt cache files are reported and ignored") {
  TempDir tmp;
  ProfileCache cache(tmp.path);
  {
    std::ofstream out(cache.path_for("D5"));
    out << "{ not json";
  }
  REQUIRE(!cache.load("D5").has_value());
  REQUIRE(cache.warnings().size() == 1);
  REQUIRE(cache.warnings()[0].find("corrupt") != std::string::npos);
}

TEST_CASE("schema version mismatch forces a recompute") {
  TempDir tmp;
  ProfileCache cache(tmp.path);
  const auto rs = RootSystem::from_string("A2");
  auto j = profile_to_json(compute_profile(rs));
  j["schemaVersion"] = kProfileSchemaVersion + 1;
  {
    std::ofstream out(cache.path_for("A2"));
    out << j.dump();
  }
  REQUIRE(!cache.load("A2").has_value());
  REQUIRE(!cache.warnings().empty());
}

TEST_CASE("profiles are deterministic") {
  const auto rs = RootSystem::from_string("D5");
  const auto a = profile_to_json(compute_profile(rs)).dump(2);
  const auto b = profile_to_json(compute_profile(RootSystem::from_string("D5"))).dump(2);
  REQUIRE(a == b);

  const TypeProfile p = compute_profile(rs);
  REQUIRE(p.ell == 3);
  REQUIRE(p.ell_sd == 4);
  REQUIRE(!p.minus_one);
}
