#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "schurpos/serialize.hpp"

using namespace schurpos;
namespace fs = std::filesystem;

namespace {

fs::path golden_dir() { return fs::path(SCHURPOS_TEST_DIR) / "golden" / "kmatrix"; }
fs::path share_dir() { return fs::path(SCHURPOS_TEST_DIR).parent_path() / "share" / "presentations"; }

const std::vector<std::pair<int, int>>& golden_blocks() {
  static const std::vector<std::pair<int, int>> blocks = {
      {1, 4}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 4}};
  return blocks;
}

}  // namespace

TEST_CASE("k-matrix golden files match the built bases", "[golden]") {
  for (const auto& [k, d] : golden_blocks()) {
    fs::path file = golden_dir() / ("k" + std::to_string(k) + "_d" + std::to_string(d) + ".json");
    INFO(file.string());
    REQUIRE(fs::exists(file));
    CHECK(load_json_file(file) == kmatrix_to_json(k, d));
  }
}

TEST_CASE("golden inverse pairs multiply to the identity", "[golden]") {
  for (const auto& [k, d] : golden_blocks()) {
    Json j = load_json_file(golden_dir() / ("k" + std::to_string(k) + "_d" + std::to_string(d) + ".json"));
    const auto& m = j["matrix"];
    const auto& inv = j["inverse"];
    std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t jj = 0; jj < n; ++jj) {
        long long acc = 0;
        for (std::size_t t = 0; t < n; ++t)
          acc += m[i][t].get<long long>() * inv[t][jj].get<long long>();
        CHECK(acc == (i == jj ? 1 : 0));
      }
  }
}

// Hidden maintenance entry point: rewrites the golden K-matrix blocks and the
// example presentation files from the current implementation.
TEST_CASE("regenerate golden files", "[.][regen]") {
  fs::create_directories(golden_dir());
  for (const auto& [k, d] : golden_blocks())
    save_json_file(golden_dir() / ("k" + std::to_string(k) + "_d" + std::to_string(d) + ".json"),
                   kmatrix_to_json(k, d));
  fs::create_directories(share_dir());
  save_json_file(share_dir() / "binomial_deg6.json",
                 presentation_to_json(make_binomial_presentation(6)));
  save_json_file(share_dir() / "bounded_sym_k2_deg6.json",
                 presentation_to_json(make_sym_presentation(6, 2)));
  save_json_file(share_dir() / "sym_deg4.json", presentation_to_json(make_sym_presentation(4)));
  SUCCEED();
}
