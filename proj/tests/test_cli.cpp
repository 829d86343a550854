#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "schurpos/serialize.hpp"

namespace {

namespace fs = std::filesystem;
using schurpos::Json;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + std::string(SCHURPOS_CLI_BIN) + " " + args +
                    " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string golden_path(const std::string& name) {
  return std::string(SCHURPOS_TEST_DIR) + "/golden/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path temp_file(const std::string& name, const std::string& contents) {
  fs::path path = fs::temp_directory_path() / name;
  std::ofstream out(path);
  out << contents;
  return path;
}

// Line-by-line comparison with timing fields zeroed.
void check_jsonl_matches(const std::string& got, const std::string& expected) {
  std::stringstream a(got), b(expected);
  std::string la, lb;
  int line = 0;
  while (true) {
    bool ga = static_cast<bool>(std::getline(a, la));
    bool gb = static_cast<bool>(std::getline(b, lb));
    INFO("line " << line);
    REQUIRE(ga == gb);
    if (!ga) break;
    Json ja = Json::parse(la), jb = Json::parse(lb);
    for (auto* j : {&ja, &jb}) {
      if (j->contains("duration_ms")) (*j)["duration_ms"] = 0;
      if (j->contains("seconds")) (*j)["seconds"] = 0;
    }
    CHECK(ja == jb);
    ++line;
  }
}

}  // namespace

TEST_CASE("expand matches goldens byte for byte", "[cli]") {
  auto result = run_cli("expand --family kschur --k 2 --index 2,1 --basis s");
  CHECK(result.exit_code == 0);
  CHECK(result.out == read_file(golden_path("expand_kschur_k2_21_s.json")));
  // determinism: a second run is identical
  CHECK(run_cli("expand --family kschur --k 2 --index 2,1 --basis s").out == result.out);

  auto hp = run_cli("expand --family h --index 2 --basis p");
  CHECK(hp.exit_code == 0);
  CHECK(hp.out ==
        R"({"basis":"p","terms":[{"den":2,"num":1,"partition":[2]},{"den":2,"num":1,"partition":[1,1]}]})"
        "\n");

  auto schur_p = run_cli("expand --family schur-p --index 2,1 --basis s");
  CHECK(schur_p.exit_code == 0);
  CHECK(schur_p.out == R"({"basis":"s","terms":[{"den":1,"num":1,"partition":[2,1]}]})" "\n");

  auto text = run_cli("expand --family kschur --k 2 --index 2,1 --basis s --output text");
  CHECK(text.out == "s[3]: 1\ns[2,1]: 1\n");

  auto empty = run_cli("expand --family h --index - --basis m");
  CHECK(empty.exit_code == 0);
  CHECK(empty.out == R"({"basis":"m","terms":[{"den":1,"num":1,"partition":[]}]})" "\n");
}

TEST_CASE("expand input errors exit with code 2", "[cli]") {
  CHECK(run_cli("expand --family kschur --index 2,1 --basis s").exit_code == 2);       // missing --k
  CHECK(run_cli("expand --family kschur --k 2 --index 3,1 --basis s").exit_code == 2); // not bounded
  CHECK(run_cli("expand --family schur-p --index 2,2 --basis s").exit_code == 2);      // not strict
  CHECK(run_cli("expand --family h --index 1,2 --basis s").exit_code == 2);            // not decreasing
  CHECK(run_cli("expand --family h --index x --basis s").exit_code == 2);
  CHECK(run_cli("expand --family h --index 11 --basis s").exit_code == 2);             // degree cap
  CHECK(run_cli("expand --family h --index 11 --basis s --force").exit_code == 0);
  CHECK(run_cli("expand --family nope --index 1 --basis s").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("branch matches goldens", "[cli]") {
  auto result = run_cli("branch --k 1 --lambda 1,1");
  CHECK(result.exit_code == 0);
  CHECK(result.out == read_file(golden_path("branch_k1_11.json")));
  auto text = run_cli("branch --k 1 --lambda 1,1 --output text");
  CHECK(text.out == "[2]: 1\n[1,1]: 1\n");
}

TEST_CASE("theta applies the morphism to a file", "[cli]") {
  auto input = temp_file("schurpos_theta_in.json",
                         R"({"basis":"h","terms":[{"partition":[2],"num":1,"den":1}]})");
  auto result = run_cli("theta --input " + input.string() + " --basis p");
  CHECK(result.exit_code == 0);
  CHECK(result.out == R"({"basis":"p","terms":[{"den":1,"num":2,"partition":[1,1]}]})" "\n");
  CHECK(run_cli("theta --input /nonexistent.json").exit_code == 2);
}

TEST_CASE("gamma reports expansions and membership failures", "[cli]") {
  auto p3 = temp_file("schurpos_gamma_p3.json",
                      R"({"basis":"s","terms":[{"partition":[3],"num":1,"den":1},
                          {"partition":[2,1],"num":1,"den":1},
                          {"partition":[1,1,1],"num":1,"den":1}]})");
  auto result = run_cli("gamma --input " + p3.string());
  CHECK(result.exit_code == 0);
  Json j = Json::parse(result.out);
  CHECK(j["gamma_terms"] == Json::parse(R"([{"coeff":1,"odd_partition":[3]}])"));

  auto s2 = temp_file("schurpos_gamma_s2.json",
                      R"({"basis":"s","terms":[{"partition":[2],"num":1,"den":1}]})");
  auto err = run_cli("gamma --input " + s2.string());
  CHECK(err.exit_code == 1);
  Json je = Json::parse(err.out);
  CHECK(je["error"] == "even-p-support");
  CHECK(je["witness"] == Json::array({2}));

  auto bounded = run_cli("gamma --input " + p3.string() + " --bound 1");
  CHECK(bounded.exit_code == 1);
  CHECK(Json::parse(bounded.out)["error"] == "generator-bound-exceeded");
}

TEST_CASE("hopf validates presentations from disk", "[cli]") {
  Json good = schurpos::presentation_to_json(schurpos::make_binomial_presentation(4));
  auto good_file = temp_file("schurpos_hopf_good.json", good.dump());
  auto result = run_cli("hopf --presentation " + good_file.string() + " --element x^2");
  CHECK(result.exit_code == 0);
  Json j = Json::parse(result.out);
  CHECK(j["report"]["coassociative"] == true);
  CHECK(j["report"]["cocommutative"] == true);
  CHECK(j["symmetric"] == true);
  CHECK(j["qsym"]["terms"] ==
        Json::parse(R"([{"composition":[2],"den":1,"num":1},{"composition":[1,1],"den":1,"num":2}])"));

  // corrupted coproduct: coassociativity fails, exit 1
  Json bad = good;
  for (auto& row : bad["coproduct"])
    if (row[4] == 3 && row[0] == 2 && row[2] == 1) row[6] = 5;
  auto bad_file = temp_file("schurpos_hopf_bad.json", bad.dump());
  auto failed = run_cli("hopf --presentation " + bad_file.string());
  CHECK(failed.exit_code == 1);
  CHECK(Json::parse(failed.out)["report"]["coassociative"] == false);

  CHECK(run_cli("hopf --presentation /nonexistent.json").exit_code == 2);
}

TEST_CASE("verify emits line-delimited records", "[cli]") {
  auto result = run_cli("verify --suite p-pos --max-degree 3");
  CHECK(result.exit_code == 0);
  check_jsonl_matches(result.out, read_file(golden_path("verify_p_pos_d3.jsonl")));

  // item counts: 4 strict partitions of size 1..3 all pass
  int item_lines = 0;
  std::stringstream ss(result.out);
  std::string line;
  while (std::getline(ss, line)) {
    Json j = Json::parse(line);
    if (j.contains("item")) {
      ++item_lines;
      CHECK(j["pass"] == true);
    }
  }
  CHECK(item_lines == 4);

  auto text = run_cli("verify --suite ranks --output text");
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("[PASS] c9") != std::string::npos);
  CHECK(text.out.find("summary: 2 criteria") != std::string::npos);

  CHECK(run_cli("verify --suite nope").exit_code == 2);
  CHECK(run_cli("verify --suite p-pos --max-degree 12").exit_code == 2);
}

TEST_CASE("cache directory is honored", "[cli]") {
  fs::path dir = fs::temp_directory_path() / "schurpos_cli_cache";
  fs::remove_all(dir);
  std::string env = "SCHURPOS_CACHE_DIR=" + dir.string();
  auto first = run_cli("expand --family s --index 2,1 --basis h", env);
  CHECK(first.exit_code == 0);
  CHECK(fs::exists(dir));
  bool has_entry = false;
  for (const auto& entry : fs::directory_iterator(dir))
    has_entry = has_entry || entry.path().extension() == ".json";
  CHECK(has_entry);
  auto second = run_cli("expand --family s --index 2,1 --basis h", env);
  CHECK(second.out == first.out);
  fs::remove_all(dir);
}
