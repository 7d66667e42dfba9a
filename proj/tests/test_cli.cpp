#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support.hpp"
#include "trider/workspace.hpp"

using namespace trider;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus_file(const std::string& name) { return TRIDER_SOURCE_DIR "/corpus/" + name + ".json"; }

std::vector<std::string> all_corpus_files() {
  std::vector<std::string> files;
  for (const auto& e : standard::seed_corpus()) files.push_back(corpus_file(e.name));
  return files;
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("trider_test_" + name);
  std::ofstream(path) << text;
  return path;
}

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("check on the shipped T2 file passes") {
  const auto r = run({"check", corpus_file("tri_q_q_q")});
  CHECK(r.code == cli::pass);
  CHECK(r.out.find("ok") != std::string::npos);
}

TEST_CASE("every shipped corpus file passes check") {
  auto args = all_corpus_files();
  args.insert(args.begin(), "check");
  CHECK(run(args).code == cli::pass);
}

TEST_CASE("check on a corrupted structure constant fails and names the quadruple") {
  const auto r = run({"check", TRIDER_SOURCE_DIR "/tests/data/t2_corrupted.json"});
  CHECK(r.code == cli::check_failed);
  CHECK(r.out.find("associativity (0, 0, 1, 1)") != std::string::npos);
  const auto j = run({"check", "--json", TRIDER_SOURCE_DIR "/tests/data/t2_corrupted.json"});
  const auto report = nlohmann::json::parse(j.out);
  CHECK_FALSE(report["ok"].get<bool>());
  CHECK(report["files"][0]["violations"][0]["witness"] == nlohmann::json::array({0, 0, 1, 1}));
}

TEST_CASE("parse errors exit 2 with a location") {
  const auto r = run({"check", TRIDER_SOURCE_DIR "/tests/data/truncated.json"});
  CHECK(r.code == cli::input_error);
  CHECK(r.err.find("line 6") != std::string::npos);
  CHECK(run({"check", "/nonexistent.json"}).code == cli::input_error);
  CHECK(run({"frobnicate"}).code == cli::input_error);
  CHECK(run({}).code == cli::input_error);
  CHECK(run({"decompose", "--levels", "0", corpus_file("tri_q_q_q")}).code == cli::input_error);
  CHECK(run({"sample", "--kind", "lie", corpus_file("tri_q_q_q")}).code == cli::input_error);
  CHECK(run({"--help"}).code == cli::pass);
}

TEST_CASE("decompose --levels 4 --seed 7 on the corpus") {
  auto args = all_corpus_files();
  args.insert(args.begin(), {"decompose", "--levels", "4", "--seed", "7"});
  const auto r = run(args);
  CHECK(r.code == cli::pass);
  CHECK(count(r.out, "level 4: ok") == 6);
  CHECK(r.out.find("FAILED") == std::string::npos);

  args.push_back("--json");
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == cli::pass);
  CHECK(a.out == b.out);
  const auto report = nlohmann::json::parse(a.out);
  CHECK(report["ok"].get<bool>());
  CHECK(report["files"].size() == 6);
  for (const auto& f : report["files"]) {
    const auto& levels = f["results"][0]["levels"];
    CHECK(levels.size() == 4);
    for (const auto& lv : levels) {
      CHECK(lv["residual_zero"].get<bool>());
      CHECK(lv["chi_central"].get<bool>());
      CHECK(lv["pair_found"].get<bool>());
    }
  }
}

TEST_CASE("center, spaces and extend reports") {
  const auto c = run({"center", "--json", corpus_file("tri_qq_q2_q")});
  CHECK(c.code == cli::pass);
  const auto cj = nlohmann::json::parse(c.out);
  const auto& tri = cj["files"][0]["triangular"][0];
  CHECK(tri["center_dim"] == 1);
  CHECK(tri["center_a_dim"] == 2);
  CHECK(tri["eta"][0]["b"] == nlohmann::json::array({"1"}));

  const auto s = run({"spaces", "--json", "--name", "T2", corpus_file("tri_t2_q2_q")});
  CHECK(s.code == cli::pass);
  const auto sj = nlohmann::json::parse(s.out);
  REQUIRE(sj["files"][0]["targets"].size() == 1);
  CHECK(sj["files"][0]["targets"][0]["derivation"] == 2);
  CHECK(sj["files"][0]["targets"][0]["inner_derivation"] == 2);

  const auto e = run({"extend", "--json", corpus_file("tri_q_q2_qq"), corpus_file("tri_q_q_q")});
  CHECK(e.code == cli::pass);
  const auto ej = nlohmann::json::parse(e.out);
  CHECK(ej["files"][0]["triangular"][0]["strict"] == true);
  CHECK(ej["files"][0]["triangular"][0]["dim_a0"] == 2);
  CHECK(ej["files"][1]["triangular"][0]["strict"] == false);
}

TEST_CASE("sample then verify and decompose the stored sequence") {
  const auto s = run({"sample", "--seed", "3", "--levels", "3", corpus_file("tri_dual_regular")});
  REQUIRE(s.code == cli::pass);
  CHECK(s.out == run({"sample", "--seed", "3", "--levels", "3", corpus_file("tri_dual_regular")}).out);
  const auto path = temp_file("sampled.json", s.out);
  const auto v = run({"verify", path.string()});
  CHECK(v.code == cli::pass);
  CHECK(v.out.find("ok through level 3") != std::string::npos);
  const auto d = run({"decompose", path.string()});
  CHECK(d.code == cli::pass);
  CHECK(d.out.find("stored:tri_dual_regular.lie-higher.seed3") != std::string::npos);

  // Corrupt one entry of the stored level 1 and both commands must fail.
  auto ws = parse_workspace(s.out);
  auto& L = ws.sequences.begin()->second.sequence.levels[1];
  L(0, 0) += 1;
  const auto bad = temp_file("bad_sequence.json", dump_workspace(ws));
  CHECK(run({"verify", bad.string()}).code == cli::check_failed);
  CHECK(run({"decompose", bad.string()}).code == cli::check_failed);
  CHECK(run({"check", bad.string()}).code == cli::check_failed);

  CHECK(run({"verify", corpus_file("tri_q_q_q")}).code == cli::input_error);
  CHECK(run({"sample", corpus_file("tri_q_q_q"), corpus_file("tri_q_q_q")}).code == cli::input_error);
}

TEST_CASE("sample on a bare algebra by name") {
  const auto s = run({"sample", "--kind", "higher", "--name", "T2", corpus_file("tri_t2_q2_q")});
  REQUIRE(s.code == cli::pass);
  const auto ws = parse_workspace(s.out);
  REQUIRE(ws.sequences.size() == 1);
  CHECK(ws.sequences.begin()->second.on_algebra);
  CHECK(ws.sequences.begin()->first == "T2.higher.seed0");
}

TEST_CASE("probe needs --experimental") {
  const auto no = run({"probe", corpus_file("tri_q_q_q")});
  CHECK(no.code == cli::input_error);
  CHECK(no.err.find("--experimental") != std::string::npos);
  const auto yes = run({"probe", "--experimental", "--levels", "2", "--json", corpus_file("tri_q_q_q")});
  CHECK(yes.code == cli::pass);
  const auto j = nlohmann::json::parse(yes.out);
  CHECK(j["files"][0]["experimental"] == true);
  CHECK(j["files"][0]["results"][0].contains("lie_canonical_form"));
}
