#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "trider/workspace.hpp"

using namespace trider;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string error_location(const std::string& text) {
  try {
    parse_workspace(text);
  } catch (const InputError& e) {
    return e.location();
  }
  return "<accepted>";
}

const char* q_algebra = R"("Q": {"dim": 1, "unit": ["1"], "structure_constants": [[["1"]]]})";

}  // namespace

TEST_CASE("corpus documents round-trip byte for byte") {
  for (const auto& entry : standard::seed_corpus()) {
    INFO(entry.name);
    const auto text = dump_workspace(corpus_workspace(entry));
    const auto ws = parse_workspace(text);
    CHECK(dump_workspace(ws) == text);
    CHECK(check_workspace(ws).ok());
    const auto T = resolve_triangular(ws, entry.name);
    CHECK(T.algebra() == TriangularAlgebra::build(entry.module).algebra());
  }
}

TEST_CASE("shipped corpus matches the generator") {
  const std::filesystem::path dir = TRIDER_SOURCE_DIR "/corpus";
  for (const auto& entry : standard::seed_corpus()) {
    INFO(entry.name);
    CHECK(slurp(dir / (entry.name + ".json")) == dump_workspace(corpus_workspace(entry)));
  }
}

TEST_CASE("sequences round-trip") {
  const auto entry = standard::seed_corpus()[4];
  auto ws = corpus_workspace(entry);
  const auto T = resolve_triangular(ws, entry.name);
  ws.sequences.emplace("s", SequenceEntry{entry.name, false, sample_sequence(T.algebra(), DerivationKind::lie_higher, 2, 3)});
  ws.sequences.emplace("t", SequenceEntry{"T2", true, sample_sequence(T.a(), DerivationKind::higher, 1, 0)});
  const auto text = dump_workspace(ws);
  const auto back = parse_workspace(text);
  REQUIRE(back.sequences.size() == 2);
  CHECK(back.sequences.at("s").sequence.levels == ws.sequences.at("s").sequence.levels);
  CHECK(back.sequences.at("t").on_algebra);
  CHECK(back.sequences.at("t").sequence.kind == DerivationKind::higher);
  CHECK(dump_workspace(back) == text);
  CHECK(check_workspace(back).ok());
}

TEST_CASE("input errors carry a location") {
  CHECK(error_location("{\"algebras\": {") == "line 1, column 15");
  CHECK(error_location("[1, 2]") == "");
  CHECK(error_location(R"({"extra": {}})") == "/extra");
  CHECK(error_location(R"({"algebras": {"Q": {"unit": ["1"]}}})") == "/algebras/Q");
  CHECK(error_location(R"({"algebras": {"Q": {"dim": 1, "unit": [0.5], "structure_constants": [[["1"]]]}}})") ==
        "/algebras/Q/unit/0");
  CHECK(error_location(R"({"algebras": {"Q": {"dim": 1, "unit": ["1/0"], "structure_constants": [[["1"]]]}}})") ==
        "/algebras/Q/unit/0");
  CHECK(error_location(R"({"algebras": {"Q": {"dim": 1, "unit": ["1"], "structure_constants": [[["1", "0"]]]}}})") ==
        "/algebras/Q/structure_constants/0/0");
  CHECK(error_location(std::string(R"({"algebras": {)") + q_algebra +
                       R"(}, "bimodules": {"M": {"left": "Q", "right": "R", "dim": 1, "left_action": [[["1"]]], "right_action": [[["1"]]]}}})") ==
        "/bimodules/M/right");
  CHECK(error_location(std::string(R"({"algebras": {)") + q_algebra +
                       R"(}, "bimodules": {"M": {"left": "Q", "right": "Q", "dim": 1, "left_action": [[["1"]]], "right_action": [[["1"]]]}},
                       "triangular": {"T": {"A": "Q", "M": "N", "B": "Q"}}})") == "/triangular/T/M");
  CHECK(error_location(std::string(R"({"algebras": {)") + q_algebra +
                       R"(}, "sequences": {"s": {"algebra": "Q", "kind": "lie", "levels": [[["1"]]]}}})") ==
        "/sequences/s/kind");
  CHECK(error_location(std::string(R"({"algebras": {)") + q_algebra +
                       R"(}, "sequences": {"s": {"algebra": "Q", "kind": "higher", "levels": [[["1", "0"]]]}}})") ==
        "/sequences/s/levels/0/0");
}

TEST_CASE("integer scalars are accepted, written back as strings") {
  const auto ws = parse_workspace(R"({"algebras": {"Q": {"dim": 1, "unit": [1], "structure_constants": [[[1]]]}}})");
  CHECK(ws.algebras.at("Q") == standard::rationals());
  CHECK(dump_workspace(ws).find("\"1\"") != std::string::npos);
}

TEST_CASE("check_workspace reports the corrupted quadruple") {
  const auto ws = load_workspace(TRIDER_SOURCE_DIR "/tests/data/t2_corrupted.json");
  const auto report = check_workspace(ws);
  REQUIRE_FALSE(report.ok());
  bool named = false;
  for (const auto& v : report.violations)
    if (v.law == "algebra T2: associativity" && v.witness == std::vector<std::size_t>{0, 0, 1, 1}) named = true;
  CHECK(named);
}

TEST_CASE("check_workspace reports refused triangular algebras and bad sequences") {
  auto ws = corpus_workspace(standard::seed_corpus()[0]);
  auto seq = sample_sequence(resolve_triangular(ws, "tri_q_q_q").algebra(), DerivationKind::lie_higher, 1, 0);
  seq.levels[1](0, 1) += 1;
  ws.sequences.emplace("bad", SequenceEntry{"tri_q_q_q", false, seq});
  const auto report = check_workspace(ws);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].law == "sequence bad: lie-higher identity");

  const auto partial = standard::from_operators(standard::split(2), standard::rationals(), 1,
                                                {Matrix::identity(1), Matrix(1, 1)}, {Matrix::identity(1)});
  Workspace w;
  w.algebras.emplace("QxQ", standard::split(2));
  w.algebras.emplace("Q", standard::rationals());
  w.bimodules.emplace("M", BimoduleEntry{"QxQ", "Q", partial});
  w.triangular.emplace("T", TriangularEntry{"QxQ", "M", "Q", ""});
  const auto r = check_workspace(w);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].law == "triangular T: construction refused");
  CHECK_THROWS_AS(resolve_triangular(w, "T"), TriangularError);
  CHECK_THROWS_AS(resolve_triangular(w, "nope"), InputError);
}

TEST_CASE("load_workspace reports missing files") {
  CHECK_THROWS_AS(load_workspace("/nonexistent/file.json"), InputError);
}
