#include <catch2/catch_amalgamated.hpp>

#include "prestab/io.hpp"
#include "prestab/lab.hpp"

using namespace prestab;
using namespace prestab::io;

namespace {

  Preorder P(std::size_t n,
             std::initializer_list<std::pair<std::size_t, std::size_t>> p = {}) {
    return Preorder::from_pairs(n, p, true);
  }

  template <class T>
  T parse_as(std::string_view text, ReadOptions opts = {}) {
    return std::get<T>(parse_document(text, opts));
  }

}  // namespace

TEST_CASE("emit format", "[io]") {
  CHECK(emit(P(3, {{0, 1}})) == "{\"kind\":\"preorder\",\"n\":3,\"pairs\":[[0,1]]}\n");
  auto const p = partial_from_values(P(3, {{0, 1}}), Preorder::discrete(1),
                                     std::vector<std::size_t>{
                                         PartialMorphism::undefined,
                                         PartialMorphism::undefined, 0});
  CHECK(emit(p).find("\"domain\":[2],\"map\":[0]") != std::string::npos);
  CHECK(kind_name(Document{p}) == "partial_morphism");
}

TEST_CASE("parsing", "[io]") {
  auto const a = parse_as<Preorder>(R"({"n": 3, "pairs": [[0,1],[1,2],[0,2]]})");
  CHECK(a == Preorder::chain(3));
  CHECK_THROWS_AS(parse_document(R"({"n": 3, "pairs": [[0,1],[1,2]]})"),
                  validation_error);
  CHECK(parse_as<Preorder>(R"({"n": 3, "pairs": [[0,1],[1,2]]})", {true})
        == Preorder::chain(3));

  auto const labeled = parse_as<Preorder>(R"({"n": 2, "pairs": [], "labels": ["x","y"]})");
  CHECK(labeled.carrier().label(1) == "y");
  CHECK_THROWS(parse_document(R"({"n": 2, "labels": ["x","x"]})"));

  auto const f = parse_as<Morphism>(
      R"({"dom": {"n": 2, "pairs": [[0,1]]}, "cod": {"n": 3, "pairs": [[0,1],[1,2],[0,2]]}, "map": [1,2]})");
  CHECK(f.map() == FinMap(2, 3, {1, 2}));
  CHECK_THROWS_AS(parse_document(
                      R"({"dom": {"n": 2, "pairs": [[0,1]]}, "cod": {"n": 2}, "map": [1,0]})"),
                  validation_error);

  // domain listed out of order; map aligned with it
  auto const p = parse_as<PartialMorphism>(
      R"({"dom": {"n": 3, "pairs": [[0,1]]}, "cod": {"n": 2}, "domain": [2], "map": [1]})");
  CHECK(p.values() == std::vector<std::size_t>{PartialMorphism::undefined,
                                               PartialMorphism::undefined, 1});
  CHECK_THROWS_AS(parse_document(
                      R"({"dom": {"n": 3, "pairs": [[0,1]]}, "cod": {"n": 2}, "domain": [1], "map": [1]})"),
                  validation_error);
}

TEST_CASE("parse errors carry a location", "[io]") {
  try {
    parse_document("{\"n\": 2,\n  \"pairs\": [[0,1]\n", {}, "in.json");
    FAIL("expected a parse error");
  } catch (parse_error const& e) {
    CHECK(std::string(e.what()).rfind("in.json:", 0) == 0);
    CHECK(std::string(e.what()).find(":3:") != std::string::npos);
  }
  try {
    parse_document(R"({"n": 2, "pairs": [[0, "x"]]})", {}, "in.json");
    FAIL("expected a parse error");
  } catch (parse_error const& e) {
    CHECK(std::string(e.what()).find("/pairs/0/1") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_document(R"({"n": 2, "colour": 1})"), parse_error);
  CHECK_THROWS_AS(parse_document(R"({"n": -1})"), parse_error);
  CHECK_THROWS_AS(parse_document(R"({"n": 2, "pairs": [[0, 2]]})"), parse_error);
}

TEST_CASE("round trip over enumerated instances", "[io][property]") {
  InstanceFamily fam(2);
  auto const     objs = fam.preorders();
  for (std::size_t i = 0; i < objs.size(); ++i) {
    REQUIRE(parse_as<Preorder>(emit(objs[i])) == objs[i]);
    for (std::size_t j = 0; j < objs.size(); ++j) {
      for (auto const& f : fam.morphisms(i, j)) {
        REQUIRE(parse_as<Morphism>(emit(f)) == f);
      }
      for (auto const& p : enumerate_partial(objs[i], objs[j])) {
        REQUIRE(parse_as<PartialMorphism>(emit(p)) == p);
      }
    }
  }
  for (auto const& a : enumerate_preorders(3)) {
    REQUIRE(parse_as<Preorder>(emit(a)) == a);
  }
}

TEST_CASE("DOT output", "[io]") {
  CHECK(to_dot(Preorder::discrete(2)) ==
        "digraph preorder {\n"
        "  subgraph cluster_0 {\n"
        "    label=\"component 0\";\n"
        "    n0 [label=\"0\"];\n"
        "  }\n"
        "  subgraph cluster_1 {\n"
        "    label=\"component 1\";\n"
        "    n1 [label=\"1\"];\n"
        "  }\n"
        "}\n");
  CHECK(to_dot(P(2, {{0, 1}})) ==
        "digraph preorder {\n"
        "  subgraph cluster_0 {\n"
        "    label=\"component 0\";\n"
        "    n0 [label=\"0\"];\n"
        "    n1 [label=\"1\"];\n"
        "  }\n"
        "  n0 -> n1;\n"
        "}\n");
  CHECK(to_dot(P(3, {{0, 1}})) ==
        "digraph preorder {\n"
        "  subgraph cluster_0 {\n"
        "    label=\"component 0\";\n"
        "    n0 [label=\"0\"];\n"
        "    n1 [label=\"1\"];\n"
        "  }\n"
        "  subgraph cluster_1 {\n"
        "    label=\"component 1\";\n"
        "    n2 [label=\"2\"];\n"
        "  }\n"
        "  n0 -> n1;\n"
        "}\n");
  CHECK(to_dot(P(3, {{0, 1}})) == to_dot(P(3, {{0, 1}})));
}

TEST_CASE("report serialization", "[io]") {
  auto const r    = run_suite("enumeration", 3);
  auto const json = report_json(r);
  CHECK(json.find("\"kind\": \"suite_report\"") != std::string::npos);
  CHECK(json.find("elapsed_ms") == std::string::npos);
  CHECK(report_json(r, true).find("elapsed_ms") != std::string::npos);
  CHECK(report_text(r).rfind("enumeration (max size 3): PASS", 0) == 0);
}
