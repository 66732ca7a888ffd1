#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fincat/gallery.hpp>
#include <fincat/instance_io.hpp>

using namespace fincat;

namespace {

Json parse(const char* text) { return Json::parse(text); }

}  // namespace

TEST_CASE("sets load from labels or factors") {
  FinSet s = set_from_json(parse(R"json({"labels": ["a", "b"]})json"));
  CHECK(s.size() == 2);
  CHECK_FALSE(s.is_factored());

  FinSet p = set_from_json(parse(R"json({"factors": [["0", "1"], ["x", "y", "z"]]})json"));
  CHECK(p.size() == 6);
  CHECK(p.factor_shape == std::vector<int>{2, 3});
  CHECK(p.labels[0] == "(0,x)");

  FinSet q = set_from_json(parse(R"json({"labels": ["a", "b", "c", "d"], "factor_shape": [2, 2]})json"));
  CHECK(q.factor_count() == 2);

  CHECK_THROWS_AS(set_from_json(parse(R"json({"labels": ["a", "a"]})json")), SchemaError);
  CHECK_THROWS_AS(set_from_json(parse(R"json({"factors": []})json")), SchemaError);
  CHECK_THROWS_AS(set_from_json(parse(R"json({})json")), SchemaError);
}

TEST_CASE("morphisms load by label") {
  FinSet a({"a", "b"}), b({"x", "y"});
  FinFn f = fn_from_json(parse(R"json({"map": {"a": "x", "b": "x"}})json"), a, b);
  CHECK(f.map == std::vector<int>{0, 0});
  FinFn g = fn_from_json(parse(R"json({"map": ["y", "x"]})json"), a, b);
  CHECK(g.map == std::vector<int>{1, 0});
  CHECK_THROWS_AS(fn_from_json(parse(R"json({"map": {"a": "x"}})json"), a, b), SchemaError);
  CHECK_THROWS_AS(fn_from_json(parse(R"json({"map": {"a": "x", "b": "q"}})json"), a, b), SchemaError);

  FinRel r = rel_from_json(parse(R"json({"pairs": [["a", "x"], ["a", "y"]]})json"), a, b);
  CHECK(r.at(0, 0));
  CHECK(r.at(0, 1));
  CHECK_FALSE(r.at(1, 0));

  StochMap k = kernel_from_json(parse(R"json({"rows": [["1/2", "1/2"], [1, 0]]})json"), a, b, Rat(0));
  CHECK(k.at(0, 0) == Rat(1, 2));
  CHECK(k.at(1, 0) == Rat(1));
  CHECK_THROWS_AS(kernel_from_json(parse(R"json({"rows": [[0.5, 0.5], [1, 0]]})json"), a, b, Rat(0)),
                  SchemaError);
  CHECK_THROWS_AS(kernel_from_json(parse(R"json({"rows": [["1/2", "1/3"], [1, 0]]})json"), a, b, Rat(0)),
                  SchemaError);
}

TEST_CASE("decimal entries respect the mode") {
  FinSet a({"a"}), b({"x", "y"});
  // Exact mode: decimals are squeezed under the denominator bound, and the
  // rows must still sum to one exactly.
  StochMap k = kernel_from_json(parse(R"json({"rows": [["0.25", "0.75"]]})json"), a, b, Rat(0));
  CHECK(k.at(0, 0) == Rat(1, 4));
  // Long decimals snap to the nearest small-denominator rational: thirds
  // written out to nine places come back as honest thirds.
  StochMap snapped = kernel_from_json(
      parse(R"json({"rows": [["0.333333333", "0.666666667"]]})json"), a, b, Rat(0));
  CHECK(snapped.at(0, 0) == Rat(1, 3));
  CHECK(snapped.at(0, 1) == Rat(2, 3));
  // Tolerance mode: entries stay as written and the sum check is slack.
  StochMap k2 = kernel_from_json(parse(R"json({"rows": [["0.333333333", "0.666666666"]]})json"), a, b,
                                 Rat(1, 100000000));
  CHECK(k2.at(0, 0) == Rat(333333333, 1000000000));
  // A row that genuinely does not sum to one is rejected in exact mode.
  CHECK_THROWS_AS(kernel_from_json(parse(R"json({"rows": [["0.3", "0.6"]]})json"), a, b, Rat(0)),
                  SchemaError);
  // Explicit rationals are never approximated, whatever the denominator.
  StochMap wide = kernel_from_json(
      parse(R"json({"rows": [["1/3000000", "2999999/3000000"]]})json"), a, b, Rat(0));
  CHECK(wide.at(0, 0) == Rat(1, 3000000));
}

TEST_CASE("instance files load and evaluate") {
  Json j = parse(R"json({
    "version": 1,
    "category": "set",
    "sets": {
      "Y": {"factors": [["0", "1"], ["0", "1"]]},
      "X": {"labels": ["(0,0)", "(0,1)", "(1,0)", "(1,1)"]},
      "Z": {"factors": [["0", "1"], ["0", "1"]]}
    },
    "g": {"map": ["(0,0)", "(0,1)", "(1,0)", "(1,1)"]},
    "f": {"map": ["(0,0)", "(0,1)", "(1,0)", "(1,1)"]},
    "expect": {"D1.a": "holds"}
  })json");
  Instance inst = instance_from_json(j, Rat(0));
  Report rep = evaluate(inst);
  CHECK(rep.get("D1.a") == Verdict::holds);
  auto expect = expectations_from_json(j);
  REQUIRE(expect.size() == 1);
  CHECK(expect[0].first == "D1.a");
  CHECK(expect[0].second == Verdict::holds);

  CHECK_THROWS_AS(instance_from_json(parse(R"json({"category": "frob", "sets": {}})json"), Rat(0)),
                  SchemaError);
}

TEST_CASE("count and action files load and evaluate") {
  Json cj = parse(R"json({
    "states": ["t0", "t1"],
    "step": {"t0": "t1", "t1": "t0"},
    "counters": {"c": {"targets": ["k"], "counts": [[2], [2]]}}
  })json");
  Report crep = evaluate_count(count_from_json(cj));
  CHECK(crep.get("invariant[c]") == Verdict::holds);

  Json aj = parse(R"json({
    "monoid": {"elements": ["e", "g"], "unit": "e", "table": [["e", "g"], ["g", "e"]]},
    "models": {
      "X": {"carrier": ["0", "1"], "action": {"e": ["0", "1"], "g": ["1", "0"]}},
      "Z": {"carrier": ["0", "1"], "action": {"e": ["0", "1"], "g": ["1", "0"]}}
    },
    "map": {"map": ["0", "1"]}
  })json");
  Report arep = evaluate_action(action_from_json(aj));
  CHECK(arep.get("monoid") == Verdict::holds);
  CHECK(arep.get("equivariant") == Verdict::holds);
  CHECK(arep.get("split_mono") == Verdict::holds);
  CHECK(arep.get("faithful[X]") == Verdict::holds);

  CHECK_THROWS_AS(count_from_json(parse(R"json({"states": ["a"], "step": ["a"], "counters": {}})json")),
                  SchemaError);
}

TEST_CASE("reports round-trip through the wire format") {
  for (const auto& entry : gallery()) {
    Report rep = entry.instance ? evaluate(*entry.instance) : evaluate_scene(*entry.scene);
    Json j = report_to_json(rep);
    Report back = report_from_json(j);
    CHECK(back == rep);
    // Serialization itself is stable.
    CHECK(report_to_json(back).dump(2) == j.dump(2));
  }
}

TEST_CASE("suite reports serialize deterministically") {
  SuiteConfig cfg;
  cfg.trials = 10;
  SuiteReport a = theorem_suite(cfg);
  SuiteReport b = theorem_suite(cfg);
  CHECK(suite_report_to_json(cfg, a).dump(2) == suite_report_to_json(cfg, b).dump(2));
}

TEST_CASE("magma tables load") {
  Json j = parse(R"json({
    "elements": ["e", "a"],
    "unit": "e",
    "table": [["e", "a"], ["a", "e"]]
  })json");
  MagmaTable t = magma_from_json(j);
  CHECK(t.size() == 2);
  CHECK(t.op(1, 1) == 0);
  CHECK_THROWS_AS(magma_from_json(parse(R"json({"elements": ["e"], "unit": "x", "table": [["e"]]})json")),
                  SchemaError);
}
