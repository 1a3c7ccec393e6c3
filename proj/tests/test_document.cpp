#include "committee/document.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

using namespace committee;
using namespace committee::testing;
using nlohmann::json;

namespace {

json first_example() {
  return json::parse(R"({
    "candidates": ["a", "b", "c", "d"],
    "voters": [["a","c","b","d"], ["a","c","b","d"], ["d","c","b","a"], ["d","b","c","a"], ["b","c","a","d"]],
    "k": 2,
    "labels": {},
    "constraints": [],
    "rule": {"type": "weakly_separable", "gamma": "borda"},
    "order": "score"
  })");
}

json two_label_example() {
  return json::parse(R"({
    "candidates": ["a", "b", "c", "d"],
    "voters": [["a","c","d","b"]],
    "k": 2,
    "labels": {"first": ["a", "b"], "second": ["c", "d"]},
    "constraints": [{"type": "dominance", "over": "first", "under": "second"}],
    "rule": {"type": "weakly_separable", "gamma": [5, 4, 3, 1]},
    "order": "score"
  })");
}

DiagnosticCode code_of(const json& doc) {
  try {
    parse_instance(doc.dump());
  } catch (const ParseError& e) {
    return e.code;
  }
  ADD_FAILURE() << "document was accepted";
  return DiagnosticCode::malformed;
}

std::string message_of(const json& doc) {
  try {
    parse_instance(doc.dump());
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Parse, FirstExample) {
  const auto instance = parse_instance(first_example().dump());
  EXPECT_EQ(instance.profile.num_candidates(), 4);
  EXPECT_EQ(instance.profile.num_voters(), 5);
  EXPECT_EQ(instance.profile.committee_size(), 2);
  EXPECT_EQ(instance.order, OrderKind::score);
  EXPECT_EQ(*rule_scores(instance), rationals({7, 8, 9, 6}));
}

TEST(Parse, Diagnostics) {
  auto doc = first_example();
  doc["voters"][3] = {"d", "b", "c"};
  EXPECT_EQ(code_of(doc), DiagnosticCode::non_permutation);
  EXPECT_NE(message_of(doc).find("non-permutation ranking, voter index 3"), std::string::npos);

  doc = two_label_example();
  doc["constraints"].push_back({{"type", "interval"}, {"label", "first"}, {"min", 2}, {"max", 1}});
  EXPECT_EQ(code_of(doc), DiagnosticCode::invalid_bounds);
  EXPECT_NE(message_of(doc).find("invalid interval bounds"), std::string::npos);
  EXPECT_NE(message_of(doc).find("constraints[1]"), std::string::npos);

  doc = two_label_example();
  doc["labels"]["first"].push_back("z");
  EXPECT_EQ(code_of(doc), DiagnosticCode::unknown_candidate);

  doc = two_label_example();
  doc["constraints"][0]["under"] = "third";
  EXPECT_EQ(code_of(doc), DiagnosticCode::unknown_label);

  doc = first_example();
  doc["rule"] = {{"type", "stv"}, {"variant", "simple"}};
  EXPECT_EQ(code_of(doc), DiagnosticCode::illegal_combination);

  doc = first_example();
  doc.erase("k");
  EXPECT_EQ(code_of(doc), DiagnosticCode::malformed);

  doc = first_example();
  doc["rule"]["gamma"] = json::array({1, 0});
  EXPECT_EQ(code_of(doc), DiagnosticCode::malformed);

  doc = first_example();
  doc["k"] = 7;
  EXPECT_EQ(code_of(doc), DiagnosticCode::invalid_bounds);

  try {
    parse_instance("{\n  \"candidates\": [\n  oops\n}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code, DiagnosticCode::malformed);
    EXPECT_EQ(e.field, "line 3");
  }
}

TEST(Parse, StvWithLexicographicOrders) {
  auto doc = first_example();
  doc["rule"] = {{"type", "stv"}, {"variant", "droop_gregory"}};
  doc["order"] = "leximin";
  const auto instance = parse_instance(doc.dump());
  EXPECT_FALSE(rule_scores(instance).has_value());
  EXPECT_EQ(make_order(instance).kind(), CommitteeOrder::Kind::leximin);
}

TEST(Parse, FractionalScores) {
  auto doc = two_label_example();
  doc["rule"]["gamma"] = json::array({0.5, "1/3", 0, 2});
  const auto instance = parse_instance(doc.dump());
  EXPECT_EQ(*rule_scores(instance), (std::vector<Rational>{Rational(1, 2), Rational(2), Rational(1, 3), 0}));
  const auto again = parse_instance(serialize_instance(instance));
  EXPECT_EQ(serialize_instance(again), serialize_instance(instance));
  EXPECT_EQ(*rule_scores(again), *rule_scores(instance));
}

TEST(Serialize, RoundTripsGeneratedInstances) {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 200; ++trial) {
    auto instance = random_instance(rng, trial % 2 ? LabelMode::overlapping : LabelMode::disjoint,
                                    trial % 3 ? DominanceShape::tree_like : DominanceShape::arbitrary);
    if (trial % 5 == 0) {
      instance.rule = StvRule{StvVariant::droop_gregory};
      instance.order = OrderKind::leximax;
    }
    const auto text = serialize_instance(instance);
    const auto parsed = parse_instance(text);
    EXPECT_EQ(serialize_instance(parsed), text);
  }
  const auto clique = gen_clique_sntv(Graph(3, {{0, 1}, {1, 2}}), 2);
  const auto text = serialize_instance(clique);
  const auto parsed = parse_instance(text);
  EXPECT_EQ(serialize_instance(parsed), text);
  EXPECT_EQ(parsed.reference, clique.reference);
}

TEST(Solve, FirstExampleRoutesToRegion) {
  const auto instance = parse_instance(first_example().dump());
  const auto out = run_solve(instance, SolverChoice::automatic);
  ASSERT_EQ(out.exit_code, 0);
  EXPECT_EQ(out.result.solver, "region");
  const auto doc = json::parse(result_document(instance, out.result));
  EXPECT_EQ(doc["status"], "optimal");
  EXPECT_EQ(doc["committee"], json::array({"b", "c"}));
  EXPECT_EQ(doc["score"], 17);
  EXPECT_EQ(doc["solver"], "region");
}

TEST(Solve, ForcedSolvers) {
  const auto instance = parse_instance(two_label_example().dump());
  for (auto choice : {SolverChoice::dp, SolverChoice::region, SolverChoice::oracle}) {
    const auto out = run_solve(instance, choice);
    ASSERT_EQ(out.exit_code, 0);
    EXPECT_EQ(instance.profile.names_of(*out.result.committee), (std::vector<std::string>{"a", "c"}));
  }
}

TEST(Solve, PreconditionFailuresExitTwo) {
  auto doc = two_label_example();
  doc["labels"] = {{"x", {"a"}}, {"y", {"b"}}, {"z", {"c"}}};
  doc["constraints"] = {{{"type", "dominance"}, {"over", "x"}, {"under", "z"}},
                        {{"type", "dominance"}, {"over", "y"}, {"under", "z"}}};
  const auto instance = parse_instance(doc.dump());
  const auto out = run_solve(instance, SolverChoice::dp);
  EXPECT_EQ(out.exit_code, 2);
  EXPECT_NE(out.error.find("tree-like"), std::string::npos);

  auto stv = first_example();
  stv["rule"] = {{"type", "stv"}, {"variant", "simple"}};
  stv["order"] = "leximax";
  EXPECT_EQ(run_solve(parse_instance(stv.dump()), SolverChoice::region).exit_code, 2);

  std::vector<std::string> names;
  for (int i = 0; i < 30; ++i) names.push_back("c" + std::to_string(10 + i));
  json big = {{"candidates", names}, {"voters", json::array({names})}, {"k", 15}, {"labels", json::object()},
              {"constraints", json::array()}, {"rule", {{"type", "weakly_separable"}, {"gamma", "sntv"}}},
              {"order", "leximax"}};
  EXPECT_EQ(run_solve(parse_instance(big.dump()), SolverChoice::oracle).exit_code, 2);
}

TEST(Solve, InfeasibleExitsOne) {
  auto doc = two_label_example();
  doc["constraints"].push_back({{"type", "interval"}, {"label", "first"}, {"min", 3}, {"max", 3}});
  const auto instance = parse_instance(doc.dump());
  const auto out = run_solve(instance, SolverChoice::automatic);
  EXPECT_EQ(out.exit_code, 1);
  const auto result = json::parse(result_document(instance, out.result));
  EXPECT_EQ(result["status"], "infeasible");
  EXPECT_TRUE(result["committee"].is_null());
  EXPECT_TRUE(result["score"].is_null());
}

TEST(Solve, AutomaticAgreesWithOracle) {
  std::mt19937_64 rng(82);
  for (int trial = 0; trial < 300; ++trial) {
    auto instance = random_instance(rng, trial % 2 ? LabelMode::overlapping : LabelMode::disjoint,
                                    trial % 3 ? DominanceShape::tree_like : DominanceShape::arbitrary);
    if (trial % 4 == 1) instance.order = OrderKind::leximax;
    if (trial % 4 == 2) instance.order = OrderKind::leximin;
    const auto automatic = run_solve(instance, SolverChoice::automatic);
    const auto oracle = run_solve(instance, SolverChoice::oracle);
    ASSERT_NE(automatic.exit_code, 2) << automatic.error;
    ASSERT_EQ(automatic.exit_code, oracle.exit_code);
    if (automatic.exit_code == 0)
      EXPECT_TRUE(make_order(instance).compare(*automatic.result.committee, *oracle.result.committee) == 0);
  }
}

TEST(Check, Reports) {
  const auto instance = parse_instance(two_label_example().dump());
  const auto ok = run_check(instance, {"a", "c"});
  EXPECT_EQ(ok.exit_code, 0);
  EXPECT_TRUE(json::parse(ok.document)["violations"].empty());

  const auto size = run_check(instance, {"a"});
  EXPECT_EQ(size.exit_code, 1);
  EXPECT_EQ(json::parse(size.document)["violations"][0]["kind"], "size");

  const auto dominance = run_check(instance, {"c", "d"});
  EXPECT_EQ(dominance.exit_code, 1);
  const auto v = json::parse(dominance.document)["violations"][0];
  EXPECT_EQ(v["kind"], "dominance");
  EXPECT_EQ(v["over"], "first");
  EXPECT_EQ(v["under"], "second");
  EXPECT_EQ(v["over_count"], 0);
  EXPECT_EQ(v["under_count"], 2);

  EXPECT_EQ(run_check(instance, {"a", "z"}).exit_code, 2);
}
