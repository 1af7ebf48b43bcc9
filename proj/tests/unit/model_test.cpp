/*
 * Copyright 2026 The rbatl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <fstream>
#include <sstream>

#include "doctest.h"
#include "rbatl/errors.hpp"
#include "rbatl/model.hpp"
#include "rbatl/model_json.hpp"
#include "support/fixtures.hpp"
#include "support/random_models.hpp"

using namespace rbatl;
using rbatl::testing::Rng;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

JointAction joint(const Model& m, std::vector<std::string> agents, std::vector<std::string> acts) {
  JointAction j;
  j.coalition = m.coalition(agents);
  for (const auto& a : acts) j.choices.push_back(*m.find_action(a));
  return j;
}

}  // namespace

TEST_CASE("joint costs") {
  const Model m = rbatl::testing::loop_example();
  const StateId s_I = *m.find_state("s_I");
  const StateId s = *m.find_state("s");
  CHECK(cost_joint(m, s_I, joint(m, {"a1"}, {"alpha"})) == CostVec{-2, 1});
  CHECK(cost_joint(m, s, joint(m, {"a1", "a2"}, {"gamma", "beta"})) == CostVec{6, -1});
  CHECK(cost_joint(m, s, joint(m, {"a1", "a2"}, {"idle", "idle"})) == CostVec{0, 0});
  try {
    cost_joint(m, s_I, joint(m, {"a2"}, {"beta"}));
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    const std::string what = e.what();
    CHECK(what.find("a2") != std::string::npos);
    CHECK(what.find("s_I") != std::string::npos);
  }
}

TEST_CASE("outcomes") {
  const Model m = rbatl::testing::loop_example();
  const StateId s_I = *m.find_state("s_I");
  const StateId s = *m.find_state("s");
  const StateId sp = *m.find_state("s_prime");
  CHECK(outcomes(m, s_I, joint(m, {"a1"}, {"alpha"})) == std::vector<StateId>{s});
  CHECK(outcomes(m, s, joint(m, {"a1"}, {"gamma"})) == std::vector<StateId>{sp});
  CHECK(outcomes(m, s, joint(m, {"a1"}, {"idle"})) == std::vector<StateId>{s_I, s});
  CHECK(outcomes(m, s, joint(m, {"a1", "a2"}, {"idle", "beta"})) == std::vector<StateId>{s_I});

  // An opponent with an empty menu leaves nothing to complete the move.
  ModelBuilder b;
  b.agent("a").agent("b").resource("r").state("s").total(false);
  b.action("s", "a", "go", {0});
  const Model nt = b.build();
  CHECK(outcomes(nt, 0, joint(nt, {"a"}, {"go"})).empty());
}

TEST_CASE("coalition actions") {
  const Model m = rbatl::testing::loop_example();
  const StateId s = *m.find_state("s");
  const auto none = coalition_actions(m, s, {});
  REQUIRE(none.size() == 1);
  CHECK(none[0].choices.empty());
  const auto both = coalition_actions(m, s, m.grand_coalition());
  REQUIRE(both.size() == 4);
  // First member most significant, menus in declared order.
  CHECK(both[0] == joint(m, {"a1", "a2"}, {"idle", "idle"}));
  CHECK(both[1] == joint(m, {"a1", "a2"}, {"idle", "beta"}));
  CHECK(both[2] == joint(m, {"a1", "a2"}, {"gamma", "idle"}));
  CHECK(both[3] == joint(m, {"a1", "a2"}, {"gamma", "beta"}));
  CHECK(coalition_actions(m, s, m.grand_coalition()) == both);

  const Model sep = rbatl::testing::separation();
  ModelBuilder b;
  b.agent("a").agent("b").resource("r").state("s").total(false);
  b.action("s", "a", "go", {0});
  const Model nt = b.build();
  CHECK(coalition_actions(nt, 0, nt.grand_coalition()).empty());
  CHECK(coalition_actions(sep, 0, sep.grand_coalition()).size() == 1);
}

TEST_CASE("validation") {
  CHECK(validate_model(rbatl::testing::loop_example()).empty());
  CHECK(validate_model(rbatl::testing::separation()).empty());

  SUBCASE("missing idle") {
    ModelBuilder b;
    b.agent("a").resource("r").state("s");
    b.action("s", "a", "go", {0});
    b.transition("s", {"go"}, "s");
    const auto problems = validate_model(b.build());
    REQUIRE(problems.size() == 1);
    CHECK(problems[0].find("idle") != std::string::npos);
  }
  SUBCASE("transition on an unavailable action") {
    ModelBuilder b;
    b.agent("a").resource("r").state("s").state("t");
    b.action("s", "a", "idle", {0});
    b.action("s", "a", "go", {0});
    b.action("t", "a", "idle", {0});
    b.transition("s", {"idle"}, "s");
    b.transition("s", {"go"}, "t");
    b.transition("t", {"idle"}, "t");
    b.transition("t", {"go"}, "s");
    const auto problems = validate_model(b.build());
    REQUIRE(problems.size() == 1);
    CHECK(problems[0].find("'go'") != std::string::npos);
    CHECK(problems[0].find("'t'") != std::string::npos);
  }
  SUBCASE("total model with a gap in delta") {
    ModelBuilder b;
    b.agent("a").resource("r").state("s");
    b.action("s", "a", "idle", {0});
    b.action("s", "a", "go", {1});
    b.transition("s", {"idle"}, "s");
    CHECK(validate_model(b.build()).size() == 1);
  }
  SUBCASE("builder rejects unknown names and bad arity at build time") {
    ModelBuilder arity;
    arity.agent("a").resource("r").state("s").action("s", "a", "idle", {0, 0});
    CHECK_THROWS_AS(arity.build(), ValidationError);
    ModelBuilder unknown;
    unknown.agent("a").resource("r").state("s").action("nowhere", "a", "idle", {0});
    CHECK_THROWS_AS(unknown.build(), ValidationError);
  }
}

TEST_CASE("degenerate models are legal") {
  ModelBuilder b;
  b.agent("a").state("only");
  b.action("only", "a", "idle", {});
  b.transition("only", {"idle"}, "only");
  const Model m = b.build();
  CHECK(validate_model(m).empty());
  CHECK(m.num_resources() == 0);
  CHECK(consumption_only(m));
}

TEST_CASE("total models always have outcomes") {
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const Model m = rbatl::testing::random_model(rng, {});
    REQUIRE(validate_model(m).empty());
    for (StateId s = 0; s < m.num_states(); ++s) {
      const auto coalition = m.coalition(rbatl::testing::random_coalition(rng, m));
      for (const auto& sigma : coalition_actions(m, s, coalition)) {
        CHECK_FALSE(outcomes(m, s, sigma).empty());
      }
    }
  }
}

TEST_CASE("consumption-only detection") {
  CHECK_FALSE(consumption_only(rbatl::testing::loop_example()));
  CHECK(consumption_only(rbatl::testing::chain()));
}

TEST_CASE("model json round trip is byte identical") {
  Rng rng(22);
  for (int i = 0; i < 50; ++i) {
    rbatl::testing::ModelShape shape;
    shape.total = i % 3 != 0;
    const Model m = rbatl::testing::random_model(rng, shape);
    const std::string text = model_to_json(m);
    CHECK(model_to_json(model_from_json(text)) == text);
  }
}

TEST_CASE("fixture files match the builders") {
  const std::string dir = RBATL_FIXTURE_DIR;
  CHECK(model_to_json(model_from_json(slurp(dir + "/loop_example.json"))) ==
        model_to_json(rbatl::testing::loop_example()));
  CHECK(model_to_json(model_from_json(slurp(dir + "/separation.json"))) ==
        model_to_json(rbatl::testing::separation()));
}

TEST_CASE("model json rejects broken input") {
  CHECK_THROWS_AS(model_from_json("{"), ValidationError);
  CHECK_THROWS_AS(model_from_json("[]"), ValidationError);
  CHECK_THROWS_AS(model_from_json(R"({"format_version": 1, "agents": ["a"]})"), ValidationError);
  // Parses but violates the idle invariant; accepted only without validation.
  ModelBuilder b;
  b.agent("a").resource("r").state("s");
  b.action("s", "a", "go", {0});
  b.transition("s", {"go"}, "s");
  const std::string text = model_to_json(b.build());
  CHECK_THROWS_AS(model_from_json(text), ValidationError);
  CHECK_NOTHROW(model_from_json(text, false));
}
