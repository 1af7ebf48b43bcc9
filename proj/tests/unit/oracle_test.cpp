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

#include "doctest.h"
#include "rbatl/checker_bounded.hpp"
#include "rbatl/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/random_models.hpp"

using namespace rbatl;
using rbatl::testing::Rng;

namespace {

OracleAnswer ask(const Model& m, const std::string& text, const char* state, std::size_t depth) {
  return bounded_search(m, bind_to_model(parse_formula(text), m), *m.find_state(state), depth);
}

}  // namespace

TEST_CASE("oracle on the example fixture") {
  const Model m = rbatl::testing::loop_example();
  CHECK(ask(m, "<{a1}: 0,0> (true U p)", "s_prime", 1) == OracleAnswer::holds);
  CHECK(ask(m, "<{a1}: 3,1> (true U p)", "s_I", 4) == OracleAnswer::holds);
  CHECK(ask(m, "<{a1}: 3,1> (true U p)", "s_I", 2) == OracleAnswer::unknown);
  CHECK(ask(m, "<{a1}: 2,1> (true U p)", "s_I", 10) == OracleAnswer::unknown);
  CHECK(ask(m, "<{a1,a2}: 0,1> (true U p)", "s_I", 3) == OracleAnswer::unknown);
  CHECK(ask(m, "<{a1,a2}: 0,1> (true U p)", "s_I", 12) == OracleAnswer::holds);
}

TEST_CASE("oracle depth threshold for the round-trip witness") {
  // Three alpha/beta round trips, then alpha and gamma: eight moves, nine
  // levels counting the root.
  constexpr std::size_t kThreshold = 9;
  const Model m = rbatl::testing::loop_example();
  const std::string f = "<{a1,a2}: 0,1> (true U p)";
  CHECK(ask(m, f, "s_I", kThreshold - 1) == OracleAnswer::unknown);
  CHECK(ask(m, f, "s_I", kThreshold) == OracleAnswer::holds);
}

TEST_CASE("oracle box search") {
  const Model m = rbatl::testing::consuming_loop();
  CHECK(ask(m, "<{1}: 5> G ok", "u", 8) == OracleAnswer::unknown);
  CHECK(ask(m, "<{1}: inf> G ok", "u", 3) == OracleAnswer::holds);
  const Model f1 = rbatl::testing::loop_example();
  CHECK(ask(f1, "<{a1}: 0,0> G !p", "s_I", 2) == OracleAnswer::holds);
}

TEST_CASE("oracle is sound and monotone in depth") {
  Rng rng(71);
  for (int i = 0; i < 150; ++i) {
    const Model m = rbatl::testing::random_model(rng, {});
    rbatl::testing::FormulaShape shape;
    shape.unbounded = 0;
    Formula f = rbatl::testing::random_formula(rng, m, shape, 1);
    if (f.kind() == FormulaKind::Not) f = f.lhs();
    if (f.kind() == FormulaKind::Next) continue;
    f = bind_to_model(f, m);
    const CheckResult result = model_check(m, f);
    for (StateId s = 0; s < m.num_states(); ++s) {
      bool seen = false;
      for (std::size_t depth = 1; depth <= 6; ++depth) {
        const bool yes = bounded_search(m, f, s, depth) == OracleAnswer::holds;
        if (seen) CHECK(yes);
        seen = seen || yes;
      }
      if (seen) CHECK_MESSAGE(result.satisfying().contains(s), to_string(f));
    }
  }
}
