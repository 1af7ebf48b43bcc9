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

// Hand-built models shared by the test suites.

#ifndef RBATL_TESTS_FIXTURES_HPP
#define RBATL_TESTS_FIXTURES_HPP

#include <string>

#include "rbatl/model.hpp"
#include "rbatl/petri.hpp"

namespace rbatl::testing {

// Two agents, two resources. a1 can turn one unit of r2 into two units of r1
// at s_I (alpha); a2 turns one r1 back into r2 at s (beta); a1 reaches p with
// gamma for five units of r1.
inline Model loop_example() {
  ModelBuilder b;
  b.agent("a1").agent("a2").resource("r1").resource("r2");
  b.state("s_I").state("s").state("s_prime");
  b.proposition("p", {"s_prime"});
  for (const char* s : {"s_I", "s", "s_prime"}) {
    b.action(s, "a1", "idle", {0, 0});
    b.action(s, "a2", "idle", {0, 0});
  }
  b.action("s_I", "a1", "alpha", {-2, 1});
  b.action("s", "a1", "gamma", {5, 0});
  b.action("s", "a2", "beta", {1, -1});
  b.transition("s_I", {"idle", "idle"}, "s_I");
  b.transition("s_I", {"alpha", "idle"}, "s");
  b.transition("s", {"idle", "idle"}, "s");
  b.transition("s", {"idle", "beta"}, "s_I");
  b.transition("s", {"gamma", "idle"}, "s_prime");
  b.transition("s", {"gamma", "beta"}, "s_prime");
  b.transition("s_prime", {"idle", "idle"}, "s_prime");
  return b.build();
}

// Non-total: at s agent a only produces one unit, agent b only consumes one,
// and together they move to the p-state t.
inline Model separation() {
  ModelBuilder b;
  b.agent("a").agent("b").resource("r").state("s").state("t").total(false);
  b.proposition("p", {"t"});
  b.action("s", "a", "alpha", {-1});
  b.action("s", "b", "beta", {1});
  b.action("t", "a", "idle", {0});
  b.action("t", "b", "idle", {0});
  b.transition("s", {"alpha", "beta"}, "t");
  b.transition("t", {"idle", "idle"}, "t");
  return b.build();
}

// Consumption-only chain s0 -> s1 -> s2, one unit per step, p at s2.
inline Model chain() {
  ModelBuilder b;
  b.agent("1").resource("r").state("s0").state("s1").state("s2");
  b.proposition("p", {"s2"});
  for (const char* s : {"s0", "s1", "s2"}) b.action(s, "1", "idle", {0});
  b.action("s0", "1", "step", {1});
  b.action("s1", "1", "step", {1});
  b.transition("s0", {"idle"}, "s0");
  b.transition("s0", {"step"}, "s1");
  b.transition("s1", {"idle"}, "s1");
  b.transition("s1", {"step"}, "s2");
  b.transition("s2", {"idle"}, "s2");
  return b.build();
}

// One productive self-loop (gain 2) at q; leaving for p costs 5.
inline Model single_loop() {
  ModelBuilder b;
  b.agent("1").resource("r").state("q").state("goal");
  b.proposition("p", {"goal"});
  b.action("q", "1", "idle", {0});
  b.action("q", "1", "produce", {-2});
  b.action("q", "1", "spend", {5});
  b.action("goal", "1", "idle", {0});
  b.transition("q", {"idle"}, "q");
  b.transition("q", {"produce"}, "q");
  b.transition("q", {"spend"}, "goal");
  b.transition("goal", {"idle"}, "goal");
  return b.build();
}

// Two states, both labelled ok. From u the only non-idle move costs one unit
// and leads to v; v returns to u for one unit as well. Without idle the
// agent would have to pay forever.
inline Model consuming_loop() {
  ModelBuilder b;
  b.agent("1").resource("r").state("u").state("v").state("bad");
  b.proposition("ok", {"u", "v"});
  b.action("u", "1", "idle", {0});
  b.action("u", "1", "go", {1});
  b.action("v", "1", "idle", {0});
  b.action("v", "1", "back", {1});
  b.action("bad", "1", "idle", {0});
  b.transition("u", {"idle"}, "bad");
  b.transition("u", {"go"}, "v");
  b.transition("v", {"idle"}, "bad");
  b.transition("v", {"back"}, "u");
  b.transition("bad", {"idle"}, "bad");
  return b.build();
}

// P = {p1}; t takes one token and puts back two.
inline PetriNet doubling_net() {
  PetriNet n;
  n.places = {"p1"};
  n.transitions.push_back({"t", {1}, {2}});
  n.initial = Marking{1};
  return n;
}

}  // namespace rbatl::testing

#endif  // RBATL_TESTS_FIXTURES_HPP
