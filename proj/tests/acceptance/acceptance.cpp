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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "rbatl/checker_atl.hpp"
#include "rbatl/checker_bounded.hpp"
#include "rbatl/checker_symbolic.hpp"
#include "rbatl/errors.hpp"
#include "rbatl/model_json.hpp"
#include "rbatl/petri.hpp"
#include "rbatl/witness.hpp"
#include "support/random_models.hpp"

using namespace rbatl;
using rbatl::testing::Rng;

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kQueryLimitSeconds = 60.0;

struct Verdict {
  bool pass = true;
  std::string detail;
  std::size_t cases = 0;

  void fail(const std::string& what) {
    if (pass) detail = what;
    pass = false;
  }
};

// Slowest single query over the whole run, for the termination guard.
struct Timing {
  double worst = 0;
  std::string worst_query;
  std::size_t queries = 0;
} timing;

template <typename F>
auto timed(const std::string& label, F&& f) {
  const auto start = Clock::now();
  auto out = f();
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  ++timing.queries;
  if (secs > timing.worst) {
    timing.worst = secs;
    timing.worst_query = label;
  }
  return out;
}

CheckResult check(const Model& m, const Formula& f, Semantics mode = Semantics::rbatl) {
  CheckOptions opts;
  opts.semantics = mode;
  return timed(to_string(f), [&] { return model_check(m, f, opts); });
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Model fixture(const std::string& name) {
  return model_from_json(slurp(std::string(RBATL_FIXTURE_DIR) + "/" + name));
}

rbatl::testing::ModelShape corpus_shape(bool consumption_only, bool total) {
  rbatl::testing::ModelShape shape = consumption_only ? rbatl::testing::consumption_only_shape()
                                                      : rbatl::testing::ModelShape{};
  shape.max_states = 6;
  shape.max_resources = 2;
  shape.total = total;
  return shape;
}

rbatl::testing::FormulaShape corpus_formulas() {
  rbatl::testing::FormulaShape shape;
  shape.max_modal_depth = 2;
  shape.max_bound = 3;
  return shape;
}

bool holds(const Model& m, const std::string& text, const char* state,
           Semantics mode = Semantics::rbatl) {
  return check(m, bind_to_model(parse_formula(text), m), mode)
      .satisfying()
      .contains(*m.find_state(state));
}

// 1. Resource bounds of the two-resource example, including every
// pointwise-smaller bound.
Verdict example_bounds() {
  Verdict v;
  const Model m = fixture("loop_example.json");
  const auto expect = [&](const std::string& coalition, std::uint64_t r1, std::uint64_t r2,
                          bool want) {
    const std::string text = "<{" + coalition + "}: " + std::to_string(r1) + "," +
                             std::to_string(r2) + "> (true U p)";
    ++v.cases;
    if (holds(m, text, "s_I") != want) v.fail(text + " should be " + (want ? "true" : "false"));
  };
  expect("a1", 3, 1, true);
  expect("a1,a2", 0, 1, true);
  for (std::uint64_t r1 = 0; r1 <= 3; ++r1) {
    for (std::uint64_t r2 = 0; r2 <= 1; ++r2) {
      if (r1 != 3 || r2 != 1) expect("a1", r1, r2, false);
    }
  }
  expect("a1,a2", 0, 0, false);
  v.detail = v.pass ? std::to_string(v.cases) + " bounds" : v.detail;
  return v;
}

// 2. Coverability oracle against the checker on reduced nets.
Verdict petri_differential() {
  Verdict v;
  Rng rng(1001);
  std::size_t positives = 0;
  for (int i = 0; i < 250; ++i) {
    const PetriNet net = rbatl::testing::random_net(rng);
    const Marking target = rbatl::testing::random_target(rng, net);
    const Reduction red = reduce(net, target);
    const bool checker =
        check(red.model, red.formula).satisfying().contains(*red.model.find_state("s0"));
    const bool oracle = coverable(net, target);
    positives += oracle;
    ++v.cases;
    if (checker != oracle) v.fail("net " + std::to_string(i) + ": checker " + std::to_string(checker) + ", Karp-Miller " + std::to_string(oracle));
  }
  if (v.pass) v.detail = std::to_string(v.cases) + " nets, " + std::to_string(positives) + " coverable";
  return v;
}

// 3. Symbolic and tree engines on consumption-only models.
Verdict engine_equivalence() {
  Verdict v;
  Rng rng(1002);
  std::size_t labels = 0;
  for (int i = 0; i < 150; ++i) {
    const bool total = i % 4 != 0;
    const Semantics mode = total ? Semantics::rbatl : Semantics::nt;
    const Model m = rbatl::testing::random_model(rng, corpus_shape(true, total));
    const Formula f = bind_to_model(rbatl::testing::random_formula(rng, m, corpus_formulas()), m);
    const CheckResult tree = check(m, f, mode);
    const Labelling symbolic = timed(to_string(f), [&] { return rb_atl_label(m, f, mode); });
    ++v.cases;
    for (const auto& [g, set] : tree.labels) {
      ++labels;
      const auto it = symbolic.find(g);
      if (it == symbolic.end() || it->second != set) {
        v.fail("model " + std::to_string(i) + ": engines differ on " + to_string(g));
      }
    }
  }
  if (v.pass) v.detail = std::to_string(v.cases) + " models, " + std::to_string(labels) + " labels";
  return v;
}

// 4. With all-infinity bounds the tree search, the dispatcher and the
// classical fixpoints coincide.
Verdict infinite_agreement() {
  Verdict v;
  Rng rng(1003);
  std::size_t compared = 0;
  for (int i = 0; i < 150; ++i) {
    const Model m = rbatl::testing::random_model(rng, corpus_shape(false, true));
    const Formula f = bind_to_model(rbatl::testing::random_formula(rng, m, corpus_formulas()), m);
    ++v.cases;
    for (const Formula& g : sub_ordered(f)) {
      if (!g.is_modality()) continue;
      const Formula inf = g.with_bound(infinite_bound(m.num_resources()));
      const CheckResult dispatched = check(m, inf);
      const StateSet classical = atl_label(m, inf, dispatched.labels);
      StateSet searched(m.num_states());
      if (inf.kind() != FormulaKind::Next) {
        SearchOptions opts;
        opts.atl_prefilter = false;
        for (StateId s = 0; s < m.num_states(); ++s) {
          const auto out = timed(to_string(inf), [&] {
            return inf.kind() == FormulaKind::Until ? until_strategy(m, s, inf, dispatched.labels, opts)
                                                     : box_strategy(m, s, inf, dispatched.labels, opts);
          });
          if (out.holds) searched.insert(s);
        }
      } else {
        searched = classical;
      }
      ++compared;
      if (dispatched.satisfying() != classical || searched != classical) {
        v.fail("model " + std::to_string(i) + ": disagreement on " + to_string(inf));
      }
    }
  }
  if (v.pass) v.detail = std::to_string(v.cases) + " models, " + std::to_string(compared) + " modalities";
  return v;
}

// 5. Raising a bound never removes states.
Verdict monotonicity() {
  Verdict v;
  Rng rng(1004);
  for (int i = 0; i < 200; ++i) {
    const Model m = rbatl::testing::random_model(rng, corpus_shape(false, i % 5 != 0));
    const Semantics mode = m.total() ? static_cast<Semantics>(i % 3)
                                     : (i % 2 ? Semantics::nt : Semantics::ral_finite);
    rbatl::testing::FormulaShape shape = corpus_formulas();
    shape.unbounded = 0;
    Formula f = rbatl::testing::random_formula(rng, m, shape);
    if (f.kind() == FormulaKind::Not) f = f.lhs();
    f = bind_to_model(f, m);
    BoundVec b = *f.bound();
    BoundVec bigger = b;
    for (auto& x : bigger) {
      if (x.is_finite()) x = rng.chance(0.2) ? Amount::infinity() : Amount(x.value() + static_cast<std::uint64_t>(rng.between(0, 2)));
    }
    const StateSet low = check(m, f, mode).satisfying();
    const StateSet high = check(m, f.with_bound(bigger), mode).satisfying();
    ++v.cases;
    if (!low.is_subset_of(high)) {
      v.fail("model " + std::to_string(i) + ": " + to_string(f) + " loses states at " + to_string(bigger));
    }
  }
  if (v.pass) v.detail = std::to_string(v.cases) + " (model, formula, b <= b') triples";
  return v;
}

// 6. Certificates of true answers validate; corrupted ones do not.
Verdict witness_integrity() {
  Verdict v;
  Rng rng(1005);
  std::vector<std::pair<Model, std::pair<Witness, StateId>>> valid;
  std::size_t witnesses = 0;
  const auto collect = [&](const Model& m, const Formula& f, Semantics mode, std::size_t keep) {
    CheckOptions opts;
    opts.semantics = mode;
    Checker checker(m, opts);
    const CheckResult result = timed(to_string(f), [&] { return checker.check(f); });
    for (StateId s : result.satisfying().members()) {
      const auto w = checker.witness(result, s);
      ++witnesses;
      if (!w) {
        v.fail("no certificate for " + to_string(f) + " at " + m.states()[s]);
        continue;
      }
      const Witness concrete = timed(to_string(f), [&] { return concretize(m, *w); });
      const auto problems = validate_witness(m, concrete, s);
      if (!problems.empty()) {
        v.fail(to_string(f) + " at " + m.states()[s] + ": " + problems.front());
      } else if (valid.size() < keep) {
        valid.push_back({m, {concrete, s}});
      }
    }
  };
  const Model example = fixture("loop_example.json");
  for (const char* text : {"<{a1}: 3,1> (true U p)", "<{a1,a2}: 0,1> (true U p)", "<{a1}: 0,0> G !p"}) {
    collect(example, bind_to_model(parse_formula(text), example), Semantics::rbatl, 1000);
  }
  for (int i = 0; i < 200; ++i) {
    const Model m = rbatl::testing::random_model(rng, corpus_shape(false, i % 4 != 0));
    const Semantics mode = m.total() ? static_cast<Semantics>(i % 3) : Semantics::nt;
    rbatl::testing::FormulaShape shape = corpus_formulas();
    shape.unbounded = 0;
    Formula f = rbatl::testing::random_formula(rng, m, shape);
    if (f.kind() == FormulaKind::Not) f = f.lhs();
    if (f.kind() == FormulaKind::Next) continue;
    collect(m, bind_to_model(f, m), mode, 40);
  }

  std::size_t mutants = 0;
  for (const auto& [m, entry] : valid) {
    const auto& [w, s] = entry;
    for (std::size_t k = 0; k < 2 * mutation_kinds(); ++k) {
      const auto bad = mutate_witness(m, w, k);
      if (!bad) continue;
      ++mutants;
      if (validate_witness(m, *bad, s).empty()) {
        v.fail("mutation " + std::to_string(k) + " of " + to_string(w.formula) + " accepted");
      }
    }
  }
  v.cases = witnesses + mutants;
  if (mutants < 50) v.fail("only " + std::to_string(mutants) + " mutants");
  if (v.pass) v.detail = std::to_string(witnesses) + " certificates valid, " + std::to_string(mutants) + " mutants rejected";
  return v;
}

// 7. One resource: no search path longer than 2|S| + 1.
Verdict single_resource_depth() {
  Verdict v;
  Rng rng(1006);
  std::size_t deepest = 0;
  for (int i = 0; i < 200; ++i) {
    rbatl::testing::ModelShape shape = corpus_shape(false, i % 4 != 0);
    shape.min_resources = shape.max_resources = 1;
    const Model m = rbatl::testing::random_model(rng, shape);
    const Semantics mode = m.total() ? static_cast<Semantics>(i % 3) : Semantics::nt;
    const Formula f = bind_to_model(rbatl::testing::random_formula(rng, m, corpus_formulas()), m);
    const CheckResult result = check(m, f, mode);
    ++v.cases;
    deepest = std::max(deepest, result.stats.max_depth);
    if (result.stats.max_depth > 2 * m.num_states() + 1) {
      v.fail("depth " + std::to_string(result.stats.max_depth) + " on " + std::to_string(m.num_states()) + " states for " + to_string(f));
    }
  }
  if (v.pass) v.detail = std::to_string(v.cases) + " queries, deepest path " + std::to_string(deepest);
  return v;
}

// 8. rbatl and nt agree on total models; the separation fixture tells the
// consumption-sum mode apart.
Verdict semantics_modes() {
  Verdict v;
  Rng rng(1007);
  for (int i = 0; i < 150; ++i) {
    const Model m = rbatl::testing::random_model(rng, corpus_shape(false, true));
    const Formula f = bind_to_model(rbatl::testing::random_formula(rng, m, corpus_formulas()), m);
    ++v.cases;
    if (check(m, f, Semantics::rbatl).labels != check(m, f, Semantics::nt).labels) {
      v.fail("model " + std::to_string(i) + ": rbatl and nt differ on " + to_string(f));
    }
  }
  const Model sep = fixture("separation.json");
  const char* text = "<{a,b}: 0> X p";
  v.cases += 3;
  if (!holds(sep, text, "s", Semantics::rbatl)) v.fail("separation: rbatl should hold");
  if (!holds(sep, text, "s", Semantics::nt)) v.fail("separation: nt should hold");
  if (holds(sep, text, "s", Semantics::ral_finite)) v.fail("separation: ral-finite should not hold");
  if (v.pass) v.detail = std::to_string(v.cases - 3) + " total models agree; separation true/true/false";
  return v;
}

// 9. Termination guard over every query above.
Verdict termination_guard() {
  Verdict v;
  v.cases = timing.queries;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", timing.worst);
  if (timing.worst >= kQueryLimitSeconds) v.fail("slowest query took " + std::string(buf) + " s: " + timing.worst_query);
  if (v.pass) v.detail = std::to_string(timing.queries) + " queries, slowest " + buf + " s";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"example bounds", example_bounds},
      {"petri differential", petri_differential},
      {"engine equivalence", engine_equivalence},
      {"infinite-bound agreement", infinite_agreement},
      {"bound monotonicity", monotonicity},
      {"witness integrity", witness_integrity},
      {"single-resource depth", single_resource_depth},
      {"semantics modes", semantics_modes},
      {"termination guard", termination_guard},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    failed += !v.pass;
    std::printf("%s %zu %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                v.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
