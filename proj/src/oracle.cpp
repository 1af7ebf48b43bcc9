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

#include "rbatl/oracle.hpp"

#include <map>
#include <tuple>

#include "rbatl/checker_bounded.hpp"
#include "rbatl/errors.hpp"

namespace rbatl {

namespace {

class Oracle {
 public:
  Oracle(const Model& m, const Formula& f, Semantics mode)
      : table_(m, m.coalition(f.coalition())), mode_(mode) {
    CheckOptions opts;
    opts.semantics = mode;
    phi_ = model_check(m, f.lhs(), opts).satisfying();
    if (f.kind() == FormulaKind::Until) psi_ = model_check(m, f.rhs(), opts).satisfying();
  }

  bool until(StateId s, const BoundVec& v, std::size_t depth) {
    if (psi_.contains(s)) return true;
    if (depth <= 1 || !phi_.contains(s)) return false;
    auto key = std::make_tuple(s, v.values(), depth);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool found = false;
    for (const Move& mv : table_.moves(s)) {
      if (!admissible(mv, v, mode_) || mv.outcomes.empty()) continue;
      const BoundVec next = *bound_minus_cost(v, mv.cost);
      bool all = true;
      for (StateId t : mv.outcomes) {
        if (!until(t, next, depth - 1)) {
          all = false;
          break;
        }
      }
      if (all) {
        found = true;
        break;
      }
    }
    memo_.emplace(std::move(key), found);
    return found;
  }

  bool box(StateId s, const BoundVec& v, std::size_t depth) {
    if (!phi_.contains(s)) return false;
    for (const auto& [state, avail] : path_) {
      if (state == s && leq(avail, v)) return true;
    }
    if (depth <= 1) return false;
    path_.emplace_back(s, v);
    bool found = false;
    for (const Move& mv : table_.moves(s)) {
      if (!admissible(mv, v, mode_) || mv.outcomes.empty()) continue;
      const BoundVec next = *bound_minus_cost(v, mv.cost);
      bool all = true;
      for (StateId t : mv.outcomes) {
        if (!box(t, next, depth - 1)) {
          all = false;
          break;
        }
      }
      if (all) {
        found = true;
        break;
      }
    }
    path_.pop_back();
    return found;
  }

 private:
  MoveTable table_;
  Semantics mode_;
  StateSet phi_, psi_;
  std::map<std::tuple<StateId, std::vector<Amount>, std::size_t>, bool> memo_;
  std::vector<std::pair<StateId, BoundVec>> path_;
};

}  // namespace

OracleAnswer bounded_search(const Model& m, const Formula& f, StateId s, std::size_t depth,
                            Semantics mode) {
  if (depth == 0) throw ContractViolation("oracle depth must be at least 1");
  if (f.kind() != FormulaKind::Until && f.kind() != FormulaKind::Always) {
    throw ContractViolation("oracle needs a U or G modality, got '" + to_string(f) + "'");
  }
  if (!f.bound()) throw ContractViolation("oracle formula must be bound to the model");
  if (s >= m.num_states()) throw DomainError("state index out of range");
  Oracle oracle(m, f, mode);
  const bool ok = f.kind() == FormulaKind::Until ? oracle.until(s, *f.bound(), depth)
                                                 : oracle.box(s, *f.bound(), depth);
  return ok ? OracleAnswer::holds : OracleAnswer::unknown;
}

}  // namespace rbatl
