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

// Semantics modes and the per-coalition move tables shared by every engine.

#ifndef RBATL_SEMANTICS_HPP
#define RBATL_SEMANTICS_HPP

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rbatl/model.hpp"
#include "rbatl/resource.hpp"

namespace rbatl {

/// rbatl: cost filter on the net joint cost.
/// nt: as rbatl, and a move must have at least one outcome.
/// ral_finite: filter on the per-resource sum of member consumptions, and a
/// move must have at least one outcome. Availability still evolves by the
/// net cost.
enum class Semantics { rbatl, nt, ral_finite };

std::string_view to_string(Semantics mode);
std::optional<Semantics> parse_semantics(std::string_view text);

/// A coalition joint action at one state with everything the searches need.
struct Move {
  JointAction action;
  CostVec cost;         // net joint cost
  CostVec consumption;  // sum over members of the positive parts
  std::vector<StateId> outcomes;
};

/// D_A(s) for every state, computed once.
class MoveTable {
 public:
  MoveTable(const Model& m, Coalition coalition);

  const Model& model() const noexcept { return *model_; }
  const Coalition& coalition() const noexcept { return coalition_; }
  std::span<const Move> moves(StateId s) const { return moves_.at(s); }

 private:
  const Model* model_;
  Coalition coalition_;
  std::vector<std::vector<Move>> moves_;
};

/// Whether the move may be taken with availability e under the mode.
bool admissible(const Move& mv, const BoundVec& e, Semantics mode);

/// Pre(A, rho, b): states with an admissible move whose outcomes lie in rho.
StateSet pre(const MoveTable& table, const StateSet& rho, const BoundVec& b, Semantics mode);
StateSet pre(const Model& m, const Coalition& coalition, const StateSet& rho,
             const BoundVec& b, Semantics mode);

}  // namespace rbatl

#endif  // RBATL_SEMANTICS_HPP
