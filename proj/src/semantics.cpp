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

#include "rbatl/semantics.hpp"

#include <algorithm>

namespace rbatl {

std::string_view to_string(Semantics mode) {
  switch (mode) {
    case Semantics::rbatl: return "rbatl";
    case Semantics::nt: return "nt";
    case Semantics::ral_finite: return "ral-finite";
  }
  return "rbatl";
}

std::optional<Semantics> parse_semantics(std::string_view text) {
  if (text == "rbatl") return Semantics::rbatl;
  if (text == "nt") return Semantics::nt;
  if (text == "ral-finite" || text == "ral_finite") return Semantics::ral_finite;
  return std::nullopt;
}

MoveTable::MoveTable(const Model& m, Coalition coalition)
    : model_(&m), coalition_(std::move(coalition)), moves_(m.num_states()) {
  for (StateId s = 0; s < m.num_states(); ++s) {
    for (auto& sigma : coalition_actions(m, s, coalition_)) {
      Move mv;
      mv.cost = zero_cost(m.num_resources());
      mv.consumption = zero_cost(m.num_resources());
      for (std::size_t i = 0; i < sigma.coalition.size(); ++i) {
        const CostVec& c = *m.cost(s, sigma.coalition[i], sigma.choices[i]);
        mv.cost = add(mv.cost, c);
        mv.consumption = add(mv.consumption, rbatl::consumption(c));
      }
      mv.outcomes = outcomes(m, s, sigma);
      mv.action = std::move(sigma);
      moves_[s].push_back(std::move(mv));
    }
  }
}

bool admissible(const Move& mv, const BoundVec& e, Semantics mode) {
  switch (mode) {
    case Semantics::rbatl:
      return affordable(e, mv.cost);
    case Semantics::nt:
      return !mv.outcomes.empty() && affordable(e, mv.cost);
    case Semantics::ral_finite:
      return !mv.outcomes.empty() && affordable(e, mv.consumption);
  }
  return false;
}

StateSet pre(const MoveTable& table, const StateSet& rho, const BoundVec& b, Semantics mode) {
  const std::size_t n = table.model().num_states();
  StateSet out(n);
  for (StateId s = 0; s < n; ++s) {
    for (const Move& mv : table.moves(s)) {
      if (!admissible(mv, b, mode)) continue;
      const bool inside = std::all_of(mv.outcomes.begin(), mv.outcomes.end(),
                                      [&rho](StateId t) { return rho.contains(t); });
      if (inside) {
        out.insert(s);
        break;
      }
    }
  }
  return out;
}

StateSet pre(const Model& m, const Coalition& coalition, const StateSet& rho,
             const BoundVec& b, Semantics mode) {
  return pre(MoveTable(m, coalition), rho, b, mode);
}

}  // namespace rbatl
