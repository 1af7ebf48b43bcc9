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

#include "rbatl/checker_atl.hpp"

#include "rbatl/errors.hpp"

namespace rbatl {

const StateSet& label_of(const Labelling& labels, const Formula& f) {
  auto it = labels.find(f);
  if (it == labels.end()) {
    throw ContractViolation("formula '" + to_string(f) + "' has not been labelled yet");
  }
  return it->second;
}

StateSet label_boolean(const Model& m, const Formula& f, const Labelling& lower) {
  const std::size_t n = m.num_states();
  switch (f.kind()) {
    case FormulaKind::True:
      return StateSet(n, true);
    case FormulaKind::False:
      return StateSet(n);
    case FormulaKind::Prop: {
      const StateSet* p = m.label(f.name());
      if (p == nullptr) throw ValidationError("unknown proposition '" + f.name() + "'");
      return *p;
    }
    case FormulaKind::Not:
      return label_of(lower, f.lhs()).complement();
    case FormulaKind::Or:
      return label_of(lower, f.lhs()) | label_of(lower, f.rhs());
    case FormulaKind::And:
      return label_of(lower, f.lhs()) & label_of(lower, f.rhs());
    default:
      throw ContractViolation("label_boolean on modality '" + to_string(f) + "'");
  }
}

StateSet until_fixpoint(const MoveTable& table, const StateSet& phi, const StateSet& psi,
                        const BoundVec& b, Semantics mode) {
  StateSet rho = psi;
  while (true) {
    StateSet next = rho | (pre(table, rho, b, mode) & phi);
    if (next == rho) return rho;
    rho = std::move(next);
  }
}

StateSet always_fixpoint(const MoveTable& table, const StateSet& phi, const BoundVec& b,
                         Semantics mode) {
  StateSet rho = phi;
  while (true) {
    StateSet next = phi & pre(table, rho, b, mode);
    if (next == rho) return rho;
    rho = std::move(next);
  }
}

StateSet atl_label(const Model& m, const Formula& f, const Labelling& lower, Semantics mode) {
  if (!f.is_modality()) return label_boolean(m, f, lower);
  if (!f.bound() || !all_infinite(*f.bound())) {
    throw ContractViolation("atl_label needs an all-infinity bound, got '" + to_string(f) + "'");
  }
  const MoveTable table(m, m.coalition(f.coalition()));
  const BoundVec& b = *f.bound();
  switch (f.kind()) {
    case FormulaKind::Next:
      return pre(table, label_of(lower, f.lhs()), b, mode);
    case FormulaKind::Until:
      return until_fixpoint(table, label_of(lower, f.lhs()), label_of(lower, f.rhs()), b, mode);
    default:
      return always_fixpoint(table, label_of(lower, f.lhs()), b, mode);
  }
}

}  // namespace rbatl
