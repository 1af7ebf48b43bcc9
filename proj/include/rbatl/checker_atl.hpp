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

#ifndef RBATL_CHECKER_ATL_HPP
#define RBATL_CHECKER_ATL_HPP

#include <map>

#include "rbatl/formula.hpp"
#include "rbatl/model.hpp"
#include "rbatl/semantics.hpp"

namespace rbatl {

/// Formula (bound to a model) -> satisfying states.
using Labelling = std::map<Formula, StateSet>;

/// [f] from the labelling; ContractViolation when f has not been labelled.
const StateSet& label_of(const Labelling& labels, const Formula& f);

/// Propositions and connectives by set algebra over the labelling of the
/// strict subformulas.
StateSet label_boolean(const Model& m, const Formula& f, const Labelling& lower);

/// Classical labelling of an all-infinity modality (or of a propositional
/// formula). Throws ContractViolation when the bound has a finite component.
StateSet atl_label(const Model& m, const Formula& f, const Labelling& lower,
                   Semantics mode = Semantics::rbatl);

/// Least fixpoint rho = psi | (pre(rho, b) & phi) and greatest fixpoint
/// rho = phi & pre(rho, b), shared with the symbolic engine.
StateSet until_fixpoint(const MoveTable& table, const StateSet& phi, const StateSet& psi,
                        const BoundVec& b, Semantics mode);
StateSet always_fixpoint(const MoveTable& table, const StateSet& phi, const BoundVec& b,
                         Semantics mode);

}  // namespace rbatl

#endif  // RBATL_CHECKER_ATL_HPP
