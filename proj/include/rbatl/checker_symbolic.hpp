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

// Fixpoint labelling for consumption-only models, iterating over budget
// splits instead of searching.

#ifndef RBATL_CHECKER_SYMBOLIC_HPP
#define RBATL_CHECKER_SYMBOLIC_HPP

#include <utility>
#include <vector>

#include "rbatl/checker_atl.hpp"

namespace rbatl {

/// Pairs (d, d2) with d + d2 = b, both infinite exactly where b is, and d
/// having a non-zero finite component. Ordered by the finite sum of d2, then
/// lexicographically.
std::vector<std::pair<BoundVec, BoundVec>> split(const BoundVec& b);

/// Labels every formula of sub_plus(phi0). Throws ContractViolation when
/// some action produces a resource.
Labelling rb_atl_label(const Model& m, const Formula& phi0, Semantics mode = Semantics::rbatl);

}  // namespace rbatl

#endif  // RBATL_CHECKER_SYMBOLIC_HPP
