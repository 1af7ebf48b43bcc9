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

// Exhaustive depth-bounded search over concrete budgets, without pumping or
// dominance pruning. Sound but incomplete: it never answers "false".

#ifndef RBATL_ORACLE_HPP
#define RBATL_ORACLE_HPP

#include <cstddef>

#include "rbatl/formula.hpp"
#include "rbatl/model.hpp"
#include "rbatl/semantics.hpp"

namespace rbatl {

enum class OracleAnswer { holds, unknown };

/// f is a U or G modality (bound to m). For U: holds iff a strategy tree of
/// at most `depth` levels reaches psi on every branch with phi before and
/// every prefix affordable. For G: holds iff such a tree exists whose every
/// leaf repeats an ancestor's state with no more resources than the leaf.
OracleAnswer bounded_search(const Model& m, const Formula& f, StateId s, std::size_t depth,
                            Semantics mode = Semantics::rbatl);

}  // namespace rbatl

#endif  // RBATL_ORACLE_HPP
