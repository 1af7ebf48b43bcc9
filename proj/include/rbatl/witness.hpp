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

// Strategy certificates produced by the tree searches, their JSON form, the
// expansion of pumped loops into finite strategies, and an independent
// validator.

#ifndef RBATL_WITNESS_HPP
#define RBATL_WITNESS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rbatl/formula.hpp"
#include "rbatl/model.hpp"
#include "rbatl/semantics.hpp"

namespace rbatl {

enum class LeafKind { none, psi, all_infinity, loopback };
enum class WitnessKind { until, box };

/// Resource set to infinity at a node because of the loop from the path
/// entry `ancestor` (0 = root) to this node.
struct PumpRecord {
  ResourceId resource;
  std::size_t ancestor;
  friend bool operator==(const PumpRecord&, const PumpRecord&) = default;
};

struct WitnessNode {
  StateId state = 0;
  BoundVec avail;                     // after pumping
  std::optional<JointAction> action;  // absent at leaves
  std::optional<CostVec> cost;
  LeafKind leaf = LeafKind::none;
  std::size_t ancestor = 0;           // loopback target, path index
  std::vector<PumpRecord> pumped;
  std::vector<WitnessNode> children;  // one per outcome, ascending state
};

struct Witness {
  WitnessKind kind = WitnessKind::until;
  Formula formula;  // bound to the model
  Semantics semantics = Semantics::rbatl;
  bool concretized = false;
  WitnessNode root;
};

std::size_t node_count(const WitnessNode& n);
std::size_t height(const WitnessNode& n);

/// Certificate JSON (docs/formats.md) and back. from_json only checks
/// shape and names; use validate_witness for meaning.
std::string witness_to_json(const Model& m, const Witness& w);
Witness witness_from_json(const Model& m, const std::string& text);

/// Number of loop traversals needed to lift `surplus` to `target` when each
/// traversal gains `gain` (> 0): ceil((target - surplus) / gain), or 0.
std::uint64_t repetitions_needed(std::uint64_t target, std::uint64_t surplus, std::uint64_t gain);

/// Replaces pumped loops and all-infinity leaves by explicit finite
/// strategies: loops are repeated as often as the budget requires, and
/// all-infinity leaves are completed by a classical attractor strategy.
/// Box witnesses are returned unchanged. Throws StructuralError on malformed
/// input and Error when the expansion exceeds its work budget.
Witness concretize(const Model& m, const Witness& w);

/// Recomputes every field of a certificate from the model: the root state
/// and budget, admissibility and cost of each action, availability
/// bookkeeping, coverage of outcomes, the formula's operands at every node,
/// and leaf conditions. Until certificates must be concretized. Returns the
/// list of problems; empty means valid.
std::vector<std::string> validate_witness(const Model& m, const Witness& w, StateId initial);

/// Single-field corruptions of a certificate, for fuzzing the validator.
/// Index selects the mutation deterministically; returns nullopt when the
/// mutation does not apply to this certificate.
std::optional<Witness> mutate_witness(const Model& m, const Witness& w, std::size_t index);
std::size_t mutation_kinds();

}  // namespace rbatl

#endif  // RBATL_WITNESS_HPP
