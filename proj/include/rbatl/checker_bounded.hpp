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

// Labelling for resource-bounded formulas by depth-first and-or search with
// dominance pruning and loop pumping.

#ifndef RBATL_CHECKER_BOUNDED_HPP
#define RBATL_CHECKER_BOUNDED_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rbatl/checker_atl.hpp"
#include "rbatl/witness.hpp"

namespace rbatl {

struct SearchStats {
  std::uint64_t nodes = 0;
  std::size_t max_depth = 0;  // nodes on the longest path, root = 1

  void merge(const SearchStats& other);
};

struct SearchOptions {
  Semantics semantics = Semantics::rbatl;
  /// Prune with the classical label of the unbounded version and accept
  /// when every resource is pumped. Disabling it makes the search decide
  /// the formula from [phi] and [psi] alone.
  bool atl_prefilter = true;
  bool want_witness = false;
};

struct SearchOutcome {
  bool holds = false;
  SearchStats stats;
  std::optional<Witness> witness;
};

/// until-strategy from node0(s, bound of f). f is a bound U modality; labels
/// must hold [phi], [psi] and, with the prefilter, the unbounded version.
SearchOutcome until_strategy(const Model& m, StateId s, const Formula& f,
                             const Labelling& labels, const SearchOptions& opts = {});

/// box-strategy from node0(s, bound of f), same conventions.
SearchOutcome box_strategy(const Model& m, StateId s, const Formula& f,
                           const Labelling& labels, const SearchOptions& opts = {});

struct CheckOptions {
  Semantics semantics = Semantics::rbatl;
  /// Reuse root answers across bounds of the same formula: true at b stays
  /// true above b, false at b stays false below b.
  bool upward_cache = false;
};

struct CheckResult {
  Formula root;  // bound to the model
  Labelling labels;
  SearchStats stats;

  const StateSet& satisfying() const { return label_of(labels, root); }
};

/// Labels sub_ordered(phi0), routing unbounded modalities to the classical
/// labeller and bounded U/G to the searches. A Checker keeps the optional
/// cache between calls on the same model.
class Checker {
 public:
  explicit Checker(const Model& m, CheckOptions opts = {});

  CheckResult check(const Formula& phi0);

  /// Certificate for the root formula of `result` at s (a U or G modality
  /// satisfied at s); nullopt otherwise. Not concretized.
  std::optional<Witness> witness(const CheckResult& result, StateId s) const;

 private:
  struct CacheEntry {
    BoundVec bound;
    bool holds;
  };

  std::optional<bool> cached(const Formula& f, StateId s) const;
  void remember(const Formula& f, StateId s, bool holds);

  const Model* model_;
  CheckOptions opts_;
  std::map<Formula, std::vector<std::vector<CacheEntry>>> cache_;
};

CheckResult model_check(const Model& m, const Formula& phi0, const CheckOptions& opts = {});

/// Certificate for the U or G modality f at s, searched with the labelling
/// of its operands (from either engine); nullopt when f does not hold at s
/// or is not a U/G modality. Not concretized.
std::optional<Witness> find_witness(const Model& m, const Formula& f, const Labelling& labels,
                                    StateId s, Semantics mode);

}  // namespace rbatl

#endif  // RBATL_CHECKER_BOUNDED_HPP
