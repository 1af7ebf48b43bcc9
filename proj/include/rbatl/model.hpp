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

// Resource-bounded concurrent game structures.
//
// Identifiers are strings at the boundary and dense indices inside. A Model is
// immutable once built and may be shared between threads.

#ifndef RBATL_MODEL_HPP
#define RBATL_MODEL_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rbatl/resource.hpp"

namespace rbatl {

using StateId = std::size_t;
using AgentId = std::size_t;
using ActionId = std::size_t;
using ResourceId = std::size_t;

/// Subset of the states of one model.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t universe, bool full = false)
      : bits_(universe, full) {}

  std::size_t universe() const noexcept { return bits_.size(); }
  bool contains(StateId s) const { return s < bits_.size() && bits_[s]; }
  void insert(StateId s) { bits_.at(s) = true; }
  void erase(StateId s) { bits_.at(s) = false; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<StateId> members() const;
  bool is_subset_of(const StateSet& other) const;

  StateSet& operator|=(const StateSet& other);
  StateSet& operator&=(const StateSet& other);
  StateSet complement() const;

  friend bool operator==(const StateSet&, const StateSet&) = default;

 private:
  std::vector<bool> bits_;
};

StateSet operator|(StateSet a, const StateSet& b);
StateSet operator&(StateSet a, const StateSet& b);

/// Sorted, duplicate-free agent indices.
using Coalition = std::vector<AgentId>;

/// One action per coalition member, in coalition order.
struct JointAction {
  Coalition coalition;
  std::vector<ActionId> choices;

  friend bool operator==(const JointAction&, const JointAction&) = default;
  friend auto operator<=>(const JointAction&, const JointAction&) = default;
};

struct ActionOption {
  ActionId action;
  CostVec cost;
};

class Model {
 public:
  std::size_t num_agents() const noexcept { return agents_.size(); }
  std::size_t num_resources() const noexcept { return resources_.size(); }
  std::size_t num_states() const noexcept { return states_.size(); }
  std::size_t num_actions() const noexcept { return actions_.size(); }

  const std::vector<std::string>& agents() const noexcept { return agents_; }
  const std::vector<std::string>& resources() const noexcept { return resources_; }
  const std::vector<std::string>& states() const noexcept { return states_; }
  const std::vector<std::string>& actions() const noexcept { return actions_; }

  std::optional<AgentId> find_agent(std::string_view name) const;
  std::optional<StateId> find_state(std::string_view name) const;
  std::optional<ActionId> find_action(std::string_view name) const;
  std::optional<ResourceId> find_resource(std::string_view name) const;

  /// d(s, a) in declared order, with costs.
  std::span<const ActionOption> menu(StateId s, AgentId a) const;

  /// c(s, a, act), or nullptr when act is not available to a at s.
  const CostVec* cost(StateId s, AgentId a, ActionId act) const;

  /// delta(s, sigma) for a full joint action (one entry per agent).
  std::optional<StateId> successor(StateId s, const std::vector<ActionId>& joint) const;

  /// Every defined full joint action at s, ordered lexicographically.
  const std::map<std::vector<ActionId>, StateId>& transitions(StateId s) const;

  /// Proposition labelling; every declared proposition has an entry.
  const std::map<std::string, StateSet>& labels() const noexcept { return labels_; }
  const StateSet* label(std::string_view prop) const;

  bool total() const noexcept { return total_; }

  Coalition coalition(const std::vector<std::string>& agent_names) const;
  Coalition grand_coalition() const;

 private:
  friend class ModelBuilder;

  std::vector<std::string> agents_;
  std::vector<std::string> resources_;
  std::vector<std::string> states_;
  std::vector<std::string> actions_;
  std::unordered_map<std::string, std::size_t> agent_index_;
  std::unordered_map<std::string, std::size_t> state_index_;
  std::unordered_map<std::string, std::size_t> action_index_;
  std::unordered_map<std::string, std::size_t> resource_index_;
  // menus_[s * num_agents + a]
  std::vector<std::vector<ActionOption>> menus_;
  std::vector<std::map<std::vector<ActionId>, StateId>> delta_;
  std::map<std::string, StateSet> labels_;
  bool total_ = true;
};

/// Assembles a Model by name. Unknown names, malformed cost vectors and
/// duplicate definitions are rejected here; semantic invariants (idle,
/// totality, transitions on unavailable actions) are left to validate_model so
/// that broken models can still be built and diagnosed.
class ModelBuilder {
 public:
  ModelBuilder& agent(std::string name);
  ModelBuilder& resource(std::string name);
  ModelBuilder& state(std::string name);
  ModelBuilder& total(bool flag);
  ModelBuilder& proposition(std::string name, const std::vector<std::string>& states);
  ModelBuilder& action(const std::string& state, const std::string& agent,
                       std::string action, CostVec cost);
  ModelBuilder& transition(const std::string& from,
                           const std::vector<std::string>& joint,
                           const std::string& to);

  Model build() const;

 private:
  struct PendingAction {
    std::string state, agent, action;
    CostVec cost;
  };
  struct PendingTransition {
    std::string from;
    std::vector<std::string> joint;
    std::string to;
  };

  std::vector<std::string> agents_, resources_, states_;
  std::vector<std::pair<std::string, std::vector<std::string>>> props_;
  std::vector<PendingAction> actions_;
  std::vector<PendingTransition> transitions_;
  bool total_ = true;
};

/// Component-wise sum of member costs; DomainError naming agent and state
/// when a member's action is not available.
CostVec cost_joint(const Model& m, StateId s, const JointAction& sigma);

/// Successor states over all opponent completions, sorted.
std::vector<StateId> outcomes(const Model& m, StateId s, const JointAction& sigma);

/// Cartesian product of the members' menus, first member most significant,
/// each menu in declared order.
std::vector<JointAction> coalition_actions(const Model& m, StateId s,
                                           const Coalition& coalition);

/// Human-readable invariant violations; empty iff the model is well formed.
std::vector<std::string> validate_model(const Model& m);

/// True when no action anywhere produces a resource.
bool consumption_only(const Model& m);

std::string describe(const Model& m, const JointAction& sigma);

}  // namespace rbatl

#endif  // RBATL_MODEL_HPP
