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

#include "rbatl/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "rbatl/errors.hpp"

namespace rbatl {

// ---------------------------------------------------------------------------
// StateSet

std::size_t StateSet::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<StateId> StateSet::members() const {
  std::vector<StateId> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(i);
  }
  return out;
}

bool StateSet::is_subset_of(const StateSet& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !other.contains(i)) return false;
  }
  return true;
}

StateSet& StateSet::operator|=(const StateSet& other) {
  if (bits_.size() < other.bits_.size()) bits_.resize(other.bits_.size(), false);
  for (std::size_t i = 0; i < other.bits_.size(); ++i) {
    if (other.bits_[i]) bits_[i] = true;
  }
  return *this;
}

StateSet& StateSet::operator&=(const StateSet& other) {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !other.contains(i)) bits_[i] = false;
  }
  return *this;
}

StateSet StateSet::complement() const {
  StateSet out(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (!bits_[i]) out.bits_[i] = true;
  }
  return out;
}

StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }

// ---------------------------------------------------------------------------
// Model

namespace {

template <typename Map>
std::optional<std::size_t> lookup(const Map& index, std::string_view name) {
  auto it = index.find(std::string(name));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

const std::map<std::vector<ActionId>, StateId> kNoTransitions;

}  // namespace

std::optional<AgentId> Model::find_agent(std::string_view name) const {
  return lookup(agent_index_, name);
}
std::optional<StateId> Model::find_state(std::string_view name) const {
  return lookup(state_index_, name);
}
std::optional<ActionId> Model::find_action(std::string_view name) const {
  return lookup(action_index_, name);
}
std::optional<ResourceId> Model::find_resource(std::string_view name) const {
  return lookup(resource_index_, name);
}

std::span<const ActionOption> Model::menu(StateId s, AgentId a) const {
  return menus_.at(s * agents_.size() + a);
}

const CostVec* Model::cost(StateId s, AgentId a, ActionId act) const {
  for (const auto& opt : menu(s, a)) {
    if (opt.action == act) return &opt.cost;
  }
  return nullptr;
}

std::optional<StateId> Model::successor(StateId s, const std::vector<ActionId>& joint) const {
  const auto& tr = delta_.at(s);
  auto it = tr.find(joint);
  if (it == tr.end()) return std::nullopt;
  return it->second;
}

const std::map<std::vector<ActionId>, StateId>& Model::transitions(StateId s) const {
  if (s >= delta_.size()) return kNoTransitions;
  return delta_[s];
}

const StateSet* Model::label(std::string_view prop) const {
  auto it = labels_.find(std::string(prop));
  return it == labels_.end() ? nullptr : &it->second;
}

Coalition Model::coalition(const std::vector<std::string>& agent_names) const {
  Coalition out;
  for (const auto& name : agent_names) {
    auto a = find_agent(name);
    if (!a) throw ValidationError("unknown agent '" + name + "'");
    out.push_back(*a);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Coalition Model::grand_coalition() const {
  Coalition out(agents_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

// ---------------------------------------------------------------------------
// ModelBuilder

ModelBuilder& ModelBuilder::agent(std::string name) {
  agents_.push_back(std::move(name));
  return *this;
}
ModelBuilder& ModelBuilder::resource(std::string name) {
  resources_.push_back(std::move(name));
  return *this;
}
ModelBuilder& ModelBuilder::state(std::string name) {
  states_.push_back(std::move(name));
  return *this;
}
ModelBuilder& ModelBuilder::total(bool flag) {
  total_ = flag;
  return *this;
}
ModelBuilder& ModelBuilder::proposition(std::string name,
                                        const std::vector<std::string>& states) {
  props_.emplace_back(std::move(name), states);
  return *this;
}
ModelBuilder& ModelBuilder::action(const std::string& state, const std::string& agent,
                                   std::string action, CostVec cost) {
  actions_.push_back({state, agent, std::move(action), std::move(cost)});
  return *this;
}
ModelBuilder& ModelBuilder::transition(const std::string& from,
                                       const std::vector<std::string>& joint,
                                       const std::string& to) {
  transitions_.push_back({from, joint, to});
  return *this;
}

namespace {

void index_names(const std::vector<std::string>& names, const char* what,
                 std::unordered_map<std::string, std::size_t>& index) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw ValidationError(std::string("empty ") + what + " name");
    if (!index.emplace(names[i], i).second) {
      throw ValidationError(std::string("duplicate ") + what + " '" + names[i] + "'");
    }
  }
}

std::size_t require(const std::unordered_map<std::string, std::size_t>& index,
                    const std::string& name, const char* what) {
  auto it = index.find(name);
  if (it == index.end()) {
    throw ValidationError(std::string("unknown ") + what + " '" + name + "'");
  }
  return it->second;
}

}  // namespace

Model ModelBuilder::build() const {
  Model m;
  m.agents_ = agents_;
  m.resources_ = resources_;
  m.states_ = states_;
  m.total_ = total_;
  if (m.agents_.empty()) throw ValidationError("model has no agents");
  if (m.states_.empty()) throw ValidationError("model has no states");
  index_names(m.agents_, "agent", m.agent_index_);
  index_names(m.resources_, "resource", m.resource_index_);
  index_names(m.states_, "state", m.state_index_);

  const std::size_t n = m.agents_.size();
  m.menus_.assign(m.states_.size() * n, {});
  m.delta_.assign(m.states_.size(), {});

  auto intern_action = [&m](const std::string& name) {
    if (name.empty()) throw ValidationError("empty action name");
    auto [it, inserted] = m.action_index_.emplace(name, m.actions_.size());
    if (inserted) m.actions_.push_back(name);
    return it->second;
  };

  for (const auto& pa : actions_) {
    const auto s = require(m.state_index_, pa.state, "state");
    const auto a = require(m.agent_index_, pa.agent, "agent");
    if (pa.cost.size() != m.resources_.size()) {
      throw ValidationError("cost of action '" + pa.action + "' for agent '" + pa.agent +
                            "' at state '" + pa.state + "' has " +
                            std::to_string(pa.cost.size()) + " components, expected " +
                            std::to_string(m.resources_.size()));
    }
    const auto act = intern_action(pa.action);
    auto& menu = m.menus_[s * n + a];
    for (const auto& opt : menu) {
      if (opt.action == act) {
        throw ValidationError("action '" + pa.action + "' declared twice for agent '" +
                              pa.agent + "' at state '" + pa.state + "'");
      }
    }
    menu.push_back({act, pa.cost});
  }

  for (const auto& pt : transitions_) {
    const auto s = require(m.state_index_, pt.from, "state");
    const auto t = require(m.state_index_, pt.to, "state");
    if (pt.joint.size() != n) {
      throw ValidationError("transition from '" + pt.from + "' has " +
                            std::to_string(pt.joint.size()) + " actions, expected " +
                            std::to_string(n));
    }
    std::vector<ActionId> key;
    key.reserve(n);
    for (const auto& name : pt.joint) {
      auto it = m.action_index_.find(name);
      // An action never offered anywhere still gets interned so that
      // validate_model can report the transition.
      key.push_back(it == m.action_index_.end() ? intern_action(name) : it->second);
    }
    if (!m.delta_[s].emplace(std::move(key), t).second) {
      throw ValidationError("duplicate transition from '" + pt.from + "'");
    }
  }

  for (const auto& [name, members] : props_) {
    if (name.empty()) throw ValidationError("empty proposition name");
    StateSet set(m.states_.size());
    for (const auto& st : members) set.insert(require(m.state_index_, st, "state"));
    if (!m.labels_.emplace(name, std::move(set)).second) {
      throw ValidationError("duplicate proposition '" + name + "'");
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Operations

std::string describe(const Model& m, const JointAction& sigma) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < sigma.coalition.size(); ++i) {
    if (i) out << ", ";
    out << m.agents()[sigma.coalition[i]] << '=' << m.actions()[sigma.choices[i]];
  }
  out << ')';
  return out.str();
}

CostVec cost_joint(const Model& m, StateId s, const JointAction& sigma) {
  if (sigma.coalition.size() != sigma.choices.size()) {
    throw StructuralError("joint action has mismatched coalition and choices");
  }
  CostVec total = zero_cost(m.num_resources());
  for (std::size_t i = 0; i < sigma.coalition.size(); ++i) {
    const CostVec* c = m.cost(s, sigma.coalition[i], sigma.choices[i]);
    if (c == nullptr) {
      throw DomainError("action '" + m.actions().at(sigma.choices[i]) +
                        "' is not available to agent '" +
                        m.agents().at(sigma.coalition[i]) + "' at state '" +
                        m.states().at(s) + "'");
    }
    total = add(total, *c);
  }
  return total;
}

std::vector<StateId> outcomes(const Model& m, StateId s, const JointAction& sigma) {
  for (std::size_t i = 0; i < sigma.coalition.size(); ++i) {
    if (m.cost(s, sigma.coalition[i], sigma.choices[i]) == nullptr) {
      throw DomainError("action '" + m.actions().at(sigma.choices[i]) +
                        "' is not available to agent '" +
                        m.agents().at(sigma.coalition[i]) + "' at state '" +
                        m.states().at(s) + "'");
    }
  }
  std::vector<bool> in_coalition(m.num_agents(), false);
  std::vector<ActionId> fixed(m.num_agents(), 0);
  for (std::size_t i = 0; i < sigma.coalition.size(); ++i) {
    in_coalition[sigma.coalition[i]] = true;
    fixed[sigma.coalition[i]] = sigma.choices[i];
  }
  std::set<StateId> out;
  for (const auto& [joint, target] : m.transitions(s)) {
    bool match = true;
    for (AgentId a = 0; a < m.num_agents() && match; ++a) {
      if (in_coalition[a]) {
        match = joint[a] == fixed[a];
      } else {
        match = m.cost(s, a, joint[a]) != nullptr;
      }
    }
    if (match) out.insert(target);
  }
  return {out.begin(), out.end()};
}

std::vector<JointAction> coalition_actions(const Model& m, StateId s,
                                           const Coalition& coalition) {
  std::vector<JointAction> out;
  JointAction current{coalition, std::vector<ActionId>(coalition.size(), 0)};
  // Odometer over the members' menus, last member varying fastest.
  std::vector<std::size_t> idx(coalition.size(), 0);
  for (AgentId a : coalition) {
    if (m.menu(s, a).empty()) return out;
  }
  while (true) {
    for (std::size_t i = 0; i < coalition.size(); ++i) {
      current.choices[i] = m.menu(s, coalition[i])[idx[i]].action;
    }
    out.push_back(current);
    std::size_t pos = coalition.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < m.menu(s, coalition[pos]).size()) break;
      idx[pos] = 0;
      if (pos == 0) return out;
    }
    if (coalition.empty()) return out;
  }
}

std::vector<std::string> validate_model(const Model& m) {
  std::vector<std::string> problems;
  const auto& st = m.states();
  const auto& ag = m.agents();
  const auto& acts = m.actions();
  const auto idle = m.find_action("idle");

  for (StateId s = 0; s < m.num_states(); ++s) {
    for (AgentId a = 0; a < m.num_agents(); ++a) {
      const auto menu = m.menu(s, a);
      if (!m.total()) continue;
      if (menu.empty()) {
        problems.push_back("state '" + st[s] + "', agent '" + ag[a] +
                           "': no available actions in a total model");
      }
      const CostVec* c = idle ? m.cost(s, a, *idle) : nullptr;
      if (c == nullptr) {
        problems.push_back("state '" + st[s] + "', agent '" + ag[a] +
                           "': idle is not available");
      } else if (*c != zero_cost(m.num_resources())) {
        problems.push_back("state '" + st[s] + "', agent '" + ag[a] +
                           "': idle has non-zero cost " + to_string(*c));
      }
    }

    for (const auto& [joint, target] : m.transitions(s)) {
      for (AgentId a = 0; a < m.num_agents(); ++a) {
        if (m.cost(s, a, joint[a]) == nullptr) {
          problems.push_back("state '" + st[s] + "': transition uses action '" +
                             acts[joint[a]] + "' not available to agent '" + ag[a] + "'");
        }
      }
    }

    if (m.total()) {
      // Every full joint action in D(s) needs a successor.
      const auto full = coalition_actions(m, s, m.grand_coalition());
      for (const auto& sigma : full) {
        if (!m.successor(s, sigma.choices)) {
          problems.push_back("state '" + st[s] + "': no transition for joint action " +
                             describe(m, sigma));
        }
      }
    }
  }
  return problems;
}

bool consumption_only(const Model& m) {
  for (StateId s = 0; s < m.num_states(); ++s) {
    for (AgentId a = 0; a < m.num_agents(); ++a) {
      for (const auto& opt : m.menu(s, a)) {
        if (any_negative(opt.cost)) return false;
      }
    }
  }
  return true;
}

}  // namespace rbatl
