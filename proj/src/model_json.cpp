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

#include "rbatl/model_json.hpp"

#include <algorithm>
#include <tuple>

#include <json.hpp>

#include "rbatl/errors.hpp"

namespace rbatl {

using nlohmann::json;

namespace {

std::vector<std::string> string_list(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_array()) throw ValidationError(std::string("'") + key + "' must be an array");
  return v.get<std::vector<std::string>>();
}

}  // namespace

Model model_from_json(const std::string& text, bool validate) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("model is not valid JSON: ") + e.what());
  }
  ModelBuilder b;
  try {
    if (!j.is_object()) throw ValidationError("model must be a JSON object");
    if (!j.contains("format_version") || j.at("format_version") != 1) {
      throw ValidationError("model format_version must be 1");
    }
    for (auto& a : string_list(j, "agents")) b.agent(a);
    for (auto& r : string_list(j, "resources")) b.resource(r);
    for (auto& s : string_list(j, "states")) b.state(s);
    b.total(j.value("total", true));
    const json labels = j.value("labels", json::object());
    for (const auto& [prop, states] : labels.items()) {
      b.proposition(prop, states.get<std::vector<std::string>>());
    }
    for (const auto& [state, per_agent] : j.at("actions").items()) {
      for (const auto& [agent, menu] : per_agent.items()) {
        for (const auto& entry : menu) {
          b.action(state, agent, entry.at("name").get<std::string>(),
                   CostVec(entry.at("cost").get<std::vector<std::int64_t>>()));
        }
      }
    }
    for (const auto& t : j.at("transitions")) {
      b.transition(t.at("from").get<std::string>(),
                   t.at("joint").get<std::vector<std::string>>(), t.at("to").get<std::string>());
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed model: ") + e.what());
  }
  Model m = b.build();
  if (validate) {
    const auto problems = validate_model(m);
    if (!problems.empty()) {
      std::string msg = "invalid model:";
      for (const auto& p : problems) msg += "\n  " + p;
      throw ValidationError(msg);
    }
  }
  return m;
}

std::string model_to_json(const Model& m) {
  json j;
  j["format_version"] = 1;
  j["agents"] = m.agents();
  j["resources"] = m.resources();
  j["states"] = m.states();
  j["total"] = m.total();

  json labels = json::object();
  for (const auto& [prop, set] : m.labels()) {
    json members = json::array();
    for (StateId s : set.members()) members.push_back(m.states()[s]);
    labels[prop] = members;
  }
  j["labels"] = labels;

  json actions = json::object();
  for (StateId s = 0; s < m.num_states(); ++s) {
    json per_agent = json::object();
    for (AgentId a = 0; a < m.num_agents(); ++a) {
      json menu = json::array();
      for (const auto& opt : m.menu(s, a)) {
        menu.push_back({{"name", m.actions()[opt.action]}, {"cost", opt.cost.values()}});
      }
      per_agent[m.agents()[a]] = menu;
    }
    actions[m.states()[s]] = per_agent;
  }
  j["actions"] = actions;

  using Row = std::tuple<StateId, std::vector<std::string>, StateId>;
  std::vector<Row> rows;
  for (StateId s = 0; s < m.num_states(); ++s) {
    for (const auto& [joint, to] : m.transitions(s)) {
      std::vector<std::string> names;
      for (ActionId x : joint) names.push_back(m.actions()[x]);
      rows.emplace_back(s, std::move(names), to);
    }
  }
  std::sort(rows.begin(), rows.end());
  json transitions = json::array();
  for (const auto& [from, joint, to] : rows) {
    transitions.push_back({{"from", m.states()[from]}, {"joint", joint}, {"to", m.states()[to]}});
  }
  j["transitions"] = transitions;
  return j.dump(2) + "\n";
}

}  // namespace rbatl
