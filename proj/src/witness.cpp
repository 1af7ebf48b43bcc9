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

#include "rbatl/witness.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <type_traits>
#include <unordered_map>

#include <json.hpp>

#include "rbatl/checker_atl.hpp"
#include "rbatl/checker_bounded.hpp"
#include "rbatl/errors.hpp"

namespace rbatl {

using nlohmann::json;

std::size_t node_count(const WitnessNode& n) {
  std::size_t total = 1;
  for (const auto& c : n.children) total += node_count(c);
  return total;
}

std::size_t height(const WitnessNode& n) {
  std::size_t h = 0;
  for (const auto& c : n.children) h = std::max(h, height(c));
  return h + 1;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

const char* leaf_name(LeafKind k) {
  switch (k) {
    case LeafKind::psi: return "psi";
    case LeafKind::all_infinity: return "all-infinity";
    case LeafKind::loopback: return "loopback";
    case LeafKind::none: break;
  }
  return nullptr;
}

json bound_json(const BoundVec& b) {
  json out = json::array();
  for (const auto& a : b) {
    if (a.is_infinite()) {
      out.push_back("inf");
    } else {
      out.push_back(a.value());
    }
  }
  return out;
}

BoundVec bound_from(const json& j) {
  if (!j.is_array()) throw StructuralError("bound must be an array");
  BoundVec out(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].is_string() && j[i].get<std::string>() == "inf") {
      out[i] = Amount::infinity();
    } else if (j[i].is_number_unsigned()) {
      out[i] = Amount(j[i].get<std::uint64_t>());
    } else {
      throw StructuralError("bound components are naturals or \"inf\"");
    }
  }
  return out;
}

json node_json(const Model& m, const WitnessNode& n) {
  json j;
  j["state"] = m.states().at(n.state);
  j["avail"] = bound_json(n.avail);
  if (n.action) {
    json act = json::object();
    for (std::size_t i = 0; i < n.action->coalition.size(); ++i) {
      const ActionId a = n.action->choices[i];
      act[m.agents().at(n.action->coalition[i])] =
          a < m.num_actions() ? m.actions()[a] : "#" + std::to_string(a);
    }
    j["action"] = act;
  } else {
    j["action"] = nullptr;
  }
  j["cost"] = n.cost ? json(n.cost->values()) : json(nullptr);
  if (const char* leaf = leaf_name(n.leaf)) {
    j["leaf"] = leaf;
  } else {
    j["leaf"] = nullptr;
  }
  if (n.leaf == LeafKind::loopback) j["ancestor"] = n.ancestor;
  json pumped = json::array();
  for (const auto& p : n.pumped) {
    pumped.push_back({{"resource", m.resources().at(p.resource)}, {"ancestor", p.ancestor}});
  }
  j["pumped"] = pumped;
  json kids = json::array();
  for (const auto& c : n.children) kids.push_back(node_json(m, c));
  j["children"] = kids;
  return j;
}

template <typename T>
T lookup_name(const std::optional<T>& id, const std::string& what, const std::string& name) {
  if (!id) throw StructuralError("unknown " + what + " '" + name + "' in certificate");
  return *id;
}

WitnessNode node_from(const Model& m, const json& j) {
  if (!j.is_object()) throw StructuralError("certificate node must be an object");
  WitnessNode n;
  const std::string state = j.at("state").get<std::string>();
  n.state = lookup_name(m.find_state(state), "state", state);
  n.avail = bound_from(j.at("avail"));
  if (!j.at("action").is_null()) {
    JointAction act;
    std::vector<std::pair<AgentId, ActionId>> pairs;
    for (const auto& [agent, action] : j.at("action").items()) {
      const std::string name = action.get<std::string>();
      pairs.emplace_back(lookup_name(m.find_agent(agent), "agent", agent),
                         lookup_name(m.find_action(name), "action", name));
    }
    std::sort(pairs.begin(), pairs.end());
    for (const auto& [a, x] : pairs) {
      act.coalition.push_back(a);
      act.choices.push_back(x);
    }
    n.action = std::move(act);
  }
  if (!j.at("cost").is_null()) n.cost = CostVec(j.at("cost").get<std::vector<std::int64_t>>());
  if (!j.at("leaf").is_null()) {
    const std::string leaf = j.at("leaf").get<std::string>();
    if (leaf == "psi") {
      n.leaf = LeafKind::psi;
    } else if (leaf == "all-infinity") {
      n.leaf = LeafKind::all_infinity;
    } else if (leaf == "loopback") {
      n.leaf = LeafKind::loopback;
      n.ancestor = j.at("ancestor").get<std::size_t>();
    } else {
      throw StructuralError("unknown leaf kind '" + leaf + "'");
    }
  }
  const json pumped = j.value("pumped", json::array());
  for (const auto& p : pumped) {
    const std::string res = p.at("resource").get<std::string>();
    n.pumped.push_back({lookup_name(m.find_resource(res), "resource", res),
                        p.at("ancestor").get<std::size_t>()});
  }
  for (const auto& c : j.at("children")) n.children.push_back(node_from(m, c));
  return n;
}

}  // namespace

std::string witness_to_json(const Model& m, const Witness& w) {
  json j;
  j["format_version"] = 1;
  j["kind"] = w.kind == WitnessKind::until ? "until" : "box";
  j["formula"] = to_string(w.formula);
  j["semantics"] = std::string(to_string(w.semantics));
  j["coalition"] = w.formula.coalition();
  j["bound"] = w.formula.bound() ? bound_json(*w.formula.bound()) : json(nullptr);
  j["concretized"] = w.concretized;
  j["root"] = node_json(m, w.root);
  return j.dump(2);
}

Witness witness_from_json(const Model& m, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw StructuralError(std::string("certificate is not valid JSON: ") + e.what());
  }
  try {
    if (j.at("format_version").get<int>() != 1) {
      throw StructuralError("unsupported certificate format_version");
    }
    Witness w;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind != "until" && kind != "box") throw StructuralError("unknown certificate kind");
    w.kind = kind == "until" ? WitnessKind::until : WitnessKind::box;
    w.formula = bind_to_model(parse_formula(j.at("formula").get<std::string>()), m);
    auto sem = parse_semantics(j.at("semantics").get<std::string>());
    if (!sem) throw StructuralError("unknown semantics in certificate");
    w.semantics = *sem;
    w.concretized = j.at("concretized").get<bool>();
    w.root = node_from(m, j.at("root"));
    return w;
  } catch (const json::exception& e) {
    throw StructuralError(std::string("malformed certificate: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Concretization

std::uint64_t repetitions_needed(std::uint64_t target, std::uint64_t surplus, std::uint64_t gain) {
  if (gain == 0) throw DomainError("a pumping loop must gain at least one unit");
  if (surplus >= target) return 0;
  return (target - surplus + gain - 1) / gain;
}

namespace {

struct OperandLabels {
  StateSet phi, psi, atl;
};

OperandLabels operand_labels(const Model& m, const Formula& f, Semantics mode) {
  CheckOptions opts;
  opts.semantics = mode;
  OperandLabels out;
  out.phi = model_check(m, f.lhs(), opts).satisfying();
  if (f.kind() == FormulaKind::Until) {
    out.psi = model_check(m, f.rhs(), opts).satisfying();
    out.atl = model_check(m, infinite_version(f), opts).satisfying();
  }
  return out;
}

const Move* find_move(const MoveTable& table, StateId s, const JointAction& action) {
  for (const Move& mv : table.moves(s)) {
    if (mv.action == action) return &mv;
  }
  return nullptr;
}

/// Classical attractor strategy for phi U psi: rank 0 is psi, a state of
/// rank k plays the first move whose outcomes all have smaller rank.
class Attractor {
 public:
  Attractor(const MoveTable& table, const OperandLabels& labels, Semantics mode, std::size_t r) {
    const std::size_t n = table.model().num_states();
    choice_.assign(n, nullptr);
    need_.assign(n, zero_cost(r));
    ranked_ = labels.psi;
    const BoundVec unlimited = infinite_bound(r);
    while (true) {
      std::vector<std::pair<StateId, const Move*>> layer;
      for (StateId s = 0; s < n; ++s) {
        if (ranked_.contains(s) || !labels.phi.contains(s)) continue;
        for (const Move& mv : table.moves(s)) {
          if (!admissible(mv, unlimited, mode) || mv.outcomes.empty()) continue;
          if (std::all_of(mv.outcomes.begin(), mv.outcomes.end(),
                          [this](StateId t) { return ranked_.contains(t); })) {
            layer.emplace_back(s, &mv);
            break;
          }
        }
      }
      if (layer.empty()) break;
      for (const auto& [s, mv] : layer) {
        choice_[s] = mv;
        CostVec worst = zero_cost(r);
        for (StateId t : mv->outcomes) {
          for (std::size_t i = 0; i < r; ++i) worst[i] = std::max(worst[i], need_[t][i]);
        }
        const CostVec& filter = mode == Semantics::ral_finite ? mv->consumption : mv->cost;
        const CostVec through = add(mv->cost, worst);
        for (std::size_t i = 0; i < r; ++i) {
          need_[s][i] = std::max({std::int64_t{0}, filter[i], through[i]});
        }
      }
      for (const auto& [s, mv] : layer) ranked_.insert(s);
    }
  }

  bool contains(StateId s) const { return ranked_.contains(s); }

  bool affordable_from(StateId s, const BoundVec& v) const {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_finite() && v[i].value() < static_cast<std::uint64_t>(need_[s][i])) return false;
    }
    return true;
  }

  WitnessNode build(StateId s, const BoundVec& v) const {
    WitnessNode node;
    node.state = s;
    node.avail = v;
    const Move* mv = choice_[s];
    if (mv == nullptr) {
      node.leaf = LeafKind::psi;
      return node;
    }
    node.action = mv->action;
    node.cost = mv->cost;
    const BoundVec next = *bound_minus_cost(v, mv->cost);
    for (StateId t : mv->outcomes) node.children.push_back(build(t, next));
    return node;
  }

 private:
  StateSet ranked_;
  std::vector<const Move*> choice_;
  std::vector<CostVec> need_;
};

class Expander {
 public:
  Expander(const Model& m, const Witness& w)
      : table_(m, m.coalition(w.formula.coalition())),
        labels_(operand_labels(m, w.formula, w.semantics)),
        attractor_(table_, labels_, w.semantics, m.num_resources()),
        mode_(w.semantics) {
    index(&w.root, {});
  }

  std::optional<WitnessNode> run(const WitnessNode& root, const BoundVec& bound) {
    for (std::size_t jumps = 0; jumps <= kMaxJumps; ++jumps) {
      if (auto found = solve(&root, bound, jumps)) return found;
    }
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kMaxJumps = 64;
  static constexpr std::uint64_t kWorkBudget = 20'000'000;

  void index(const WitnessNode* n, std::vector<const WitnessNode*> path) {
    for (const auto& p : n->pumped) {
      if (p.ancestor >= path.size() || path[p.ancestor]->state != n->state) {
        throw StructuralError("pumping record does not point to a same-state ancestor");
      }
    }
    if (n->leaf == LeafKind::none && (!n->action || n->children.empty())) {
      throw StructuralError("inner certificate node without action or children");
    }
    path.push_back(n);
    paths_[n] = path;
    for (const auto& c : n->children) index(&c, path);
  }

  std::optional<WitnessNode> solve(const WitnessNode* n, const BoundVec& v, std::size_t jumps) {
    if (++work_ > kWorkBudget) throw Error("witness expansion exceeded its work budget");
    auto key = std::make_tuple(n, v.values(), jumps);
    if (failed_.count(key)) return std::nullopt;

    if (n->leaf == LeafKind::psi) {
      WitnessNode leaf;
      leaf.state = n->state;
      leaf.avail = v;
      leaf.leaf = LeafKind::psi;
      return leaf;
    }
    if (n->leaf == LeafKind::all_infinity) {
      if (!attractor_.contains(n->state)) {
        throw StructuralError("all-infinity leaf outside the classical winning region");
      }
      if (attractor_.affordable_from(n->state, v)) return attractor_.build(n->state, v);
    } else if (n->leaf == LeafKind::none) {
      if (auto built = proceed(n, v, jumps)) return built;
    } else {
      throw StructuralError("loopback leaf in an until certificate");
    }

    if (jumps > 0) {
      const auto& path = paths_.at(n);
      std::vector<std::size_t> targets;
      for (const auto& p : n->pumped) targets.push_back(p.ancestor);
      std::sort(targets.rbegin(), targets.rend());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      for (std::size_t a : targets) {
        if (auto built = solve(path[a], v, jumps - 1)) return built;
      }
    }
    failed_.insert(std::move(key));
    return std::nullopt;
  }

  std::optional<WitnessNode> proceed(const WitnessNode* n, const BoundVec& v, std::size_t jumps) {
    const Move* mv = find_move(table_, n->state, *n->action);
    if (mv == nullptr) throw StructuralError("certificate action not available at its state");
    if (!admissible(*mv, v, mode_)) return std::nullopt;
    if (mv->outcomes.size() != n->children.size()) {
      throw StructuralError("certificate children do not match the outcomes");
    }
    const BoundVec next = *bound_minus_cost(v, mv->cost);
    WitnessNode out;
    out.state = n->state;
    out.avail = v;
    out.action = mv->action;
    out.cost = mv->cost;
    for (const auto& c : n->children) {
      auto built = solve(&c, next, jumps);
      if (!built) return std::nullopt;
      out.children.push_back(std::move(*built));
    }
    return out;
  }

  MoveTable table_;
  OperandLabels labels_;
  Attractor attractor_;
  Semantics mode_;
  std::unordered_map<const WitnessNode*, std::vector<const WitnessNode*>> paths_;
  std::set<std::tuple<const WitnessNode*, std::vector<Amount>, std::size_t>> failed_;
  std::uint64_t work_ = 0;
};

}  // namespace

Witness concretize(const Model& m, const Witness& w) {
  Witness out = w;
  out.concretized = true;
  if (w.kind == WitnessKind::box || w.concretized) return out;
  if (!w.formula.bound()) throw StructuralError("certificate formula has no bound");
  Expander expander(m, w);
  auto root = expander.run(w.root, *w.formula.bound());
  if (!root) throw Error("pumped loops could not be expanded into a finite strategy");
  out.root = std::move(*root);
  return out;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

class Validator {
 public:
  Validator(const Model& m, const Witness& w)
      : m_(m), w_(w), table_(m, m.coalition(w.formula.coalition())) {
    CheckOptions opts;
    opts.semantics = w.semantics;
    phi_ = model_check(m, w.formula.lhs(), opts).satisfying();
    if (w.kind == WitnessKind::until) psi_ = model_check(m, w.formula.rhs(), opts).satisfying();
  }

  std::vector<std::string> run(StateId initial) {
    if (w_.kind == WitnessKind::until && !w_.concretized) {
      problems_.push_back("until certificates must be concretized before validation");
      return problems_;
    }
    const BoundVec& b = *w_.formula.bound();
    if (w_.root.state != initial) problems_.push_back("root is not the initial state");
    std::vector<PathEntry> path;
    visit(w_.root, initial, b, path);
    return problems_;
  }

 private:
  struct PathEntry {
    StateId state;
    BoundVec avail;
  };

  void problem(const WitnessNode& n, const std::string& what) {
    const std::string where =
        n.state < m_.num_states() ? m_.states()[n.state] : "#" + std::to_string(n.state);
    problems_.push_back("at " + where + ": " + what);
  }

  void visit(const WitnessNode& n, StateId expected_state, const BoundVec& expected_avail,
             std::vector<PathEntry>& path) {
    if (n.state != expected_state) {
      problem(n, "state differs from the outcome it should cover");
      return;
    }
    if (n.avail != expected_avail) {
      problem(n, "availability " + to_string(n.avail) + " should be " + to_string(expected_avail));
      return;
    }
    if (!n.pumped.empty()) problem(n, "pumping records in a finite certificate");

    if (n.leaf == LeafKind::psi) {
      if (w_.kind != WitnessKind::until) problem(n, "psi leaf in a box certificate");
      else if (!psi_.contains(n.state)) problem(n, "psi leaf outside [psi]");
      if (n.action || !n.children.empty()) problem(n, "leaf with an action");
      return;
    }
    if (n.leaf == LeafKind::all_infinity) {
      problem(n, "all-infinity leaf in a finite certificate");
      return;
    }
    if (!phi_.contains(n.state)) problem(n, "node outside [phi]");
    if (n.leaf == LeafKind::loopback) {
      if (w_.kind != WitnessKind::box) {
        problem(n, "loopback leaf in an until certificate");
      } else if (n.ancestor >= path.size()) {
        problem(n, "loopback ancestor index out of range");
      } else if (path[n.ancestor].state != n.state) {
        problem(n, "loopback ancestor has another state");
      } else if (!leq(path[n.ancestor].avail, n.avail)) {
        problem(n, "loopback ancestor has more resources than the leaf");
      }
      if (n.action || !n.children.empty()) problem(n, "leaf with an action");
      return;
    }

    if (!n.action) {
      problem(n, "inner node without action");
      return;
    }
    const Move* mv = find_move(table_, n.state, *n.action);
    if (mv == nullptr) {
      problem(n, "action is not a joint action of the coalition at this state");
      return;
    }
    if (!n.cost || *n.cost != mv->cost) {
      problem(n, "recorded cost differs from the model");
      return;
    }
    if (!admissible(*mv, n.avail, w_.semantics)) {
      problem(n, "action not affordable with " + to_string(n.avail));
      return;
    }
    if (mv->outcomes.empty()) {
      problem(n, "action has no outcome");
      return;
    }
    if (n.children.size() != mv->outcomes.size()) {
      problem(n, "children do not cover the outcomes exactly");
      return;
    }
    const BoundVec next = *bound_minus_cost(n.avail, mv->cost);
    path.push_back({n.state, n.avail});
    for (std::size_t k = 0; k < n.children.size(); ++k) {
      visit(n.children[k], mv->outcomes[k], next, path);
    }
    path.pop_back();
  }

  const Model& m_;
  const Witness& w_;
  MoveTable table_;
  StateSet phi_, psi_;
  std::vector<std::string> problems_;
};

}  // namespace

std::vector<std::string> validate_witness(const Model& m, const Witness& w, StateId initial) {
  const bool until = w.formula.kind() == FormulaKind::Until;
  const bool box = w.formula.kind() == FormulaKind::Always;
  if ((w.kind == WitnessKind::until && !until) || (w.kind == WitnessKind::box && !box)) {
    return {"certificate kind does not match its formula"};
  }
  if (!w.formula.bound()) return {"certificate formula has no bound"};
  if (w.formula.bound()->size() != m.num_resources()) return {"bound has the wrong arity"};
  if (initial >= m.num_states()) return {"initial state out of range"};
  return Validator(m, w).run(initial);
}

// ---------------------------------------------------------------------------
// Mutations

namespace {

enum Mutation : std::size_t {
  kAvailPlusOne,
  kCostPlusOne,
  kRenameState,
  kDropChild,
  kBogusAction,
  kLeafKind,
  kBadAncestor,
  kBoundChange,
  kSwapChildren,
  kExtraChild,
  kCoalition,
  kMutationCount
};

void preorder(WitnessNode& n, std::vector<WitnessNode*>& out) {
  out.push_back(&n);
  for (auto& c : n.children) preorder(c, out);
}

}  // namespace

std::size_t mutation_kinds() { return kMutationCount; }

std::optional<Witness> mutate_witness(const Model& m, const Witness& w, std::size_t index) {
  Witness out = w;
  std::vector<WitnessNode*> nodes;
  preorder(out.root, nodes);
  const std::size_t kind = index % kMutationCount;
  const std::size_t pick = index / kMutationCount;

  auto choose = [&](auto pred) -> WitnessNode* {
    std::vector<WitnessNode*> eligible;
    for (auto* n : nodes) {
      if (pred(*n)) eligible.push_back(n);
    }
    if (eligible.empty()) return nullptr;
    return eligible[pick % eligible.size()];
  };
  auto first_finite = [](const auto& vec) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < vec.size(); ++i) {
      if constexpr (std::is_same_v<std::decay_t<decltype(vec[i])>, Amount>) {
        if (vec[i].is_finite()) return i;
      } else {
        return i;
      }
    }
    return std::nullopt;
  };

  switch (kind) {
    case kAvailPlusOne: {
      auto* n = choose([&](const WitnessNode& x) { return first_finite(x.avail).has_value(); });
      if (!n) return std::nullopt;
      const auto i = *first_finite(n->avail);
      n->avail[i] = Amount(n->avail[i].value() + 1);
      return out;
    }
    case kCostPlusOne: {
      auto* n = choose([](const WitnessNode& x) { return x.cost && !x.cost->empty(); });
      if (!n) return std::nullopt;
      (*n->cost)[0] += 1;
      return out;
    }
    case kRenameState: {
      if (m.num_states() < 2) return std::nullopt;
      auto* n = choose([](const WitnessNode&) { return true; });
      n->state = (n->state + 1) % m.num_states();
      return out;
    }
    case kDropChild: {
      auto* n = choose([](const WitnessNode& x) { return !x.children.empty(); });
      if (!n) return std::nullopt;
      n->children.pop_back();
      return out;
    }
    case kBogusAction: {
      auto* n = choose([](const WitnessNode& x) { return x.action && !x.action->choices.empty(); });
      if (!n) return std::nullopt;
      n->action->choices[0] = m.num_actions() + 7;
      return out;
    }
    case kLeafKind: {
      auto* n = choose([](const WitnessNode& x) { return x.leaf != LeafKind::none; });
      if (!n) return std::nullopt;
      n->leaf = n->leaf == LeafKind::psi ? LeafKind::all_infinity : LeafKind::psi;
      return out;
    }
    case kBadAncestor: {
      auto* n = choose([](const WitnessNode& x) { return x.leaf == LeafKind::loopback; });
      if (n) {
        n->ancestor += 1000;
        return out;
      }
      n = choose([](const WitnessNode& x) { return x.leaf == LeafKind::psi; });
      if (!n) return std::nullopt;
      n->leaf = LeafKind::loopback;
      n->ancestor = 0;
      return out;
    }
    case kBoundChange: {
      const auto& b = *w.formula.bound();
      auto i = first_finite(b);
      if (!i) return std::nullopt;
      BoundVec nb = b;
      nb[*i] = Amount(nb[*i].value() + 1);
      out.formula = w.formula.with_bound(nb);
      return out;
    }
    case kSwapChildren: {
      auto* n = choose([](const WitnessNode& x) {
        return x.children.size() >= 2 && x.children.front().state != x.children.back().state;
      });
      if (!n) return std::nullopt;
      std::swap(n->children.front(), n->children.back());
      return out;
    }
    case kExtraChild: {
      auto* n = choose([](const WitnessNode& x) { return !x.children.empty(); });
      if (!n) return std::nullopt;
      n->children.push_back(n->children.front());
      return out;
    }
    case kCoalition: {
      std::vector<std::string> names = w.formula.coalition();
      if (names.empty()) {
        names.push_back(m.agents().front());
      } else {
        names.erase(names.begin());
      }
      const Formula& f = w.formula;
      out.formula = f.kind() == FormulaKind::Until
                        ? Formula::until(names, f.bound(), f.lhs(), f.rhs())
                        : Formula::always(names, f.bound(), f.lhs());
      // A coalition change only corrupts certificates that contain a move.
      if (!choose([](const WitnessNode& x) { return x.action.has_value(); })) return std::nullopt;
      return out;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace rbatl
