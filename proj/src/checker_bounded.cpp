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

#include "rbatl/checker_bounded.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

#include "rbatl/errors.hpp"

namespace rbatl {

void SearchStats::merge(const SearchStats& other) {
  nodes += other.nodes;
  max_depth = std::max(max_depth, other.max_depth);
}

namespace {

struct PathEntry {
  StateId state;
  BoundVec avail;
};

class TreeSearch {
 public:
  TreeSearch(const Model& m, const Formula& f, const Labelling& labels, const SearchOptions& opts)
      : table_(m, m.coalition(f.coalition())),
        opts_(opts),
        phi_(label_of(labels, f.lhs())),
        psi_(f.kind() == FormulaKind::Until ? &label_of(labels, f.rhs()) : nullptr),
        atl_(opts.atl_prefilter ? &label_of(labels, infinite_version(f)) : nullptr) {
    if (!f.bound()) throw ContractViolation("search on an unbound formula");
    if (atl_ != nullptr && psi_ != nullptr) compute_floors();
  }

  bool until(StateId s, BoundVec e, WitnessNode* out) {
    enter();
    const bool ok = until_visit(s, std::move(e), out);
    return ok;
  }

  bool box(StateId s, BoundVec e, WitnessNode* out) {
    enter();
    return box_visit(s, std::move(e), out);
  }

  const SearchStats& stats() const { return stats_; }

 private:
  void enter() {
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, path_.size() + 1);
  }

  bool until_visit(StateId s, BoundVec e, WitnessNode* out) {
    if (atl_ != nullptr) {
      if (!atl_->contains(s)) return false;
    } else if (!phi_.contains(s) && !psi_->contains(s)) {
      return false;
    }
    for (const auto& [r, need] : floors_) {
      if (e[r].is_finite() && e[r].value() < need[s]) return false;
    }
    for (const auto& anc : path_) {
      if (anc.state == s && leq(e, anc.avail)) return false;
    }

    std::vector<PumpRecord> pumped;
    for (ResourceId r = 0; r < e.size(); ++r) {
      for (std::size_t i = path_.size(); i-- > 0;) {
        const auto& anc = path_[i];
        if (anc.state == s && leq(anc.avail, e) && anc.avail[r] < e[r]) {
          pumped.push_back({r, i});
          break;
        }
      }
    }
    for (const auto& p : pumped) e[p.resource] = Amount::infinity();

    auto finish_leaf = [&](LeafKind kind) {
      if (out != nullptr) {
        out->state = s;
        out->avail = e;
        out->leaf = kind;
        out->pumped = pumped;
      }
      return true;
    };
    if (psi_->contains(s)) return finish_leaf(LeafKind::psi);
    if (atl_ != nullptr && all_infinite(e)) return finish_leaf(LeafKind::all_infinity);

    return expand(s, std::move(e), std::move(pumped), out, &TreeSearch::until_child);
  }

  bool box_visit(StateId s, BoundVec e, WitnessNode* out) {
    if (atl_ != nullptr ? !atl_->contains(s) : !phi_.contains(s)) return false;
    for (const auto& anc : path_) {
      if (anc.state == s && strictly_less(e, anc.avail)) return false;
    }
    for (std::size_t i = path_.size(); i-- > 0;) {
      const auto& anc = path_[i];
      if (anc.state == s && leq(anc.avail, e)) {
        if (out != nullptr) {
          out->state = s;
          out->avail = e;
          out->leaf = LeafKind::loopback;
          out->ancestor = i;
        }
        return true;
      }
    }
    return expand(s, std::move(e), {}, out, &TreeSearch::box_child);
  }

  bool until_child(StateId s, BoundVec e, WitnessNode* out) {
    enter();
    return until_visit(s, std::move(e), out);
  }

  bool box_child(StateId s, BoundVec e, WitnessNode* out) {
    enter();
    return box_visit(s, std::move(e), out);
  }

  using ChildFn = bool (TreeSearch::*)(StateId, BoundVec, WitnessNode*);

  bool expand(StateId s, BoundVec e, std::vector<PumpRecord> pumped, WitnessNode* out,
              ChildFn child) {
    path_.push_back({s, e});
    bool found = false;
    for (const Move& mv : table_.moves(s)) {
      if (!admissible(mv, e, opts_.semantics)) continue;
      // Empty-outcome moves only exist in non-total models, where they would
      // succeed vacuously.
      if (mv.outcomes.empty()) continue;
      const BoundVec next = *bound_minus_cost(e, mv.cost);
      std::vector<WitnessNode> kids;
      if (out != nullptr) kids.resize(mv.outcomes.size());
      bool all = true;
      for (std::size_t k = 0; k < mv.outcomes.size(); ++k) {
        if (!(this->*child)(mv.outcomes[k], next, out != nullptr ? &kids[k] : nullptr)) {
          all = false;
          break;
        }
      }
      if (all) {
        if (out != nullptr) {
          out->state = s;
          out->avail = e;
          out->action = mv.action;
          out->cost = mv.cost;
          out->leaf = LeafKind::none;
          out->pumped = std::move(pumped);
          out->children = std::move(kids);
        }
        found = true;
        break;
      }
    }
    path_.pop_back();
    return found;
  }

  // A resource that no action produces never grows along a path, and a
  // loop that is pumped costs none of it. Its cheapest route to psi is
  // therefore a hard floor: a node holding less cannot succeed, and the
  // search would reach the same false answer after exploring the subtree.
  void compute_floors() {
    const Model& m = table_.model();
    constexpr std::uint64_t kUnreachable = std::numeric_limits<std::uint64_t>::max();
    for (ResourceId r = 0; r < m.num_resources(); ++r) {
      bool produced = false;
      for (StateId s = 0; s < m.num_states() && !produced; ++s) {
        for (AgentId a = 0; a < m.num_agents() && !produced; ++a) {
          for (const auto& opt : m.menu(s, a)) produced = produced || opt.cost[r] < 0;
        }
      }
      if (produced) continue;
      // Backward Dijkstra from psi over phi-states, letting the coalition
      // pick the outcome.
      std::vector<std::vector<std::pair<StateId, std::uint64_t>>> into(m.num_states());
      for (StateId s = 0; s < m.num_states(); ++s) {
        if (!phi_.contains(s) || psi_->contains(s)) continue;
        for (const Move& mv : table_.moves(s)) {
          for (StateId t : mv.outcomes) {
            into[t].emplace_back(s, static_cast<std::uint64_t>(mv.cost[r]));
          }
        }
      }
      std::vector<std::uint64_t> need(m.num_states(), kUnreachable);
      using Item = std::pair<std::uint64_t, StateId>;
      std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
      for (StateId s : psi_->members()) {
        need[s] = 0;
        queue.emplace(0, s);
      }
      while (!queue.empty()) {
        const auto [d, t] = queue.top();
        queue.pop();
        if (d != need[t]) continue;
        for (const auto& [s, w] : into[t]) {
          if (d + w < need[s]) {
            need[s] = d + w;
            queue.emplace(need[s], s);
          }
        }
      }
      if (std::any_of(need.begin(), need.end(), [](std::uint64_t x) { return x > 0; })) {
        floors_.emplace_back(r, std::move(need));
      }
    }
  }

  MoveTable table_;
  SearchOptions opts_;
  const StateSet& phi_;
  const StateSet* psi_;
  const StateSet* atl_;
  std::vector<PathEntry> path_;
  std::vector<std::pair<ResourceId, std::vector<std::uint64_t>>> floors_;
  SearchStats stats_;
};

SearchOutcome run_search(const Model& m, StateId s, const Formula& f, const Labelling& labels,
                         const SearchOptions& opts, FormulaKind expected) {
  if (f.kind() != expected) {
    throw ContractViolation("search called with '" + to_string(f) + "'");
  }
  if (s >= m.num_states()) throw DomainError("state index out of range");
  TreeSearch search(m, f, labels, opts);
  SearchOutcome result;
  WitnessNode root;
  WitnessNode* out = opts.want_witness ? &root : nullptr;
  result.holds = expected == FormulaKind::Until ? search.until(s, *f.bound(), out)
                                                : search.box(s, *f.bound(), out);
  result.stats = search.stats();
  if (result.holds && opts.want_witness) {
    Witness w;
    w.kind = expected == FormulaKind::Until ? WitnessKind::until : WitnessKind::box;
    w.formula = f;
    w.semantics = opts.semantics;
    w.root = std::move(root);
    result.witness = std::move(w);
  }
  return result;
}

}  // namespace

SearchOutcome until_strategy(const Model& m, StateId s, const Formula& f,
                             const Labelling& labels, const SearchOptions& opts) {
  return run_search(m, s, f, labels, opts, FormulaKind::Until);
}

SearchOutcome box_strategy(const Model& m, StateId s, const Formula& f,
                           const Labelling& labels, const SearchOptions& opts) {
  return run_search(m, s, f, labels, opts, FormulaKind::Always);
}

Checker::Checker(const Model& m, CheckOptions opts) : model_(&m), opts_(opts) {}

std::optional<bool> Checker::cached(const Formula& f, StateId s) const {
  auto it = cache_.find(f.with_bound(std::nullopt));
  if (it == cache_.end()) return std::nullopt;
  for (const auto& entry : it->second[s]) {
    if (entry.holds && leq(entry.bound, *f.bound())) return true;
    if (!entry.holds && leq(*f.bound(), entry.bound)) return false;
  }
  return std::nullopt;
}

void Checker::remember(const Formula& f, StateId s, bool holds) {
  auto& per_state = cache_[f.with_bound(std::nullopt)];
  per_state.resize(model_->num_states());
  per_state[s].push_back({*f.bound(), holds});
}

CheckResult Checker::check(const Formula& phi0) {
  const Model& m = *model_;
  CheckResult result;
  result.root = bind_to_model(phi0, m);
  for (const Formula& f : sub_ordered(result.root)) {
    StateSet set;
    if (!f.is_modality() || !f.is_resource_bounded()) {
      set = atl_label(m, f, result.labels, opts_.semantics);
    } else if (f.kind() == FormulaKind::Next) {
      set = pre(m, m.coalition(f.coalition()), label_of(result.labels, f.lhs()), *f.bound(),
                opts_.semantics);
    } else {
      set = StateSet(m.num_states());
      SearchOptions so;
      so.semantics = opts_.semantics;
      for (StateId s = 0; s < m.num_states(); ++s) {
        if (opts_.upward_cache) {
          if (auto hit = cached(f, s)) {
            if (*hit) set.insert(s);
            continue;
          }
        }
        const SearchOutcome r = f.kind() == FormulaKind::Until
                                    ? until_strategy(m, s, f, result.labels, so)
                                    : box_strategy(m, s, f, result.labels, so);
        result.stats.merge(r.stats);
        if (r.holds) set.insert(s);
        if (opts_.upward_cache) remember(f, s, r.holds);
      }
    }
    result.labels.emplace(f, std::move(set));
  }
  return result;
}

std::optional<Witness> Checker::witness(const CheckResult& result, StateId s) const {
  return find_witness(*model_, result.root, result.labels, s, opts_.semantics);
}

std::optional<Witness> find_witness(const Model& m, const Formula& f, const Labelling& labels,
                                    StateId s, Semantics mode) {
  if (f.kind() != FormulaKind::Until && f.kind() != FormulaKind::Always) return std::nullopt;
  SearchOptions so;
  so.semantics = mode;
  so.want_witness = true;
  SearchOutcome r = f.kind() == FormulaKind::Until ? until_strategy(m, s, f, labels, so)
                                                   : box_strategy(m, s, f, labels, so);
  return std::move(r.witness);
}

CheckResult model_check(const Model& m, const Formula& phi0, const CheckOptions& opts) {
  return Checker(m, opts).check(phi0);
}

}  // namespace rbatl
