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

#include "rbatl/petri.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rbatl/errors.hpp"

namespace rbatl {

using nlohmann::json;

void PetriNet::check() const {
  std::set<std::string> names(places.begin(), places.end());
  if (names.size() != places.size()) throw ValidationError("duplicate place name");
  if (initial.size() != places.size()) {
    throw ValidationError("initial marking has " + std::to_string(initial.size()) +
                          " entries for " + std::to_string(places.size()) + " places");
  }
  std::set<std::string> tnames;
  for (const auto& t : transitions) {
    if (!tnames.insert(t.name).second) {
      throw ValidationError("duplicate transition '" + t.name + "'");
    }
    if (t.pre.size() != places.size() || t.post.size() != places.size()) {
      throw ValidationError("arc weights of '" + t.name + "' do not match the places");
    }
  }
}

bool enabled(const PetriNet& net, const Marking& m, std::size_t t) {
  const auto& tr = net.transitions.at(t);
  for (std::size_t p = 0; p < net.places.size(); ++p) {
    if (tr.pre[p] > m[p]) return false;
  }
  return true;
}

Marking fire(const PetriNet& net, const Marking& m, std::size_t t) {
  if (!enabled(net, m, t)) {
    throw DomainError("transition '" + net.transitions.at(t).name + "' is not enabled at " +
                      to_string(m));
  }
  const auto& tr = net.transitions[t];
  Marking out = m;
  for (std::size_t p = 0; p < net.places.size(); ++p) out[p] = m[p] - tr.pre[p] + tr.post[p];
  return out;
}

Reduction reduce(const PetriNet& net, const Marking& target) {
  net.check();
  if (target.size() != net.places.size()) {
    throw ValidationError("target marking does not match the places");
  }
  const std::size_t r = net.places.size();
  const std::string agent = "1";
  ModelBuilder b;
  b.agent(agent);
  for (const auto& p : net.places) b.resource(p);
  b.state("s0");
  for (const auto& t : net.transitions) b.state("tr:" + t.name);
  b.state("s");
  b.state("e");
  b.proposition("p", {"s"});

  auto signed_cost = [r](const std::vector<std::uint64_t>& w, bool negate) {
    CostVec c(r);
    for (std::size_t i = 0; i < r; ++i) {
      const auto v = static_cast<std::int64_t>(w[i]);
      c[i] = negate ? -v : v;
    }
    return c;
  };

  b.action("s0", agent, "idle", zero_cost(r));
  b.action("s0", agent, "good", signed_cost(target.values(), false));
  b.transition("s0", {"idle"}, "e");
  b.transition("s0", {"good"}, "s");
  for (const auto& t : net.transitions) {
    const std::string state = "tr:" + t.name;
    b.action("s0", agent, "pre:" + t.name, signed_cost(t.pre, false));
    b.transition("s0", {"pre:" + t.name}, state);
    b.action(state, agent, "idle", zero_cost(r));
    b.action(state, agent, "post:" + t.name, signed_cost(t.post, true));
    b.transition(state, {"idle"}, "e");
    b.transition(state, {"post:" + t.name}, "s0");
  }
  for (const char* sink : {"s", "e"}) {
    b.action(sink, agent, "idle", zero_cost(r));
  }
  b.transition("s", {"idle"}, "s");
  b.transition("e", {"idle"}, "e");

  Reduction out{b.build(), Formula()};
  out.formula = Formula::until({agent}, to_bound(net.initial), Formula::truth(), Formula::prop("p"));
  return out;
}

// ---------------------------------------------------------------------------
// Karp-Miller

namespace {

// Extended marking; Amount::infinity() plays the role of omega.
using OmegaMarking = std::vector<Amount>;

bool covers(const OmegaMarking& m, const Marking& target) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < Amount(target[i])) return false;
  }
  return true;
}

bool dominated_by(const OmegaMarking& small, const OmegaMarking& big) {
  for (std::size_t i = 0; i < small.size(); ++i) {
    if (big[i] < small[i]) return false;
  }
  return true;
}

class KarpMiller {
 public:
  KarpMiller(const PetriNet& net, const Marking& target) : net_(net), target_(target) {}

  bool explore(const OmegaMarking& m) {
    if (covers(m, target_)) return true;
    for (const auto& anc : path_) {
      if (anc == m) return false;
    }
    path_.push_back(m);
    bool found = false;
    for (std::size_t t = 0; t < net_.transitions.size() && !found; ++t) {
      const auto& tr = net_.transitions[t];
      bool ok = true;
      for (std::size_t p = 0; p < m.size(); ++p) {
        if (m[p] < Amount(tr.pre[p])) ok = false;
      }
      if (!ok) continue;
      OmegaMarking next(m.size());
      for (std::size_t p = 0; p < m.size(); ++p) {
        next[p] = m[p].is_infinite() ? Amount::infinity()
                                     : Amount(m[p].value() - tr.pre[p] + tr.post[p]);
      }
      for (const auto& anc : path_) {
        if (anc != next && dominated_by(anc, next)) {
          for (std::size_t p = 0; p < next.size(); ++p) {
            if (anc[p] < next[p]) next[p] = Amount::infinity();
          }
        }
      }
      found = explore(next);
    }
    path_.pop_back();
    return found;
  }

 private:
  const PetriNet& net_;
  const Marking& target_;
  std::vector<OmegaMarking> path_;
};

}  // namespace

bool coverable(const PetriNet& net, const Marking& target) {
  net.check();
  if (target.size() != net.places.size()) {
    throw ValidationError("target marking does not match the places");
  }
  OmegaMarking start(net.initial.begin(), net.initial.end());
  return KarpMiller(net, target).explore(start);
}

// ---------------------------------------------------------------------------
// JSON

namespace {

std::vector<std::uint64_t> weights(const json& arcs, const std::vector<std::string>& places,
                                   const std::string& where) {
  std::vector<std::uint64_t> out(places.size(), 0);
  if (arcs.is_null()) return out;
  if (!arcs.is_object()) throw ValidationError(where + " must map places to weights");
  for (const auto& [place, w] : arcs.items()) {
    auto it = std::find(places.begin(), places.end(), place);
    if (it == places.end()) throw ValidationError("unknown place '" + place + "' in " + where);
    if (!w.is_number_unsigned()) throw ValidationError("arc weights are naturals (" + where + ")");
    out[static_cast<std::size_t>(it - places.begin())] = w.get<std::uint64_t>();
  }
  return out;
}

json arcs_json(const std::vector<std::uint64_t>& w, const std::vector<std::string>& places) {
  json out = json::object();
  for (std::size_t p = 0; p < places.size(); ++p) {
    if (w[p] != 0) out[places[p]] = w[p];
  }
  return out;
}

}  // namespace

NetFile net_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("net is not valid JSON: ") + e.what());
  }
  NetFile out;
  try {
    if (j.at("format_version") != 1) throw ValidationError("net format_version must be 1");
    out.net.places = j.at("places").get<std::vector<std::string>>();
    for (const auto& t : j.at("transitions")) {
      PetriTransition tr;
      tr.name = t.at("name").get<std::string>();
      tr.pre = weights(t.value("pre", json()), out.net.places, "pre of '" + tr.name + "'");
      tr.post = weights(t.value("post", json()), out.net.places, "post of '" + tr.name + "'");
      out.net.transitions.push_back(std::move(tr));
    }
    out.net.initial = Marking(weights(j.at("initial"), out.net.places, "initial"));
    if (j.contains("target")) out.target = Marking(weights(j.at("target"), out.net.places, "target"));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed net: ") + e.what());
  }
  out.net.check();
  return out;
}

std::string net_to_json(const PetriNet& net, const std::optional<Marking>& target) {
  json j;
  j["format_version"] = 1;
  j["places"] = net.places;
  json ts = json::array();
  for (const auto& t : net.transitions) {
    ts.push_back({{"name", t.name}, {"pre", arcs_json(t.pre, net.places)},
                  {"post", arcs_json(t.post, net.places)}});
  }
  j["transitions"] = ts;
  j["initial"] = arcs_json(net.initial.values(), net.places);
  if (target) j["target"] = arcs_json(target->values(), net.places);
  return j.dump(2) + "\n";
}

Marking parse_marking(const PetriNet& net, const std::string& text) {
  Marking out(net.places.size(), 0);
  std::vector<std::string> items;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) items.push_back(item);
  const bool named = text.find('=') != std::string::npos;
  if (!named && items.size() != net.places.size()) {
    throw ValidationError("marking '" + text + "' needs " + std::to_string(net.places.size()) +
                          " entries");
  }
  auto number = [&text](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit)) {
      throw ValidationError("marking '" + text + "' has a non-natural entry");
    }
    return static_cast<std::uint64_t>(std::stoull(s));
  };
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!named) {
      out[i] = number(items[i]);
      continue;
    }
    const auto eq = items[i].find('=');
    if (eq == std::string::npos) throw ValidationError("marking entry '" + items[i] + "' lacks '='");
    const std::string place = items[i].substr(0, eq);
    auto it = std::find(net.places.begin(), net.places.end(), place);
    if (it == net.places.end()) throw ValidationError("unknown place '" + place + "'");
    out[static_cast<std::size_t>(it - net.places.begin())] = number(items[i].substr(eq + 1));
  }
  return out;
}

}  // namespace rbatl
