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

// Petri nets, their encoding as a single-agent resource game, and a
// Karp-Miller coverability check that shares no code with the checker.

#ifndef RBATL_PETRI_HPP
#define RBATL_PETRI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rbatl/formula.hpp"
#include "rbatl/model.hpp"

namespace rbatl {

struct PetriTransition {
  std::string name;
  std::vector<std::uint64_t> pre;   // W(p, t) per place
  std::vector<std::uint64_t> post;  // W(t, p) per place
};

struct PetriNet {
  std::vector<std::string> places;
  std::vector<PetriTransition> transitions;
  Marking initial;

  /// Throws ValidationError on arity mismatches or duplicate names.
  void check() const;
};

bool enabled(const PetriNet& net, const Marking& m, std::size_t t);

/// Throws DomainError when t is not enabled at m.
Marking fire(const PetriNet& net, const Marking& m, std::size_t t);

struct Reduction {
  Model model;
  Formula formula;  // <{1}: M> (true U p)
};

/// The game whose initial state s0 satisfies the paired formula iff target
/// is coverable from the initial marking.
Reduction reduce(const PetriNet& net, const Marking& target);

/// Karp-Miller tree with omega acceleration.
bool coverable(const PetriNet& net, const Marking& target);

struct NetFile {
  PetriNet net;
  std::optional<Marking> target;
};

/// Net file format (docs/formats.md); throws ValidationError.
NetFile net_from_json(const std::string& text);
std::string net_to_json(const PetriNet& net, const std::optional<Marking>& target = std::nullopt);

/// Marking from "p1=2,p2=0" or "2,0"; unlisted places are 0 in the named form.
Marking parse_marking(const PetriNet& net, const std::string& text);

}  // namespace rbatl

#endif  // RBATL_PETRI_HPP
