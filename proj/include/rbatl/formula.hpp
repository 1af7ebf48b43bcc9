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

#ifndef RBATL_FORMULA_HPP
#define RBATL_FORMULA_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rbatl/resource.hpp"

namespace rbatl {

class Model;

enum class FormulaKind { True, False, Prop, Not, Or, And, Next, Always, Until };

/// Immutable formula with value semantics; copies share structure.
///
/// Coalition modalities carry agent names (sorted, unique) and an optional
/// bound. A missing bound is the classical, unbounded modality; bind_to_model
/// turns it into the all-infinity vector of the model's arity.
class Formula {
 public:
  Formula();  // true

  static Formula truth();
  static Formula falsity();
  static Formula prop(std::string name);
  static Formula negation(Formula f);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula next(std::vector<std::string> coalition, std::optional<BoundVec> bound,
                      Formula f);
  static Formula always(std::vector<std::string> coalition, std::optional<BoundVec> bound,
                        Formula f);
  static Formula until(std::vector<std::string> coalition, std::optional<BoundVec> bound,
                       Formula lhs, Formula rhs);

  FormulaKind kind() const noexcept;
  const std::string& name() const noexcept;
  const std::vector<std::string>& coalition() const noexcept;
  const std::optional<BoundVec>& bound() const noexcept;
  /// Operand of Not/Next/Always; left operand of Or/And/Until.
  const Formula& lhs() const;
  const Formula& rhs() const;

  bool is_modality() const noexcept;
  /// A modality whose bound has at least one finite component.
  bool is_resource_bounded() const noexcept;
  std::size_t size() const noexcept;

  /// Same modality with another bound.
  Formula with_bound(std::optional<BoundVec> bound) const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  static std::shared_ptr<Node> binary(FormulaKind kind, Formula lhs, Formula rhs);
  std::shared_ptr<const Node> node_;
};

/// Canonical concrete syntax; parse_formula(to_string(f)) == f.
std::string to_string(const Formula& f);

/// Parses the concrete grammar (see docs/grammar.md). Endowment annotations
/// are rejected.
Formula parse_formula(std::string_view text);

/// Like parse_formula, but accepts per-agent endowment rows
/// `<{a:1,0; b:2,1}>` and replaces each by the per-resource sum bound.
Formula parse_formula_with_endowments(std::string_view text);

/// Endowment formula text to the equivalent bound formula text.
std::string translate_endowment(std::string_view text);

/// The all-infinity counterpart of a bounded modality; other formulas are
/// returned unchanged.
Formula infinite_version(const Formula& f);

/// Strict weak order used for labelling: AST size, then the unbounded
/// version before any bounded one, then smaller finite bounds first, then
/// structure.
bool complexity_less(const Formula& a, const Formula& b);

/// Subformula closure plus the unbounded counterpart of every bounded
/// modality, in complexity order; the input is the last element.
std::vector<Formula> sub_ordered(const Formula& root);

/// sub_ordered plus, for every bounded G/U modality, the variants bounded by
/// each second component of split(bound).
std::vector<Formula> sub_plus(const Formula& root);

/// Checks agents, propositions and bound arity against the model and fills
/// in missing bounds with all-infinity. Throws ValidationError.
Formula bind_to_model(const Formula& f, const Model& m);

}  // namespace rbatl

#endif  // RBATL_FORMULA_HPP
