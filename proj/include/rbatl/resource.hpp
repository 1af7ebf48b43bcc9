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

// Resource quantities. Three vector flavours share one container template:
//   CostVec   - signed per-resource cost, positive consumes, negative produces
//   BoundVec  - naturals extended with infinity (bounds, availability)
//   Marking   - plain naturals (Petri net markings)

#ifndef RBATL_RESOURCE_HPP
#define RBATL_RESOURCE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rbatl {

/// A natural number or infinity. Infinity is a distinct alternative, never a
/// reserved integer value.
class Amount {
 public:
  constexpr Amount() noexcept = default;
  constexpr Amount(std::uint64_t n) noexcept : value_(n) {}  // NOLINT

  static constexpr Amount infinity() noexcept {
    Amount a;
    a.infinite_ = true;
    return a;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }

  /// Finite value; throws DomainError on infinity.
  std::uint64_t value() const;

  friend constexpr bool operator==(Amount a, Amount b) noexcept {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Amount a, Amount b) noexcept {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const;

 private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

/// Checked sum; infinity absorbs.
Amount operator+(Amount a, Amount b);

/// a - k for a signed cost k. A negative k adds. Empty when a finite result
/// would drop below zero; infinity absorbs.
std::optional<Amount> subtract_cost(Amount a, std::int64_t k);

template <typename T, typename Tag>
class ResourceVec {
 public:
  using value_type = T;

  ResourceVec() = default;
  explicit ResourceVec(std::size_t n, T fill = T{}) : v_(n, fill) {}
  explicit ResourceVec(std::vector<T> v) : v_(std::move(v)) {}
  ResourceVec(std::initializer_list<T> init) : v_(init) {}

  std::size_t size() const noexcept { return v_.size(); }
  bool empty() const noexcept { return v_.empty(); }
  T& operator[](std::size_t i) { return v_[i]; }
  const T& operator[](std::size_t i) const { return v_[i]; }
  auto begin() const noexcept { return v_.begin(); }
  auto end() const noexcept { return v_.end(); }
  auto begin() noexcept { return v_.begin(); }
  auto end() noexcept { return v_.end(); }
  const std::vector<T>& values() const noexcept { return v_; }

  friend bool operator==(const ResourceVec&, const ResourceVec&) = default;
  // Lexicographic; used only for deterministic container ordering, never as
  // the resource order (see leq).
  friend auto operator<=>(const ResourceVec&, const ResourceVec&) = default;

 private:
  std::vector<T> v_;
};

struct CostTag {};
struct BoundTag {};
struct MarkingTag {};

using CostVec = ResourceVec<std::int64_t, CostTag>;
using BoundVec = ResourceVec<Amount, BoundTag>;
using Marking = ResourceVec<std::uint64_t, MarkingTag>;

/// Pointwise order. Throws StructuralError on length mismatch.
bool leq(const BoundVec& x, const BoundVec& y);
bool leq(const Marking& x, const Marking& y);

/// Pointwise x <= y with at least one strict component.
bool strictly_less(const BoundVec& x, const BoundVec& y);

/// Pointwise e - k. Empty when some finite component underflows.
std::optional<BoundVec> bound_minus_cost(const BoundVec& e, const CostVec& k);

/// True when the cost can be paid from e, i.e. bound_minus_cost is defined.
bool affordable(const BoundVec& e, const CostVec& k);

/// Checked pointwise sum (throws std::overflow_error).
CostVec add(const CostVec& a, const CostVec& b);
BoundVec add(const BoundVec& a, const BoundVec& b);

/// Per-resource positive part of a cost: the consumption component.
CostVec consumption(const CostVec& k);

BoundVec infinite_bound(std::size_t r);
BoundVec zero_bound(std::size_t r);
CostVec zero_cost(std::size_t r);

bool all_infinite(const BoundVec& b);
bool any_negative(const CostVec& k);

/// b with every finite component replaced by zero, infinite ones kept.
BoundVec finite_part_zeroed(const BoundVec& b);

/// Sum of the finite components; the natural "size" of a bound.
std::uint64_t finite_sum(const BoundVec& b);

BoundVec to_bound(const Marking& m);
BoundVec to_bound(const CostVec& k);  // requires k >= 0

std::string to_string(const BoundVec& b);
std::string to_string(const CostVec& k);
std::string to_string(const Marking& m);

}  // namespace rbatl

#endif  // RBATL_RESOURCE_HPP
