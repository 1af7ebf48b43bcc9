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

#include "rbatl/resource.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>
#include <type_traits>

#include "rbatl/errors.hpp"

namespace rbatl {

namespace {

template <typename A, typename B>
void require_same_length(const A& a, const B& b, const char* op) {
  if (a.size() != b.size()) {
    throw StructuralError(std::string(op) + ": length mismatch (" +
                          std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()) + ")");
  }
}

template <typename Vec>
std::string join(const Vec& v) {
  std::ostringstream out;
  out << '<';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    if constexpr (std::is_same_v<typename Vec::value_type, Amount>) {
      out << v[i].to_string();
    } else {
      out << v[i];
    }
  }
  out << '>';
  return out.str();
}

}  // namespace

std::uint64_t Amount::value() const {
  if (infinite_) throw DomainError("value() of an infinite amount");
  return value_;
}

std::string Amount::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(value_);
}

Amount operator+(Amount a, Amount b) {
  if (a.is_infinite() || b.is_infinite()) return Amount::infinity();
  if (a.value() > std::numeric_limits<std::uint64_t>::max() - b.value()) {
    throw std::overflow_error("resource amount overflow");
  }
  return Amount(a.value() + b.value());
}

std::optional<Amount> subtract_cost(Amount a, std::int64_t k) {
  if (a.is_infinite()) return a;
  const std::uint64_t v = a.value();
  if (k >= 0) {
    const auto uk = static_cast<std::uint64_t>(k);
    if (uk > v) return std::nullopt;
    return Amount(v - uk);
  }
  // k == INT64_MIN has no positive counterpart in int64.
  const std::uint64_t gain = static_cast<std::uint64_t>(-(k + 1)) + 1;
  if (v > std::numeric_limits<std::uint64_t>::max() - gain) {
    throw std::overflow_error("resource amount overflow");
  }
  return Amount(v + gain);
}

bool leq(const BoundVec& x, const BoundVec& y) {
  require_same_length(x, y, "leq");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (y[i] < x[i]) return false;
  }
  return true;
}

bool leq(const Marking& x, const Marking& y) {
  require_same_length(x, y, "leq");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > y[i]) return false;
  }
  return true;
}

bool strictly_less(const BoundVec& x, const BoundVec& y) {
  return leq(x, y) && x != y;
}

std::optional<BoundVec> bound_minus_cost(const BoundVec& e, const CostVec& k) {
  require_same_length(e, k, "bound_minus_cost");
  BoundVec out(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    auto v = subtract_cost(e[i], k[i]);
    if (!v) return std::nullopt;
    out[i] = *v;
  }
  return out;
}

bool affordable(const BoundVec& e, const CostVec& k) {
  require_same_length(e, k, "affordable");
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (k[i] <= 0 || e[i].is_infinite()) continue;
    if (static_cast<std::uint64_t>(k[i]) > e[i].value()) return false;
  }
  return true;
}

CostVec add(const CostVec& a, const CostVec& b) {
  require_same_length(a, b, "add");
  CostVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (__builtin_add_overflow(a[i], b[i], &out[i])) {
      throw std::overflow_error("cost overflow");
    }
  }
  return out;
}

BoundVec add(const BoundVec& a, const BoundVec& b) {
  require_same_length(a, b, "add");
  BoundVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

CostVec consumption(const CostVec& k) {
  CostVec out(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) out[i] = k[i] > 0 ? k[i] : 0;
  return out;
}

BoundVec infinite_bound(std::size_t r) { return BoundVec(r, Amount::infinity()); }
BoundVec zero_bound(std::size_t r) { return BoundVec(r, Amount(0)); }
CostVec zero_cost(std::size_t r) { return CostVec(r, 0); }

bool all_infinite(const BoundVec& b) {
  for (const auto& a : b) {
    if (a.is_finite()) return false;
  }
  return true;
}

bool any_negative(const CostVec& k) {
  for (auto v : k) {
    if (v < 0) return true;
  }
  return false;
}

BoundVec finite_part_zeroed(const BoundVec& b) {
  BoundVec out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    out[i] = b[i].is_infinite() ? Amount::infinity() : Amount(0);
  }
  return out;
}

std::uint64_t finite_sum(const BoundVec& b) {
  std::uint64_t s = 0;
  for (const auto& a : b) {
    if (a.is_finite()) s += a.value();
  }
  return s;
}

BoundVec to_bound(const Marking& m) {
  BoundVec out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = Amount(m[i]);
  return out;
}

BoundVec to_bound(const CostVec& k) {
  BoundVec out(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 0) throw DomainError("negative cost cannot become a bound");
    out[i] = Amount(static_cast<std::uint64_t>(k[i]));
  }
  return out;
}

std::string to_string(const BoundVec& b) { return join(b); }
std::string to_string(const CostVec& k) { return join(k); }
std::string to_string(const Marking& m) { return join(m); }

}  // namespace rbatl
