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

#include <random>

#include "doctest.h"
#include "rbatl/errors.hpp"
#include "rbatl/resource.hpp"

using namespace rbatl;

namespace {

const Amount inf = Amount::infinity();

BoundVec random_bound(std::mt19937_64& gen, std::size_t r, bool allow_inf) {
  BoundVec b(r);
  for (auto& x : b) {
    const int v = static_cast<int>(gen() % 5);
    x = (allow_inf && v == 4) ? inf : Amount(static_cast<std::uint64_t>(v));
  }
  return b;
}

CostVec random_cost(std::mt19937_64& gen, std::size_t r) {
  CostVec k(r);
  for (auto& x : k) x = static_cast<std::int64_t>(gen() % 7) - 3;
  return k;
}

}  // namespace

TEST_CASE("amount ordering puts infinity above every natural") {
  CHECK(Amount(0) < Amount(1));
  CHECK(Amount(1000000) < inf);
  CHECK(inf == inf);
  CHECK_FALSE(inf < inf);
  CHECK(Amount(3) + inf == inf);
  CHECK(Amount(3) + Amount(4) == Amount(7));
  CHECK_THROWS_AS(inf.value(), DomainError);
  CHECK_THROWS_AS(Amount(UINT64_MAX) + Amount(1), std::overflow_error);
}

TEST_CASE("pointwise order") {
  CHECK(leq(BoundVec{0, 0}, BoundVec{0, 0}));
  CHECK(leq(BoundVec{3, 1}, BoundVec{inf, 1}));
  CHECK_FALSE(leq(BoundVec{2, 1}, BoundVec{1, 2}));
  CHECK_FALSE(leq(BoundVec{1, 2}, BoundVec{2, 1}));
  CHECK(leq(BoundVec{}, BoundVec{}));
  CHECK(strictly_less(BoundVec{1, 2}, BoundVec{1, 3}));
  CHECK_FALSE(strictly_less(BoundVec{1, 2}, BoundVec{1, 2}));
  CHECK_THROWS_AS(leq(BoundVec{1}, BoundVec{1, 2}), StructuralError);
  CHECK(leq(Marking{1, 2}, Marking{1, 3}));
  CHECK_THROWS_AS(leq(Marking{1}, Marking{1, 3}), StructuralError);
}

TEST_CASE("pointwise order is a partial order on random vectors") {
  std::mt19937_64 gen(11);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t r = gen() % 3;
    const auto x = random_bound(gen, r, true);
    const auto y = random_bound(gen, r, true);
    const auto z = random_bound(gen, r, true);
    CHECK(leq(x, x));
    if (leq(x, y) && leq(y, x)) CHECK(x == y);
    if (leq(x, y) && leq(y, z)) CHECK(leq(x, z));
    CHECK(strictly_less(x, y) == (leq(x, y) && x != y));
  }
}

TEST_CASE("bound minus cost") {
  CHECK(*bound_minus_cost(BoundVec{3, 1}, CostVec{-2, 1}) == BoundVec{5, 0});
  CHECK(*bound_minus_cost(BoundVec{inf, inf}, CostVec{5, 0}) == BoundVec{inf, inf});
  CHECK_FALSE(bound_minus_cost(BoundVec{0, 1}, CostVec{1, -1}).has_value());
  CHECK_THROWS_AS(bound_minus_cost(BoundVec{0}, CostVec{1, 1}), StructuralError);
  CHECK(affordable(BoundVec{1, inf}, CostVec{1, 100}));
  CHECK_FALSE(affordable(BoundVec{1, inf}, CostVec{2, 0}));
  CHECK(affordable(BoundVec{0}, CostVec{-4}));
}

TEST_CASE("bound minus cost laws on random vectors") {
  std::mt19937_64 gen(12);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t r = gen() % 3;
    const auto e = random_bound(gen, r, true);
    const auto k1 = random_cost(gen, r);
    const auto k2 = random_cost(gen, r);
    CHECK(*bound_minus_cost(e, zero_cost(r)) == e);
    const auto step1 = bound_minus_cost(e, k1);
    if (!step1) continue;
    const auto step2 = bound_minus_cost(*step1, k2);
    const auto direct = bound_minus_cost(e, add(k1, k2));
    if (step2 && direct) CHECK(*step2 == *direct);
  }
}

TEST_CASE("cost arithmetic is checked") {
  CHECK(add(CostVec{5, 0}, CostVec{1, -1}) == CostVec{6, -1});
  CHECK_THROWS_AS(add(CostVec{INT64_MAX}, CostVec{1}), std::overflow_error);
  CHECK_THROWS_AS(add(CostVec{1}, CostVec{1, 2}), StructuralError);
  CHECK(consumption(CostVec{-2, 1, 0}) == CostVec{0, 1, 0});
  CHECK(any_negative(CostVec{0, -1}));
  CHECK_FALSE(any_negative(CostVec{0, 3}));
}

TEST_CASE("vector helpers") {
  CHECK(all_infinite(infinite_bound(2)));
  CHECK(all_infinite(BoundVec{}));
  CHECK_FALSE(all_infinite(BoundVec{inf, 0}));
  CHECK(finite_part_zeroed(BoundVec{3, inf}) == BoundVec{0, inf});
  CHECK(finite_sum(BoundVec{3, inf, 2}) == 5);
  CHECK(to_bound(Marking{1, 0}) == BoundVec{1, 0});
  CHECK(to_bound(CostVec{5, 0}) == BoundVec{5, 0});
  CHECK_THROWS_AS(to_bound(CostVec{-1}), DomainError);
  CHECK(to_string(BoundVec{3, inf}) == "<3,inf>");
}
