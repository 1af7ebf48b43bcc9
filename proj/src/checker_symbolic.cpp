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

#include "rbatl/checker_symbolic.hpp"

#include <algorithm>

#include "rbatl/errors.hpp"

namespace rbatl {

std::vector<std::pair<BoundVec, BoundVec>> split(const BoundVec& b) {
  std::vector<std::size_t> finite;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i].is_finite()) finite.push_back(i);
  }
  std::vector<std::pair<BoundVec, BoundVec>> out;
  if (finite.empty()) return out;

  // Odometer over d2 in [0, b_i] on the finite components.
  BoundVec d2 = b;
  for (auto i : finite) d2[i] = Amount(0);
  while (true) {
    BoundVec d = b;
    bool nonzero = false;
    for (auto i : finite) {
      d[i] = Amount(b[i].value() - d2[i].value());
      nonzero = nonzero || d[i].value() != 0;
    }
    if (nonzero) out.emplace_back(std::move(d), d2);

    std::size_t k = 0;
    for (; k < finite.size(); ++k) {
      const auto i = finite[k];
      if (d2[i].value() < b[i].value()) {
        d2[i] = Amount(d2[i].value() + 1);
        break;
      }
      d2[i] = Amount(0);
    }
    if (k == finite.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    const auto sx = finite_sum(x.second), sy = finite_sum(y.second);
    if (sx != sy) return sx < sy;
    return x.second < y.second;
  });
  return out;
}

namespace {

bool zero_or_infinite(const BoundVec& b) {
  return std::all_of(b.begin(), b.end(),
                     [](Amount a) { return a.is_infinite() || a.value() == 0; });
}

}  // namespace

Labelling rb_atl_label(const Model& m, const Formula& phi0, Semantics mode) {
  if (!consumption_only(m)) {
    throw ContractViolation(
        "the symbolic engine needs a consumption-only model; use the tree engine for "
        "models with production");
  }
  Labelling labels;
  for (const Formula& f : sub_plus(bind_to_model(phi0, m))) {
    if (!f.is_modality()) {
      labels.emplace(f, label_boolean(m, f, labels));
      continue;
    }
    const MoveTable table(m, m.coalition(f.coalition()));
    const BoundVec& b = *f.bound();
    const StateSet& phi = label_of(labels, f.lhs());
    StateSet result;
    if (f.kind() == FormulaKind::Next) {
      result = pre(table, phi, b, mode);
    } else if (zero_or_infinite(b)) {
      result = f.kind() == FormulaKind::Until
                   ? until_fixpoint(table, phi, label_of(labels, f.rhs()), b, mode)
                   : always_fixpoint(table, phi, b, mode);
    } else {
      const BoundVec free_moves = finite_part_zeroed(b);
      // States already satisfying psi need no budget at all.
      StateSet rho = f.kind() == FormulaKind::Until ? label_of(labels, f.rhs())
                                                    : StateSet(m.num_states());
      for (const auto& [d, d2] : split(b)) {
        const StateSet& smaller = label_of(labels, f.with_bound(d2));
        StateSet tau = pre(table, smaller, d, mode) & phi;
        while (!tau.is_subset_of(rho)) {
          rho |= tau;
          tau = pre(table, rho, free_moves, mode) & phi;
        }
      }
      result = std::move(rho);
    }
    labels.emplace(f, std::move(result));
  }
  return labels;
}

}  // namespace rbatl
