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

#ifndef RBATL_MODEL_JSON_HPP
#define RBATL_MODEL_JSON_HPP

#include <string>

#include "rbatl/model.hpp"

namespace rbatl {

/// Parses the model file format (docs/formats.md). With `validate`, a model
/// violating its invariants is rejected with every violation listed.
/// Throws ValidationError.
Model model_from_json(const std::string& text, bool validate = true);

/// Canonical form: sorted keys, two-space indentation, transitions sorted by
/// source state (declared order), then joint action names, then target.
std::string model_to_json(const Model& m);

}  // namespace rbatl

#endif  // RBATL_MODEL_JSON_HPP
