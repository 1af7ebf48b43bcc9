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

#include "rbatl/rbatl.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>

#include <json.hpp>

#include "rbatl/checker_bounded.hpp"
#include "rbatl/checker_symbolic.hpp"
#include "rbatl/errors.hpp"
#include "rbatl/formula.hpp"
#include "rbatl/model_json.hpp"
#include "rbatl/oracle.hpp"
#include "rbatl/petri.hpp"
#include "rbatl/witness.hpp"

struct rbatl_model {
  rbatl::Model model;
};

struct rbatl_formula {
  rbatl::Formula formula;
};

struct rbatl_result {
  const rbatl_model* model;
  rbatl::Semantics semantics;
  rbatl::Formula root;
  rbatl::Labelling labels;
  rbatl::SearchStats stats;
};

namespace {

thread_local std::string g_last_error;

rbatl_status fail(rbatl_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename Fn>
rbatl_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const rbatl::ParseError& e) {
    return fail(RBATL_ERR_PARSE, e.what());
  } catch (const rbatl::ValidationError& e) {
    return fail(RBATL_ERR_INVALID_MODEL, e.what());
  } catch (const rbatl::StructuralError& e) {
    return fail(RBATL_ERR_INVALID_MODEL, e.what());
  } catch (const rbatl::ContractViolation& e) {
    return fail(RBATL_ERR_UNSUPPORTED, e.what());
  } catch (const rbatl::DomainError& e) {
    return fail(RBATL_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RBATL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RBATL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(RBATL_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

rbatl::Semantics to_semantics(rbatl_semantics s) {
  switch (s) {
    case RBATL_SEMANTICS_RBATL: return rbatl::Semantics::rbatl;
    case RBATL_SEMANTICS_NT: return rbatl::Semantics::nt;
    case RBATL_SEMANTICS_RAL_FINITE: return rbatl::Semantics::ral_finite;
  }
  throw rbatl::DomainError("unknown semantics mode");
}

#define RBATL_REQUIRE(ptr)                                            \
  do {                                                                \
    if ((ptr) == nullptr) {                                           \
      return fail(RBATL_ERR_INVALID_ARGUMENT, #ptr " must not be NULL"); \
    }                                                                 \
  } while (0)

}  // namespace

extern "C" {

const char* rbatl_version(void) { return "0.1.0"; }

const char* rbatl_last_error(void) { return g_last_error.c_str(); }

const char* rbatl_status_name(rbatl_status status) {
  switch (status) {
    case RBATL_OK: return "ok";
    case RBATL_ERR_PARSE: return "parse error";
    case RBATL_ERR_INVALID_MODEL: return "invalid input";
    case RBATL_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RBATL_ERR_UNSUPPORTED: return "unsupported";
    case RBATL_ERR_NOT_FOUND: return "not found";
    case RBATL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void rbatl_string_free(char* s) { std::free(s); }

void rbatl_check_options_init(rbatl_check_options* options) {
  if (options == nullptr) return;
  options->semantics = RBATL_SEMANTICS_RBATL;
  options->engine = RBATL_ENGINE_TREE;
  options->upward_cache = 0;
}

rbatl_status rbatl_model_from_json(const char* text, int validate, rbatl_model** out) {
  RBATL_REQUIRE(text);
  RBATL_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new rbatl_model{rbatl::model_from_json(text, validate != 0)};
    return RBATL_OK;
  });
}

rbatl_status rbatl_model_to_json(const rbatl_model* model, char** out) {
  RBATL_REQUIRE(model);
  RBATL_REQUIRE(out);
  return guarded([&] {
    *out = copy_string(rbatl::model_to_json(model->model));
    return RBATL_OK;
  });
}

void rbatl_model_free(rbatl_model* model) { delete model; }

rbatl_status rbatl_model_validate(const rbatl_model* model, char** report) {
  RBATL_REQUIRE(model);
  RBATL_REQUIRE(report);
  return guarded([&] {
    std::string text;
    for (const auto& p : rbatl::validate_model(model->model)) text += p + "\n";
    *report = copy_string(text);
    return RBATL_OK;
  });
}

rbatl_status rbatl_model_state_count(const rbatl_model* model, size_t* out) {
  RBATL_REQUIRE(model);
  RBATL_REQUIRE(out);
  *out = model->model.num_states();
  return RBATL_OK;
}

rbatl_status rbatl_model_state_name(const rbatl_model* model, size_t index, const char** out) {
  RBATL_REQUIRE(model);
  RBATL_REQUIRE(out);
  if (index >= model->model.num_states()) {
    return fail(RBATL_ERR_INVALID_ARGUMENT, "state index out of range");
  }
  *out = model->model.states()[index].c_str();
  return RBATL_OK;
}

rbatl_status rbatl_model_find_state(const rbatl_model* model, const char* name, size_t* out) {
  RBATL_REQUIRE(model);
  RBATL_REQUIRE(name);
  RBATL_REQUIRE(out);
  auto s = model->model.find_state(name);
  if (!s) return fail(RBATL_ERR_INVALID_ARGUMENT, std::string("unknown state '") + name + "'");
  *out = *s;
  return RBATL_OK;
}

rbatl_status rbatl_model_consumption_only(const rbatl_model* model, int* out) {
  RBATL_REQUIRE(model);
  RBATL_REQUIRE(out);
  *out = rbatl::consumption_only(model->model) ? 1 : 0;
  return RBATL_OK;
}

rbatl_status rbatl_formula_parse(const char* text, rbatl_formula** out) {
  RBATL_REQUIRE(text);
  RBATL_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new rbatl_formula{rbatl::parse_formula(text)};
    return RBATL_OK;
  });
}

rbatl_status rbatl_formula_to_string(const rbatl_formula* formula, char** out) {
  RBATL_REQUIRE(formula);
  RBATL_REQUIRE(out);
  return guarded([&] {
    *out = copy_string(rbatl::to_string(formula->formula));
    return RBATL_OK;
  });
}

void rbatl_formula_free(rbatl_formula* formula) { delete formula; }

rbatl_status rbatl_translate_endowment(const char* text, char** out) {
  RBATL_REQUIRE(text);
  RBATL_REQUIRE(out);
  return guarded([&] {
    *out = copy_string(rbatl::translate_endowment(text));
    return RBATL_OK;
  });
}

rbatl_status rbatl_check(const rbatl_model* model, const rbatl_formula* formula,
                         const rbatl_check_options* options, rbatl_result** out) {
  RBATL_REQUIRE(model);
  RBATL_REQUIRE(formula);
  RBATL_REQUIRE(out);
  *out = nullptr;
  rbatl_check_options opts;
  rbatl_check_options_init(&opts);
  if (options != nullptr) opts = *options;
  return guarded([&] {
    auto result = std::make_unique<rbatl_result>();
    result->model = model;
    result->semantics = to_semantics(opts.semantics);
    const rbatl::Model& m = model->model;
    // The formula is fine on its own; a mismatch with the model is the
    // caller's argument error.
    try {
      result->root = rbatl::bind_to_model(formula->formula, m);
    } catch (const rbatl::ValidationError& e) {
      return fail(RBATL_ERR_INVALID_ARGUMENT, e.what());
    }
    if (opts.engine == RBATL_ENGINE_SYMBOLIC) {
      result->labels = rbatl::rb_atl_label(m, formula->formula, result->semantics);
    } else if (opts.engine == RBATL_ENGINE_TREE) {
      rbatl::CheckOptions co;
      co.semantics = result->semantics;
      co.upward_cache = opts.upward_cache != 0;
      rbatl::CheckResult r = rbatl::model_check(m, formula->formula, co);
      result->root = r.root;
      result->labels = std::move(r.labels);
      result->stats = r.stats;
    } else {
      return fail(RBATL_ERR_INVALID_ARGUMENT, "unknown engine");
    }
    *out = result.release();
    return RBATL_OK;
  });
}

void rbatl_result_free(rbatl_result* result) { delete result; }

rbatl_status rbatl_result_holds(const rbatl_result* result, size_t state, int* out) {
  RBATL_REQUIRE(result);
  RBATL_REQUIRE(out);
  if (state >= result->model->model.num_states()) {
    return fail(RBATL_ERR_INVALID_ARGUMENT, "state index out of range");
  }
  *out = rbatl::label_of(result->labels, result->root).contains(state) ? 1 : 0;
  return RBATL_OK;
}

rbatl_status rbatl_result_stats(const rbatl_result* result, uint64_t* nodes, size_t* max_depth) {
  RBATL_REQUIRE(result);
  if (nodes != nullptr) *nodes = result->stats.nodes;
  if (max_depth != nullptr) *max_depth = result->stats.max_depth;
  return RBATL_OK;
}

rbatl_status rbatl_result_to_json(const rbatl_result* result, int include_all_labels, char** out) {
  RBATL_REQUIRE(result);
  RBATL_REQUIRE(out);
  return guarded([&] {
    const rbatl::Model& m = result->model->model;
    auto names = [&m](const rbatl::StateSet& set) {
      nlohmann::json arr = nlohmann::json::array();
      for (auto s : set.members()) arr.push_back(m.states()[s]);
      return arr;
    };
    nlohmann::json j;
    j["formula"] = rbatl::to_string(result->root);
    j["semantics"] = std::string(rbatl::to_string(result->semantics));
    j["satisfying"] = names(rbatl::label_of(result->labels, result->root));
    j["stats"] = {{"nodes", result->stats.nodes}, {"max_depth", result->stats.max_depth}};
    if (include_all_labels) {
      nlohmann::json labels = nlohmann::json::array();
      for (const auto& [f, set] : result->labels) {
        labels.push_back({{"formula", rbatl::to_string(f)}, {"satisfying", names(set)}});
      }
      j["labels"] = labels;
    }
    *out = copy_string(j.dump(2));
    return RBATL_OK;
  });
}

rbatl_status rbatl_result_witness(const rbatl_result* result, size_t state, int concretize,
                                  char** out) {
  RBATL_REQUIRE(result);
  RBATL_REQUIRE(out);
  const rbatl::Model& m = result->model->model;
  if (state >= m.num_states()) return fail(RBATL_ERR_INVALID_ARGUMENT, "state index out of range");
  return guarded([&] {
    if (!rbatl::label_of(result->labels, result->root).contains(state)) {
      return fail(RBATL_ERR_NOT_FOUND, "the formula does not hold at '" + m.states()[state] + "'");
    }
    auto w = rbatl::find_witness(m, result->root, result->labels, state, result->semantics);
    if (!w) {
      return fail(RBATL_ERR_NOT_FOUND, "certificates exist only for U and G modalities");
    }
    if (concretize) *w = rbatl::concretize(m, *w);
    *out = copy_string(rbatl::witness_to_json(m, *w));
    return RBATL_OK;
  });
}

rbatl_status rbatl_validate_witness(const rbatl_model* model, const char* certificate,
                                    const char* initial_state, int* valid, char** report) {
  RBATL_REQUIRE(model);
  RBATL_REQUIRE(certificate);
  RBATL_REQUIRE(valid);
  return guarded([&] {
    const rbatl::Model& m = model->model;
    const rbatl::Witness w = rbatl::witness_from_json(m, certificate);
    rbatl::StateId initial = w.root.state;
    if (initial_state != nullptr) {
      auto s = m.find_state(initial_state);
      if (!s) {
        return fail(RBATL_ERR_INVALID_ARGUMENT, std::string("unknown state '") + initial_state + "'");
      }
      initial = *s;
    }
    const auto problems = rbatl::validate_witness(m, w, initial);
    *valid = problems.empty() ? 1 : 0;
    if (report != nullptr) {
      std::string text;
      for (const auto& p : problems) text += p + "\n";
      *report = copy_string(text);
    }
    return RBATL_OK;
  });
}

rbatl_status rbatl_oracle(const rbatl_model* model, const rbatl_formula* formula, size_t state,
                          size_t depth, rbatl_semantics semantics, int* holds) {
  RBATL_REQUIRE(model);
  RBATL_REQUIRE(formula);
  RBATL_REQUIRE(holds);
  return guarded([&] {
    const rbatl::Model& m = model->model;
    const auto f = rbatl::bind_to_model(formula->formula, m);
    *holds = rbatl::bounded_search(m, f, state, depth, to_semantics(semantics)) ==
                     rbatl::OracleAnswer::holds
                 ? 1
                 : 0;
    return RBATL_OK;
  });
}

namespace {

rbatl::Marking resolve_target(const rbatl::NetFile& file, const char* target) {
  if (target != nullptr) return rbatl::parse_marking(file.net, target);
  if (!file.target) throw rbatl::ValidationError("no target marking given and none in the net file");
  return *file.target;
}

}  // namespace

rbatl_status rbatl_petri_reduce(const char* net_json, const char* target, char** model_json,
                                char** formula) {
  RBATL_REQUIRE(net_json);
  RBATL_REQUIRE(model_json);
  RBATL_REQUIRE(formula);
  return guarded([&] {
    const auto file = rbatl::net_from_json(net_json);
    const auto red = rbatl::reduce(file.net, resolve_target(file, target));
    std::unique_ptr<char, decltype(&std::free)> m(copy_string(rbatl::model_to_json(red.model)),
                                                   &std::free);
    *formula = copy_string(rbatl::to_string(red.formula));
    *model_json = m.release();
    return RBATL_OK;
  });
}

rbatl_status rbatl_petri_coverable(const char* net_json, const char* target, int* out) {
  RBATL_REQUIRE(net_json);
  RBATL_REQUIRE(out);
  return guarded([&] {
    const auto file = rbatl::net_from_json(net_json);
    *out = rbatl::coverable(file.net, resolve_target(file, target)) ? 1 : 0;
    return RBATL_OK;
  });
}

}  // extern "C"
