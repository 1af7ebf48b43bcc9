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

/*
 * C interface to the rbatl model checker.
 *
 * Every function returns an rbatl_status; on failure a message describing
 * the error is available from rbatl_last_error() on the calling thread until
 * the next call into the library. Strings returned through char** outputs are
 * owned by the caller and released with rbatl_string_free(). Handles are
 * released with their matching *_free function; passing NULL to a *_free
 * function is a no-op.
 */

#ifndef RBATL_RBATL_H
#define RBATL_RBATL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(RBATL_BUILDING_LIBRARY)
#    define RBATL_API __declspec(dllexport)
#  else
#    define RBATL_API __declspec(dllimport)
#  endif
#else
#  define RBATL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rbatl_model rbatl_model;
typedef struct rbatl_formula rbatl_formula;
typedef struct rbatl_result rbatl_result;

typedef enum rbatl_status {
  RBATL_OK = 0,
  RBATL_ERR_PARSE = 1,            /* formula or file syntax */
  RBATL_ERR_INVALID_MODEL = 2,    /* model, net or certificate does not validate */
  RBATL_ERR_INVALID_ARGUMENT = 3, /* NULL pointer, unknown name, bad bound arity */
  RBATL_ERR_UNSUPPORTED = 4,      /* e.g. symbolic engine on a model with production */
  RBATL_ERR_NOT_FOUND = 5,        /* no witness at this state */
  RBATL_ERR_INTERNAL = 6
} rbatl_status;

typedef enum rbatl_semantics {
  RBATL_SEMANTICS_RBATL = 0,
  RBATL_SEMANTICS_NT = 1,
  RBATL_SEMANTICS_RAL_FINITE = 2
} rbatl_semantics;

typedef enum rbatl_engine {
  RBATL_ENGINE_TREE = 0,
  RBATL_ENGINE_SYMBOLIC = 1
} rbatl_engine;

typedef struct rbatl_check_options {
  rbatl_semantics semantics;
  rbatl_engine engine;
  int upward_cache; /* tree engine only */
} rbatl_check_options;

RBATL_API const char* rbatl_version(void);
RBATL_API const char* rbatl_last_error(void);
RBATL_API const char* rbatl_status_name(rbatl_status status);
RBATL_API void rbatl_string_free(char* s);
RBATL_API void rbatl_check_options_init(rbatl_check_options* options);

/* Models. With validate != 0 a model violating its invariants is rejected. */
RBATL_API rbatl_status rbatl_model_from_json(const char* text, int validate, rbatl_model** out);
RBATL_API rbatl_status rbatl_model_to_json(const rbatl_model* model, char** out);
RBATL_API void rbatl_model_free(rbatl_model* model);
/* Writes the invariant violations, one per line (empty string when valid). */
RBATL_API rbatl_status rbatl_model_validate(const rbatl_model* model, char** report);
RBATL_API rbatl_status rbatl_model_state_count(const rbatl_model* model, size_t* out);
/* The returned name lives as long as the model. */
RBATL_API rbatl_status rbatl_model_state_name(const rbatl_model* model, size_t index,
                                              const char** out);
RBATL_API rbatl_status rbatl_model_find_state(const rbatl_model* model, const char* name,
                                              size_t* out);
RBATL_API rbatl_status rbatl_model_consumption_only(const rbatl_model* model, int* out);

/* Formulas. */
RBATL_API rbatl_status rbatl_formula_parse(const char* text, rbatl_formula** out);
RBATL_API rbatl_status rbatl_formula_to_string(const rbatl_formula* formula, char** out);
RBATL_API void rbatl_formula_free(rbatl_formula* formula);
/* Endowment annotations to bounds: "<{a:1; b:2}> X p" -> "<{a,b}: 3> X p". */
RBATL_API rbatl_status rbatl_translate_endowment(const char* text, char** out);

/* Model checking. options may be NULL for the defaults. */
RBATL_API rbatl_status rbatl_check(const rbatl_model* model, const rbatl_formula* formula,
                                   const rbatl_check_options* options, rbatl_result** out);
RBATL_API void rbatl_result_free(rbatl_result* result);
RBATL_API rbatl_status rbatl_result_holds(const rbatl_result* result, size_t state, int* out);
RBATL_API rbatl_status rbatl_result_stats(const rbatl_result* result, uint64_t* nodes,
                                          size_t* max_depth);
/* {"formula", "satisfying", "stats"} and, on request, "labels" for every
 * labelled subformula. */
RBATL_API rbatl_status rbatl_result_to_json(const rbatl_result* result, int include_all_labels,
                                            char** out);
/* Certificate JSON for the checked U/G formula at state; RBATL_ERR_NOT_FOUND
 * when the formula does not hold there or is not a U/G modality. */
RBATL_API rbatl_status rbatl_result_witness(const rbatl_result* result, size_t state,
                                            int concretize, char** out);

/* Certificate validation. initial_state may be NULL to use the
 * certificate's root state. report (optional) receives the problems, one per
 * line. */
RBATL_API rbatl_status rbatl_validate_witness(const rbatl_model* model, const char* certificate,
                                              const char* initial_state, int* valid,
                                              char** report);

/* Depth-bounded exhaustive search; *holds is 1 for "holds", 0 for "unknown". */
RBATL_API rbatl_status rbatl_oracle(const rbatl_model* model, const rbatl_formula* formula,
                                    size_t state, size_t depth, rbatl_semantics semantics,
                                    int* holds);

/* Petri nets. target may be NULL to use the net file's "target". */
RBATL_API rbatl_status rbatl_petri_reduce(const char* net_json, const char* target,
                                          char** model_json, char** formula);
RBATL_API rbatl_status rbatl_petri_coverable(const char* net_json, const char* target,
                                             int* out);

#ifdef __cplusplus
}
#endif

#endif /* RBATL_RBATL_H */
