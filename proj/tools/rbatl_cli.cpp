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

// rbatl command-line front end. Talks to the library through the C API only.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rbatl/rbatl.h"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitInput = 2;
constexpr int kExitOracle = 4;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelDeleter {
  void operator()(rbatl_model* m) const { rbatl_model_free(m); }
};
struct FormulaDeleter {
  void operator()(rbatl_formula* f) const { rbatl_formula_free(f); }
};
struct ResultDeleter {
  void operator()(rbatl_result* r) const { rbatl_result_free(r); }
};
using ModelPtr = std::unique_ptr<rbatl_model, ModelDeleter>;
using FormulaPtr = std::unique_ptr<rbatl_formula, FormulaDeleter>;
using ResultPtr = std::unique_ptr<rbatl_result, ResultDeleter>;

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s != nullptr ? s : "";
  rbatl_string_free(s);
  return out;
}

void check(rbatl_status status, const std::string& context) {
  if (status != RBATL_OK) {
    throw InputError(context + ": " + rbatl_last_error());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write '" + path + "'");
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// A formula argument is either the formula itself or a file holding it.
std::string formula_text(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return trim(read_file(arg));
  return arg;
}

ModelPtr load_model(const std::string& path, bool validate = true) {
  const std::string text = read_file(path);
  rbatl_model* raw = nullptr;
  check(rbatl_model_from_json(text.c_str(), validate ? 1 : 0, &raw), path);
  return ModelPtr(raw);
}

FormulaPtr load_formula(const std::string& arg) {
  const std::string text = formula_text(arg);
  rbatl_formula* raw = nullptr;
  check(rbatl_formula_parse(text.c_str(), &raw), "formula");
  return FormulaPtr(raw);
}

std::size_t state_index(const rbatl_model* model, const std::string& name) {
  std::size_t s = 0;
  check(rbatl_model_find_state(model, name.c_str(), &s), "--state");
  return s;
}

std::size_t parse_depth(const std::string& spec) {
  std::string digits = spec;
  if (digits.rfind("depth=", 0) == 0) digits = digits.substr(6);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError("--oracle expects depth=N, got '" + spec + "'");
  }
  const auto depth = std::stoull(digits);
  if (depth == 0) throw InputError("--oracle depth must be at least 1");
  return depth;
}

std::string join_states(const nlohmann::json& names) {
  if (names.empty()) return "(none)";
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ' ';
    out += n.get<std::string>();
  }
  return out;
}

struct CheckArgs {
  std::string model_path;
  std::string formula;
  std::string state;
  std::string semantics = "rbatl";
  std::string engine = "tree";
  std::string witness_path;
  std::string oracle;
  bool trace = false;
  bool json = false;
  bool all_labels = false;
  bool upward_cache = false;
};

int run_check(const CheckArgs& a) {
  ModelPtr model = load_model(a.model_path);
  FormulaPtr formula = load_formula(a.formula);

  rbatl_check_options opts;
  rbatl_check_options_init(&opts);
  if (a.semantics == "rbatl") {
    opts.semantics = RBATL_SEMANTICS_RBATL;
  } else if (a.semantics == "nt") {
    opts.semantics = RBATL_SEMANTICS_NT;
  } else if (a.semantics == "ral-finite") {
    opts.semantics = RBATL_SEMANTICS_RAL_FINITE;
  } else {
    throw InputError("unknown semantics '" + a.semantics + "'");
  }
  if (a.engine == "tree") {
    opts.engine = RBATL_ENGINE_TREE;
  } else if (a.engine == "symbolic") {
    opts.engine = RBATL_ENGINE_SYMBOLIC;
  } else {
    throw InputError("unknown engine '" + a.engine + "'");
  }
  opts.upward_cache = a.upward_cache ? 1 : 0;
  if (!a.witness_path.empty() && a.state.empty()) throw InputError("--witness needs --state");
  if (!a.oracle.empty() && a.state.empty()) throw InputError("--oracle needs --state");

  std::optional<std::size_t> state;
  if (!a.state.empty()) state = state_index(model.get(), a.state);
  const std::optional<std::size_t> depth =
      a.oracle.empty() ? std::nullopt : std::optional<std::size_t>(parse_depth(a.oracle));

  rbatl_result* raw = nullptr;
  check(rbatl_check(model.get(), formula.get(), &opts, &raw), "check");
  ResultPtr result(raw);

  char* text = nullptr;
  check(rbatl_result_to_json(result.get(), a.all_labels ? 1 : 0, &text), "report");
  nlohmann::json report = nlohmann::json::parse(take(text));

  int holds = 0;
  if (state) {
    check(rbatl_result_holds(result.get(), *state, &holds), "check");
    report["state"] = a.state;
    report["holds"] = holds != 0;
  }

  bool disagreement = false;
  if (depth) {
    int oracle_holds = 0;
    check(rbatl_oracle(model.get(), formula.get(), *state, *depth, opts.semantics, &oracle_holds),
          "oracle");
    report["oracle"] = {{"depth", *depth}, {"answer", oracle_holds ? "true" : "unknown"}};
    disagreement = oracle_holds != 0 && holds == 0;
  }

  if (!a.witness_path.empty()) {
    if (holds) {
      char* cert = nullptr;
      check(rbatl_result_witness(result.get(), *state, 1, &cert), "witness");
      write_file(a.witness_path, take(cert) + "\n");
      report["witness"] = a.witness_path;
    } else {
      std::cerr << "no witness: the formula does not hold at " << a.state << "\n";
    }
  }

  if (a.json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "formula: " << report["formula"].get<std::string>() << "\n";
    std::cout << "semantics: " << report["semantics"].get<std::string>() << "\n";
    std::cout << "satisfying: " << join_states(report["satisfying"]) << "\n";
    if (a.all_labels) {
      for (const auto& entry : report["labels"]) {
        std::cout << "  " << entry["formula"].get<std::string>() << ": "
                  << join_states(entry["satisfying"]) << "\n";
      }
    }
    if (a.trace) {
      std::cout << "search: " << report["stats"]["nodes"] << " nodes, max depth "
                << report["stats"]["max_depth"] << "\n";
    }
    if (state) std::cout << a.state << ": " << (holds ? "holds" : "does not hold") << "\n";
    if (depth) {
      std::cout << "oracle (depth " << *depth << "): "
                << report["oracle"]["answer"].get<std::string>() << "\n";
    }
    if (report.contains("witness")) std::cout << "witness: " << a.witness_path << "\n";
  }
  if (disagreement) {
    std::cerr << "oracle disagreement: the bounded oracle found a strategy the checker rejected\n";
    return kExitOracle;
  }
  if (state) return holds ? kExitHolds : kExitFails;
  return kExitHolds;
}

int run_translate(const std::string& arg) {
  char* out = nullptr;
  const std::string text = formula_text(arg);
  check(rbatl_translate_endowment(text.c_str(), &out), "translate");
  std::cout << take(out) << "\n";
  return 0;
}

int run_petri(const std::string& net_path, const std::string& target, const std::string& model_out,
              const std::string& formula_out, bool coverable_only) {
  const std::string net = read_file(net_path);
  const char* target_arg = target.empty() ? nullptr : target.c_str();
  if (coverable_only) {
    int cov = 0;
    check(rbatl_petri_coverable(net.c_str(), target_arg, &cov), net_path);
    std::cout << "coverable: " << (cov ? "true" : "false") << "\n";
    return cov ? kExitHolds : kExitFails;
  }
  char* model = nullptr;
  char* formula = nullptr;
  check(rbatl_petri_reduce(net.c_str(), target_arg, &model, &formula), net_path);
  const std::string model_text = take(model);
  const std::string formula_str = take(formula);
  if (model_out.empty()) {
    std::cout << model_text;
  } else {
    write_file(model_out, model_text);
  }
  if (formula_out.empty()) {
    std::cout << formula_str << "\n";
  } else {
    write_file(formula_out, formula_str + "\n");
  }
  return 0;
}

int run_validate_witness(const std::string& model_path, const std::string& cert_path,
                         const std::string& state) {
  ModelPtr model = load_model(model_path);
  const std::string cert = read_file(cert_path);
  int valid = 0;
  char* report = nullptr;
  check(rbatl_validate_witness(model.get(), cert.c_str(), state.empty() ? nullptr : state.c_str(),
                               &valid, &report),
        cert_path);
  const std::string problems = take(report);
  if (valid) {
    std::cout << "valid\n";
    return kExitHolds;
  }
  std::cout << "invalid\n" << problems;
  return kExitFails;
}

int run_validate(const std::string& model_path) {
  ModelPtr model = load_model(model_path, false);
  char* report = nullptr;
  check(rbatl_model_validate(model.get(), &report), model_path);
  const std::string problems = take(report);
  if (problems.empty()) {
    std::cout << "valid\n";
    return kExitHolds;
  }
  std::cout << problems;
  return kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Model checker for resource-bounded alternating-time temporal logic"};
  app.set_version_flag("--version", rbatl_version());
  app.require_subcommand(1);

  CheckArgs ca;
  auto* check_cmd = app.add_subcommand("check", "Label a formula over a model");
  check_cmd->add_option("model", ca.model_path, "Model file (JSON)")->required();
  check_cmd->add_option("formula", ca.formula, "Formula, or a file containing it")->required();
  check_cmd->add_option("--state", ca.state, "Report on this state; exit 0 iff it satisfies");
  check_cmd->add_option("--semantics", ca.semantics, "rbatl | nt | ral-finite")
      ->check(CLI::IsMember({"rbatl", "nt", "ral-finite"}));
  check_cmd->add_option("--engine", ca.engine, "tree | symbolic")
      ->check(CLI::IsMember({"tree", "symbolic"}));
  check_cmd->add_option("--witness", ca.witness_path, "Write a concretized certificate here");
  check_cmd->add_option("--oracle", ca.oracle, "Cross-check with the bounded oracle: depth=N");
  check_cmd->add_flag("--trace", ca.trace, "Print search statistics");
  check_cmd->add_flag("--json", ca.json, "Machine-readable output");
  check_cmd->add_flag("--all-labels", ca.all_labels, "Print every labelled subformula");
  check_cmd->add_flag("--upward-cache", ca.upward_cache, "Reuse answers across bounds");

  std::string translate_arg;
  auto* translate_cmd =
      app.add_subcommand("translate", "Replace endowment annotations by summed bounds");
  translate_cmd->add_option("formula", translate_arg, "Formula, or a file containing it")
      ->required();

  std::string net_path, target, model_out, formula_out;
  bool coverable_only = false;
  auto* petri_cmd = app.add_subcommand("petri", "Encode a coverability question as a model");
  petri_cmd->add_option("net", net_path, "Net file (JSON)")->required();
  petri_cmd->add_option("--target", target, "Target marking: p1=2,p2=0 or 2,0");
  petri_cmd->add_option("--model-out", model_out, "Write the model here (default stdout)");
  petri_cmd->add_option("--formula-out", formula_out, "Write the formula here (default stdout)");
  petri_cmd->add_flag("--coverable", coverable_only, "Only decide coverability directly");

  std::string vw_model, vw_cert, vw_state;
  auto* vw_cmd = app.add_subcommand("validate-witness", "Check a certificate against a model");
  vw_cmd->add_option("model", vw_model, "Model file (JSON)")->required();
  vw_cmd->add_option("certificate", vw_cert, "Certificate file (JSON)")->required();
  vw_cmd->add_option("--state", vw_state, "Expected initial state");

  std::string v_model;
  auto* validate_cmd = app.add_subcommand("validate", "List model invariant violations");
  validate_cmd->add_option("model", v_model, "Model file (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*check_cmd) return run_check(ca);
    if (*translate_cmd) return run_translate(translate_arg);
    if (*petri_cmd) return run_petri(net_path, target, model_out, formula_out, coverable_only);
    if (*vw_cmd) return run_validate_witness(vw_model, vw_cert, vw_state);
    if (*validate_cmd) return run_validate(v_model);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
