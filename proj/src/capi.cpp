/*
  Copyright (c) 2026 the wmisolve authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#include "wmi/wmi.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "gen.hpp"
#include "parse.hpp"
#include "report.hpp"

using namespace wmi;

struct wmi_problem_s {
  WmiProblem problem;
};

struct wmi_result_s {
  std::string json;
  std::string value_str;
  double value_double = 0;
  uint64_t n_integrals = 0;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err_msg, const std::string& what) {
  if (err_msg) *err_msg = dup_string(what);
}

wmi_status status_of(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return WMI_ERR_PARSE;
  if (dynamic_cast<const UnknownVariableError*>(&e)) return WMI_ERR_PARSE;
  if (dynamic_cast<const UnboundedError*>(&e)) return WMI_ERR_UNBOUNDED;
  if (dynamic_cast<const TooLargeError*>(&e)) return WMI_ERR_TOO_LARGE;
  if (dynamic_cast<const ZeroAcceptanceError*>(&e)) return WMI_ERR_ZERO_ACCEPTANCE;
  return WMI_ERR_RUNTIME;
}

std::vector<std::string> split_names(const char* csv) {
  std::vector<std::string> out;
  if (!csv) return out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t a = item.find_first_not_of(" \t");
    std::size_t b = item.find_last_not_of(" \t");
    if (a != std::string::npos) out.push_back(item.substr(a, b - a + 1));
  }
  return out;
}

RunConfig config_of(const wmi_run_config* c) {
  RunConfig cfg;
  if (!c) return cfg;
  if (c->algorithm) cfg.algorithm = c->algorithm;
  if (c->integrator) cfg.integrator = c->integrator;
  cfg.samples = c->samples;
  cfg.seed = c->seed;
  cfg.workers = c->workers;
  cfg.breakdown = c->emit_breakdown != 0;
  cfg.timing = c->emit_timing != 0;
  cfg.order = split_names(c->decision_order);
  return cfg;
}

}  // namespace

extern "C" {

const char* wmi_version(void) { return "0.1.0"; }

void wmi_run_config_init(wmi_run_config* config) {
  if (!config) return;
  config->algorithm = "sae";
  config->integrator = "exact";
  config->samples = 10000;
  config->seed = 0;
  config->workers = 1;
  config->emit_breakdown = 0;
  config->emit_timing = 1;
  config->decision_order = nullptr;
}

wmi_status wmi_problem_parse(const char* text, wmi_problem** out, char** err_msg) {
  if (!text || !out) {
    set_err(err_msg, "null argument");
    return WMI_ERR_INVALID_ARG;
  }
  try {
    auto* p = new wmi_problem_s{parse_problem(text)};
    p->problem.validate();
    *out = p;
    return WMI_OK;
  } catch (const std::exception& e) {
    set_err(err_msg, e.what());
    return status_of(e);
  }
}

void wmi_problem_free(wmi_problem* problem) { delete problem; }

wmi_status wmi_problem_print(const wmi_problem* problem, char** out, char** err_msg) {
  if (!problem || !out) {
    set_err(err_msg, "null argument");
    return WMI_ERR_INVALID_ARG;
  }
  try {
    *out = dup_string(print_problem(problem->problem));
    return WMI_OK;
  } catch (const std::exception& e) {
    set_err(err_msg, e.what());
    return status_of(e);
  }
}

wmi_status wmi_run(const wmi_problem* problem, const wmi_run_config* config, wmi_result** out,
                   char** err_msg) {
  if (!problem || !out) {
    set_err(err_msg, "null argument");
    return WMI_ERR_INVALID_ARG;
  }
  try {
    RunConfig cfg = config_of(config);
    auto* r = new wmi_result_s;

    auto t0 = std::chrono::steady_clock::now();
    AtomTable t = *problem->problem.table;
    WmiResult res = run_algorithm(problem->problem, cfg, t);
    auto t1 = std::chrono::steady_clock::now();
    long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    r->json = render_report(res, t, cfg, ms);
    r->value_double = res.value_double();
    r->n_integrals = res.n_integrals;
    if (res.exact) {
      r->value_str = rat_str(res.value_rat);
    } else {
      std::ostringstream os;
      os.precision(17);
      os << res.value_mc;
      r->value_str = os.str();
    }
    *out = r;
    return WMI_OK;
  } catch (const std::exception& e) {
    set_err(err_msg, e.what());
    return status_of(e);
  }
}

void wmi_result_free(wmi_result* result) { delete result; }

wmi_status wmi_result_json(const wmi_result* result, char** out, char** err_msg) {
  if (!result || !out) {
    set_err(err_msg, "null argument");
    return WMI_ERR_INVALID_ARG;
  }
  *out = dup_string(result->json);
  return WMI_OK;
}

wmi_status wmi_result_value_str(const wmi_result* result, char** out, char** err_msg) {
  if (!result || !out) {
    set_err(err_msg, "null argument");
    return WMI_ERR_INVALID_ARG;
  }
  *out = dup_string(result->value_str);
  return WMI_OK;
}

double wmi_result_value_double(const wmi_result* result) {
  return result ? result->value_double : 0;
}

uint64_t wmi_result_n_integrals(const wmi_result* result) {
  return result ? result->n_integrals : 0;
}

wmi_status wmi_generate(const char* kind, int n, int depth, int n_bools, int n_reals,
                        uint64_t seed, char** out, char** err_msg) {
  if (!kind || !out) {
    set_err(err_msg, "null argument");
    return WMI_ERR_INVALID_ARG;
  }
  try {
    std::string k(kind);
    std::string text;
    if (k == "prodite") {
      if (n < 0 || n > 256) throw Error("prodite size out of range [0,256]");
      text = gen_prodite(n, seed);
    } else if (k == "tree") {
      if (depth < 0 || depth > 8 || n_bools < 0 || n_bools > 8 || n_reals < 1 || n_reals > 6)
        throw Error("tree parameters out of range");
      text = gen_tree(depth, n_bools, n_reals, seed);
    } else {
      throw Error("unknown generator kind '" + k + "'");
    }
    *out = dup_string(text);
    return WMI_OK;
  } catch (const std::exception& e) {
    set_err(err_msg, e.what());
    return status_of(e);
  }
}

wmi_status wmi_fairness(const char* variant, uint64_t samples, uint64_t seed, uint32_t n_seeds,
                        char** out_json, char** err_msg) {
  if (!variant || !out_json) {
    set_err(err_msg, "null argument");
    return WMI_ERR_INVALID_ARG;
  }
  try {
    if (n_seeds == 0) throw Error("need at least one seed");
    std::vector<std::uint64_t> seeds;
    for (uint32_t i = 0; i < n_seeds; ++i) seeds.push_back(seed + i);
    *out_json = dup_string(fairness_report(variant, samples, seeds));
    return WMI_OK;
  } catch (const std::exception& e) {
    set_err(err_msg, e.what());
    return status_of(e);
  }
}

const char* wmi_fixture(const char* name) {
  if (!name) return nullptr;
  static thread_local std::string storage;
  storage = fixture_text(name);
  return storage.empty() ? nullptr : storage.c_str();
}

wmi_status wmi_selftest(char** out, char** err_msg) {
  try {
    std::string report;
    bool ok = selftest(report);
    if (out) *out = dup_string(report);
    return ok ? WMI_OK : WMI_ERR_RUNTIME;
  } catch (const std::exception& e) {
    set_err(err_msg, e.what());
    return status_of(e);
  }
}

void wmi_string_free(char* s) { std::free(s); }

}  // extern "C"
