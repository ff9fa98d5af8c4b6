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

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "wmi/wmi.h"

namespace {

struct CString {
  char* ptr = nullptr;
  ~CString() { wmi_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

int fail(const char* what, const CString& err, wmi_status status) {
  std::cerr << "error: " << what;
  if (err.ptr) std::cerr << ": " << err.ptr;
  std::cerr << "\n";
  return static_cast<int>(status) + 1;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  // Names of bundled fixtures work in place of file paths.
  if (const char* fx = wmi_fixture(path.c_str())) return fx;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted model integration solver (WMI-PA, SAE4WMI, brute-force oracles)"};
  app.require_subcommand(1);

  std::string problem_path;
  std::string algorithm = "sae";
  std::string integrator = "exact";
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  int workers = 1;
  bool breakdown = false;
  bool no_timing = false;
  std::string order;

  auto* run = app.add_subcommand("run", "run one algorithm on a problem file");
  run->add_option("problem", problem_path, "problem file, '-' for stdin, or a fixture name")
      ->required();
  run->add_option("--algorithm,-a", algorithm, "pa | sae | oracle")->capture_default_str();
  run->add_option("--integrator,-i", integrator, "exact | mc")->capture_default_str();
  run->add_option("--samples,-N", samples, "MC samples per integral")->capture_default_str();
  run->add_option("--seed,-s", seed, "MC seed")->capture_default_str();
  run->add_option("--workers,-j", workers, "parallel integration workers")
      ->capture_default_str();
  run->add_flag("--breakdown,-b", breakdown, "emit the per-assignment breakdown");
  run->add_flag("--no-timing", no_timing, "omit wall_ms for byte-stable output");
  run->add_option("--order", order, "comma-separated Boolean decision order override");

  std::string gen_kind = "tree";
  int gen_n = 8;
  int gen_depth = 4;
  int gen_bools = 3;
  int gen_reals = 3;
  std::uint64_t gen_seed = 1;
  auto* gen = app.add_subcommand("gen", "generate a synthetic problem on stdout");
  gen->add_option("kind", gen_kind, "prodite | tree")->required();
  gen->add_option("--n", gen_n, "prodite: number of factors")->capture_default_str();
  gen->add_option("--depth", gen_depth, "tree: weight depth")->capture_default_str();
  gen->add_option("--bools", gen_bools, "tree: Boolean variables")->capture_default_str();
  gen->add_option("--reals", gen_reals, "tree: real variables")->capture_default_str();
  gen->add_option("--seed,-s", gen_seed, "generator seed")->capture_default_str();

  std::string fair_variant = "fair";
  std::uint64_t fair_samples = 100000;
  std::uint64_t fair_seed = 1;
  std::uint32_t fair_runs = 5;
  auto* fair = app.add_subcommand("fairness", "demographic parity of the bundled programs");
  fair->add_option("program", fair_variant, "fair | unfair")->required();
  fair->add_option("--samples,-N", fair_samples, "MC samples per integral")
      ->capture_default_str();
  fair->add_option("--seed,-s", fair_seed, "first seed")->capture_default_str();
  fair->add_option("--runs", fair_runs, "number of seeds")->capture_default_str();

  auto* self = app.add_subcommand("selftest", "run the fixture acceptance subset");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    std::string text;
    try {
      text = read_input(problem_path);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
    CString err;
    wmi_problem* problem = nullptr;
    wmi_status st = wmi_problem_parse(text.c_str(), &problem, &err.ptr);
    if (st != WMI_OK) return fail("parse", err, st);

    wmi_run_config cfg;
    wmi_run_config_init(&cfg);
    cfg.algorithm = algorithm.c_str();
    cfg.integrator = integrator.c_str();
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.workers = workers;
    cfg.emit_breakdown = breakdown ? 1 : 0;
    cfg.emit_timing = no_timing ? 0 : 1;
    cfg.decision_order = order.empty() ? nullptr : order.c_str();

    wmi_result* result = nullptr;
    CString run_err;
    st = wmi_run(problem, &cfg, &result, &run_err.ptr);
    if (st != WMI_OK) {
      wmi_problem_free(problem);
      return fail("run", run_err, st);
    }
    CString json;
    wmi_result_json(result, &json.ptr, nullptr);
    std::cout << json.str();
    wmi_result_free(result);
    wmi_problem_free(problem);
    return 0;
  }

  if (gen->parsed()) {
    CString out, err;
    wmi_status st =
        wmi_generate(gen_kind.c_str(), gen_n, gen_depth, gen_bools, gen_reals, gen_seed,
                     &out.ptr, &err.ptr);
    if (st != WMI_OK) return fail("gen", err, st);
    std::cout << out.str();
    return 0;
  }

  if (fair->parsed()) {
    CString out, err;
    wmi_status st =
        wmi_fairness(fair_variant.c_str(), fair_samples, fair_seed, fair_runs, &out.ptr,
                     &err.ptr);
    if (st != WMI_OK) return fail("fairness", err, st);
    std::cout << out.str();
    return 0;
  }

  if (self->parsed()) {
    CString out, err;
    wmi_status st = wmi_selftest(&out.ptr, &err.ptr);
    std::cout << out.str();
    if (st != WMI_OK && err.ptr) std::cerr << "error: " << err.ptr << "\n";
    return st == WMI_OK ? 0 : 1;
  }

  return 0;
}
