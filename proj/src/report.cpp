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

#include "report.hpp"

#include <chrono>
#include <json.hpp>
#include <sstream>

#include "fixtures.hpp"
#include "parse.hpp"

namespace wmi {

using json = nlohmann::ordered_json;

void RunConfig::check() const {
  if (algorithm != "pa" && algorithm != "sae" && algorithm != "oracle")
    throw Error("unknown algorithm '" + algorithm + "'");
  if (integrator != "exact" && integrator != "mc")
    throw Error("unknown integrator '" + integrator + "'");
  if (integrator == "mc" && samples < 1) throw Error("mc integration needs samples >= 1");
  if (workers < 1) throw Error("workers must be >= 1");
}

WmiResult run_algorithm(const WmiProblem& p, const RunConfig& config, AtomTable& run_table) {
  config.check();
  RunOptions opts;
  opts.keep_breakdown = config.breakdown;
  opts.workers = config.workers;
  opts.order_override = config.order;
  opts.skeleton_labels = config.tseitin_skeleton ? LabelMode::Tseitin : LabelMode::Plaisted;

  std::unique_ptr<Integrator> integrator;
  if (config.integrator == "exact")
    integrator = std::make_unique<ExactIntegrator>(run_table);
  else
    integrator = std::make_unique<McIntegrator>(run_table, config.samples, config.seed);

  if (config.algorithm == "pa") return wmi_pa(p, *integrator, run_table, opts);
  if (config.algorithm == "oracle") {
    if (config.integrator == "mc") {
      // Sampling reference: one estimate over the whole problem.
      WmiResult r;
      r.algorithm = "oracle";
      r.integrator = "mc";
      r.exact = false;
      r.samples = config.samples;
      r.seed = config.seed;
      r.value_mc = mc_oracle(p, config.samples, config.seed);
      return r;
    }
    return oracle_wmi(p, *integrator, run_table, opts);
  }
  return sae4wmi(p, *integrator, run_table, opts);
}

namespace {

json value_json(const WmiResult& r) {
  if (r.exact) return rat_str(r.value_rat);
  return r.value_mc;
}

json breakdown_json(const WmiResult& r, const AtomTable& t) {
  json arr = json::array();
  for (const auto& e : r.breakdown) {
    json entry;
    json lits = json::array();
    for (const auto& l : e.assignment.literals()) lits.push_back(t.literal_str(l));
    entry["assignment"] = lits;
    entry["multiplicity"] = e.multiplicity;
    if (e.integral.exact)
      entry["integral"] = rat_str(e.integral.rational);
    else
      entry["integral"] = e.integral.approx;
    if (e.integral.degenerate) entry["degenerate"] = true;
    arr.push_back(entry);
  }
  return arr;
}

}  // namespace

std::string render_report(const WmiResult& r, const AtomTable& table, const RunConfig& config,
                          long long wall_ms) {
  json out;
  out["value"] = value_json(r);
  out["n_integrals"] = r.n_integrals;
  out["algorithm"] = r.algorithm;
  out["integrator"] = r.integrator;
  if (!r.exact) {
    out["samples"] = r.samples;
    out["seed"] = r.seed;
  }
  if (config.timing) out["wall_ms"] = wall_ms;
  if (config.breakdown) out["breakdown"] = breakdown_json(r, table);
  return out.dump(2) + "\n";
}

std::string run_report(const WmiProblem& p, const RunConfig& config) {
  auto t0 = std::chrono::steady_clock::now();
  AtomTable run_table = *p.table;
  WmiResult r = run_algorithm(p, config, run_table);
  auto t1 = std::chrono::steady_clock::now();
  long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return render_report(r, run_table, config, ms);
}

std::string fairness_report(const std::string& variant, std::uint64_t samples,
                            const std::vector<std::uint64_t>& seeds) {
  std::string text = fixture_text(variant);
  if (text.empty()) throw Error("unknown fairness variant '" + variant + "'");
  WmiProblem base = parse_problem(text);
  if (!base.query) throw Error("fairness fixture lacks a query");

  json runs = json::array();
  double ratio_sum = 0;
  double pm_sum = 0;
  double pn_sum = 0;
  for (std::uint64_t seed : seeds) {
    AtomTable t = *base.table;
    Formula hire = *base.query;
    Formula minority = parse_formula_text("(> eth 10)", t);

    WmiProblem given_minority = base;
    given_minority.phi = simplify(f_and({base.phi, minority}));
    WmiProblem given_majority = base;
    given_majority.phi = simplify(f_and({base.phi, f_not(minority)}));

    McIntegrator mc(t, samples, seed);
    double pr_min = query_probability(given_minority, hire, "sae", mc);
    double pr_maj = query_probability(given_majority, hire, "sae", mc);
    double ratio = pr_min / pr_maj;
    ratio_sum += ratio;
    pm_sum += pr_min;
    pn_sum += pr_maj;
    json run;
    run["seed"] = seed;
    run["pr_hire_given_minority"] = pr_min;
    run["pr_hire_given_majority"] = pr_maj;
    run["ratio"] = ratio;
    runs.push_back(run);
  }
  json out;
  out["program"] = variant;
  out["samples"] = samples;
  out["runs"] = runs;
  double n = static_cast<double>(seeds.size());
  out["pr_hire_given_minority_mean"] = pm_sum / n;
  out["pr_hire_given_majority_mean"] = pn_sum / n;
  out["ratio_mean"] = ratio_sum / n;
  return out.dump(2) + "\n";
}

bool selftest(std::string& report) {
  std::ostringstream os;
  bool all_ok = true;
  auto line = [&](const std::string& name, bool ok, const std::string& detail) {
    os << (ok ? "PASS" : "FAIL") << "  " << name;
    if (!detail.empty()) os << "  (" << detail << ")";
    os << "\n";
    all_ok = all_ok && ok;
  };

  try {
    WmiProblem e5 = parse_problem(fixture_text("example5"));
    RunConfig cfg;
    cfg.timing = false;
    cfg.algorithm = "pa";
    AtomTable t1 = *e5.table;
    WmiResult pa = run_algorithm(e5, cfg, t1);
    cfg.algorithm = "sae";
    AtomTable t2 = *e5.table;
    WmiResult sae = run_algorithm(e5, cfg, t2);
    cfg.algorithm = "oracle";
    AtomTable t3 = *e5.table;
    WmiResult orc = run_algorithm(e5, cfg, t3);
    line("example5 wmi-pa 24 integrals", pa.n_integrals == 24,
         "got " + std::to_string(pa.n_integrals));
    line("example5 sae4wmi 6 integrals", sae.n_integrals == 6,
         "got " + std::to_string(sae.n_integrals));
    line("example5 values agree",
         pa.value_rat == sae.value_rat && sae.value_rat == orc.value_rat,
         rat_str(sae.value_rat));
  } catch (const std::exception& e) {
    line("example5", false, e.what());
  }

  try {
    WmiProblem e11 = parse_problem(fixture_text("example11"));
    RunConfig cfg;
    cfg.timing = false;
    cfg.algorithm = "pa";
    AtomTable t1 = *e11.table;
    WmiResult pa = run_algorithm(e11, cfg, t1);
    cfg.algorithm = "sae";
    AtomTable t2 = *e11.table;
    WmiResult sae = run_algorithm(e11, cfg, t2);
    line("example11 wmi-pa 7 integrals", pa.n_integrals == 7,
         "got " + std::to_string(pa.n_integrals));
    line("example11 sae4wmi 5 integrals", sae.n_integrals == 5,
         "got " + std::to_string(sae.n_integrals));
    line("example11 value 14", sae.value_rat == 14 && pa.value_rat == 14,
         rat_str(sae.value_rat));
  } catch (const std::exception& e) {
    line("example11", false, e.what());
  }

  try {
    WmiProblem e9 = parse_problem(fixture_text("example9"));
    RunConfig cfg;
    cfg.timing = false;
    cfg.algorithm = "sae";
    AtomTable t2 = *e9.table;
    WmiResult sae = run_algorithm(e9, cfg, t2);
    cfg.algorithm = "pa";
    AtomTable t1 = *e9.table;
    WmiResult pa = run_algorithm(e9, cfg, t1);
    cfg.algorithm = "oracle";
    AtomTable t3 = *e9.table;
    WmiResult orc = run_algorithm(e9, cfg, t3);
    line("example9 sae4wmi 8 integrals", sae.n_integrals == 8,
         "got " + std::to_string(sae.n_integrals));
    line("example9 sae4wmi count dominated", sae.n_integrals <= pa.n_integrals,
         "pa ran " + std::to_string(pa.n_integrals));
    line("example9 values agree",
         pa.value_rat == sae.value_rat && sae.value_rat == orc.value_rat,
         rat_str(sae.value_rat));
  } catch (const std::exception& e) {
    line("example9", false, e.what());
  }

  report = os.str();
  return all_ok;
}

}  // namespace wmi
