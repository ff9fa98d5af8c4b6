#include <doctest.h>

#include <cstring>
#include <string>

#include "wmi/wmi.h"

namespace {

struct CStr {
  char* p = nullptr;
  ~CStr() { wmi_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

}  // namespace

TEST_CASE("c api: parse, run, inspect, free") {
  const char* text = wmi_fixture("example11");
  REQUIRE(text != nullptr);

  wmi_problem* problem = nullptr;
  CStr err;
  REQUIRE(wmi_problem_parse(text, &problem, &err.p) == WMI_OK);

  wmi_run_config cfg;
  wmi_run_config_init(&cfg);
  cfg.algorithm = "sae";
  cfg.emit_timing = 0;

  wmi_result* result = nullptr;
  REQUIRE(wmi_run(problem, &cfg, &result, &err.p) == WMI_OK);

  CHECK(wmi_result_n_integrals(result) == 5);
  CHECK(wmi_result_value_double(result) == doctest::Approx(14.0));
  CStr value;
  CHECK(wmi_result_value_str(result, &value.p, nullptr) == WMI_OK);
  CHECK(value.str() == "14");
  CStr json;
  CHECK(wmi_result_json(result, &json.p, nullptr) == WMI_OK);
  CHECK(json.str().find("\"n_integrals\": 5") != std::string::npos);
  CHECK(json.str().find("wall_ms") == std::string::npos);

  wmi_result_free(result);
  wmi_problem_free(problem);
}

TEST_CASE("c api: byte-identical reports for identical mc configs") {
  wmi_problem* problem = nullptr;
  REQUIRE(wmi_problem_parse(wmi_fixture("example5"), &problem, nullptr) == WMI_OK);
  wmi_run_config cfg;
  wmi_run_config_init(&cfg);
  cfg.integrator = "mc";
  cfg.samples = 1000;
  cfg.seed = 1;
  cfg.emit_timing = 0;
  cfg.emit_breakdown = 1;

  std::string a, b;
  for (std::string* out : {&a, &b}) {
    wmi_result* result = nullptr;
    REQUIRE(wmi_run(problem, &cfg, &result, nullptr) == WMI_OK);
    CStr json;
    wmi_result_json(result, &json.p, nullptr);
    *out = json.str();
    wmi_result_free(result);
  }
  CHECK(a == b);
  wmi_problem_free(problem);
}

TEST_CASE("c api: error reporting") {
  wmi_problem* problem = nullptr;
  CStr err;
  CHECK(wmi_problem_parse("(problem (reals (x 0", &problem, &err.p) == WMI_ERR_PARSE);
  CHECK(err.str().find("line") != std::string::npos);

  CHECK(wmi_problem_parse(nullptr, &problem, nullptr) == WMI_ERR_INVALID_ARG);
  CHECK(wmi_fixture("no-such-fixture") == nullptr);

  CStr gen_err;
  char* out = nullptr;
  CHECK(wmi_generate("bogus", 1, 1, 1, 1, 0, &out, &gen_err.p) == WMI_ERR_RUNTIME);
}

TEST_CASE("c api: generator and round-trip printing") {
  CStr text;
  REQUIRE(wmi_generate("prodite", 8, 0, 0, 0, 3, &text.p, nullptr) == WMI_OK);
  wmi_problem* problem = nullptr;
  REQUIRE(wmi_problem_parse(text.p, &problem, nullptr) == WMI_OK);
  CStr printed;
  REQUIRE(wmi_problem_print(problem, &printed.p, nullptr) == WMI_OK);
  wmi_problem* again = nullptr;
  CHECK(wmi_problem_parse(printed.p, &again, nullptr) == WMI_OK);
  wmi_problem_free(problem);
  wmi_problem_free(again);
}

TEST_CASE("c api: version and config defaults") {
  CHECK(std::strcmp(wmi_version(), "0.1.0") == 0);
  wmi_run_config cfg;
  wmi_run_config_init(&cfg);
  CHECK(std::string(cfg.algorithm) == "sae");
  CHECK(std::string(cfg.integrator) == "exact");
  CHECK(cfg.workers == 1);
}
