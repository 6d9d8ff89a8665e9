// Exercises the shared-library C interface end to end.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>

#include "hohf_c.h"
#include "json.hpp"

using nlohmann::json;

namespace {

std::string example_path(const char* name) {
  return std::string(HOHF_EXAMPLES_DIR) + "/" + name;
}

struct Problem {
  hohf_problem* p = nullptr;
  ~Problem() { hohf_problem_close(p); }
};

struct Out {
  char* s = nullptr;
  ~Out() { hohf_free(s); }
};

}  // namespace

TEST_CASE("open, validate, serialize, close") {
  Problem prob;
  REQUIRE(hohf_problem_open(example_path("energy.json").c_str(), nullptr,
                            &prob.p) == HOHF_OK);

  Out report;
  int warnings = 0;
  REQUIRE(hohf_problem_validate(prob.p, &report.s, &warnings) == HOHF_OK);
  CHECK(warnings > 0);  // the lenient measure carries warnings
  json j = json::parse(report.s);
  CHECK(j.at("alternatives").size() == 5);
  CHECK(j.contains("measure_class"));

  Out ser;
  REQUIRE(hohf_problem_to_json(prob.p, &ser.s) == HOHF_OK);
  Problem reparsed;
  REQUIRE(hohf_problem_parse(ser.s, nullptr, &reparsed.p) == HOHF_OK);
  Out ser2;
  REQUIRE(hohf_problem_to_json(reparsed.p, &ser2.s) == HOHF_OK);
  CHECK(std::strcmp(ser.s, ser2.s) == 0);
}

TEST_CASE("rank returns the full report") {
  Problem prob;
  REQUIRE(hohf_problem_open(example_path("energy.json").c_str(), nullptr,
                            &prob.p) == HOHF_OK);
  Out report;
  int warnings = 0;
  REQUIRE(hohf_rank(prob.p, &report.s, &warnings) == HOHF_OK);
  CHECK(warnings > 0);
  json j = json::parse(report.s);
  REQUIRE(j.at("alternatives").size() == 5);
  CHECK(j.at("alternatives")[0].at("score").get<double>() ==
        doctest::Approx(0.34563).epsilon(1e-4));
}

TEST_CASE("aggregate filters to one alternative") {
  Problem prob;
  REQUIRE(hohf_problem_open(example_path("energy.json").c_str(), nullptr,
                            &prob.p) == HOHF_OK);
  Out report;
  REQUIRE(hohf_aggregate(prob.p, "y1", &report.s, nullptr) == HOHF_OK);
  json j = json::parse(report.s);
  REQUIRE(j.at("alternatives").size() == 1);
  CHECK(j.at("alternatives")[0].at("label") == "y1");

  Out bad;
  CHECK(hohf_aggregate(prob.p, "nope", &bad.s, nullptr) ==
        HOHF_ERR_LABEL_MISMATCH);
  CHECK(std::strlen(hohf_last_error()) > 0);
}

TEST_CASE("options override the file's mode") {
  Problem strict;
  // the energy measure is non-monotone, so strict mode must refuse it
  CHECK(hohf_problem_open(example_path("energy.json").c_str(),
                          "{\"mode\":\"strict\"}", &strict.p) ==
        HOHF_ERR_MONOTONICITY_VIOLATION);
}

TEST_CASE("compare runs the consensus pipeline") {
  Out report;
  REQUIRE(hohf_compare_file(example_path("table3.json").c_str(), nullptr,
                            &report.s) == HOHF_OK);
  json j = json::parse(report.s);
  CHECK(j.at("collective_order") ==
        json({"y5", "y2", "y1", "y4", "y3"}));
  CHECK(j.at("tiers").size() == 3);

  Out bad;
  CHECK(hohf_compare("{nope", nullptr, &bad.s) == HOHF_ERR_PARSE);
}

TEST_CASE("solve_rho returns the measure table") {
  double s[2] = {0.3, 0.5};
  double rho = 0.0;
  Out table;
  REQUIRE(hohf_solve_rho(s, 2, 1, &rho, &table.s) == HOHF_OK);
  json j = json::parse(table.s);
  CHECK(j.at("rho").get<double>() == doctest::Approx(rho));
  double total = 0.0;
  for (const json& e : j.at("table"))
    if (e.at("subset").size() == 2) total = e.at("value").get<double>();
  CHECK(total == doctest::Approx(1.0).epsilon(1e-9));

  double tiny[2] = {0.05, 0.05};
  CHECK(hohf_solve_rho(tiny, 2, 0, &rho, nullptr) == HOHF_ERR_NO_ROOT);
}

TEST_CASE("bad arguments are reported without crashing") {
  CHECK(hohf_problem_open(nullptr, nullptr, nullptr) == HOHF_ERR_BAD_ARGUMENT);
  CHECK(hohf_problem_open(example_path("missing.json").c_str(), nullptr,
                          nullptr) == HOHF_ERR_BAD_ARGUMENT);
  hohf_problem* p = nullptr;
  CHECK(hohf_problem_open(example_path("missing.json").c_str(), nullptr,
                          &p) == HOHF_ERR_IO);
  CHECK(hohf_version() != nullptr);
  hohf_problem_close(nullptr);
  hohf_free(nullptr);
}
