#include "hohf_c.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hohf/io.hpp"
#include "json.hpp"

using namespace hohf;

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hohf_status status_of(errc c) {
  switch (c) {
    case errc::ok: return HOHF_OK;
    case errc::parse_error: return HOHF_ERR_PARSE;
    case errc::schema_error: return HOHF_ERR_SCHEMA;
    case errc::validation_error: return HOHF_ERR_VALIDATION;
    case errc::type_mismatch: return HOHF_ERR_TYPE_MISMATCH;
    case errc::cardinality_mismatch: return HOHF_ERR_CARDINALITY_MISMATCH;
    case errc::mixed_types: return HOHF_ERR_MIXED_TYPES;
    case errc::empty_terms: return HOHF_ERR_EMPTY_TERMS;
    case errc::negative_lambda: return HOHF_ERR_NEGATIVE_LAMBDA;
    case errc::out_of_range: return HOHF_ERR_OUT_OF_RANGE;
    case errc::missing_subset: return HOHF_ERR_MISSING_SUBSET;
    case errc::bad_boundary: return HOHF_ERR_BAD_BOUNDARY;
    case errc::monotonicity_violation: return HOHF_ERR_MONOTONICITY_VIOLATION;
    case errc::value_out_of_range: return HOHF_ERR_VALUE_OUT_OF_RANGE;
    case errc::not_normalized: return HOHF_ERR_NOT_NORMALIZED;
    case errc::no_root: return HOHF_ERR_NO_ROOT;
    case errc::dimension_mismatch: return HOHF_ERR_DIMENSION_MISMATCH;
    case errc::negative_weight_unsupported:
      return HOHF_ERR_NEGATIVE_WEIGHT_UNSUPPORTED;
    case errc::label_mismatch: return HOHF_ERR_LABEL_MISMATCH;
    case errc::not_a_total_order: return HOHF_ERR_NOT_A_TOTAL_ORDER;
    case errc::io_error: return HOHF_ERR_IO;
    case errc::internal_error: return HOHF_ERR_INTERNAL;
  }
  return HOHF_ERR_INTERNAL;
}

template <typename Fn>
hohf_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return HOHF_OK;
  } catch (const error& e) {
    g_last_error = std::string(errc_name(e.code())) + ": " + e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HOHF_ERR_INTERNAL;
  }
}

OptionOverrides overrides_from_json(const char* options_json) {
  OptionOverrides ov;
  if (!options_json || !*options_json) return ov;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(options_json);
  } catch (const nlohmann::json::parse_error& e) {
    fail(errc::parse_error, std::string("options: ") + e.what());
  }
  auto str = [&](const char* key) -> std::string {
    return j.at(key).get<std::string>();
  };
  if (j.contains("mode")) {
    const std::string m = str("mode");
    if (m == "strict") ov.mode = Mode::Strict;
    else if (m == "lenient") ov.mode = Mode::Lenient;
    else fail(errc::schema_error, "options.mode is strict|lenient");
  }
  if (j.contains("policy")) {
    const std::string p = str("policy");
    if (p == "typewise") ov.policy = CombinePolicy::Typewise;
    else if (p == "strict-uniform") ov.policy = CombinePolicy::StrictUniform;
    else fail(errc::schema_error, "options.policy is typewise|strict-uniform");
  }
  if (j.contains("metric")) {
    const std::string m = str("metric");
    if (m == "l1") ov.metric = DistanceMetric::L1;
    else if (m == "maxmin") ov.metric = DistanceMetric::MaxMin;
    else fail(errc::schema_error, "options.metric is l1|maxmin");
  }
  if (j.contains("format")) ov.format = str("format");
  return ov;
}

std::string validation_json(const ProblemSpec& p) {
  nlohmann::json j;
  j["alternatives"] = p.matrix.alternatives;
  j["criteria"] = p.matrix.criteria;
  nlohmann::json warns = nlohmann::json::array();
  for (const ReportWarning& w : p.warnings)
    warns.push_back(nlohmann::json{
        {"code", w.code}, {"where", w.where}, {"detail", w.detail}});
  j["warnings"] = std::move(warns);
  j["measure_class"] = measure_class_name(measure_classify(p.measure));
  return j.dump(2);
}

AggregationReport run_rank(const ProblemSpec& p) {
  AggregationReport rep = rank_alternatives(p.matrix, p.measure,
                                            p.options.policy);
  // prepend the parse-time warnings (cell violations etc.)
  std::vector<ReportWarning> all = p.warnings;
  for (ReportWarning& w : rep.warnings) {
    bool dup = false;
    for (const ReportWarning& e : all)
      if (e.code == w.code && e.where == w.where && e.detail == w.detail)
        dup = true;
    if (!dup) all.push_back(std::move(w));
  }
  rep.warnings = std::move(all);
  return rep;
}

}  // namespace

struct hohf_problem {
  ProblemSpec spec;
};

extern "C" {

hohf_status hohf_problem_open(const char* path, const char* options_json,
                              hohf_problem** out) {
  if (!path || !out) {
    g_last_error = "null argument";
    return HOHF_ERR_BAD_ARGUMENT;
  }
  return guarded([&] {
    auto* p = new hohf_problem{parse_problem_file(path,
                                                  overrides_from_json(
                                                      options_json))};
    *out = p;
  });
}

hohf_status hohf_problem_parse(const char* text, const char* options_json,
                               hohf_problem** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return HOHF_ERR_BAD_ARGUMENT;
  }
  return guarded([&] {
    auto* p = new hohf_problem{parse_problem_text(text,
                                                  overrides_from_json(
                                                      options_json))};
    *out = p;
  });
}

void hohf_problem_close(hohf_problem* p) { delete p; }

hohf_status hohf_problem_to_json(const hohf_problem* p, char** out_json) {
  if (!p || !out_json) {
    g_last_error = "null argument";
    return HOHF_ERR_BAD_ARGUMENT;
  }
  return guarded([&] { *out_json = dup_string(serialize_problem(p->spec)); });
}

hohf_status hohf_problem_validate(const hohf_problem* p, char** report_json,
                                  int* warning_count) {
  if (!p) {
    g_last_error = "null argument";
    return HOHF_ERR_BAD_ARGUMENT;
  }
  return guarded([&] {
    if (report_json) *report_json = dup_string(validation_json(p->spec));
    if (warning_count)
      *warning_count = static_cast<int>(p->spec.warnings.size());
  });
}

hohf_status hohf_rank(const hohf_problem* p, char** report_json,
                      int* warning_count) {
  return hohf_aggregate(p, nullptr, report_json, warning_count);
}

hohf_status hohf_aggregate(const hohf_problem* p, const char* alternative,
                           char** report_json, int* warning_count) {
  if (!p || !report_json) {
    g_last_error = "null argument";
    return HOHF_ERR_BAD_ARGUMENT;
  }
  return guarded([&] {
    AggregationReport rep = run_rank(p->spec);
    if (alternative && *alternative) {
      bool found = false;
      for (const AlternativeResult& r : rep.results)
        if (r.label == alternative) found = true;
      if (!found)
        fail(errc::label_mismatch,
             std::string("unknown alternative '") + alternative + "'");
      AggregationReport filtered;
      for (AlternativeResult& r : rep.results)
        if (r.label == alternative) filtered.results.push_back(std::move(r));
      filtered.ranking = {{alternative}};
      for (ReportWarning& w : rep.warnings)
        if (w.where == alternative || w.where == "measure" ||
            w.where.rfind("cell(" + std::string(alternative) + ",", 0) == 0)
          filtered.warnings.push_back(std::move(w));
      rep = std::move(filtered);
    }
    *report_json = dup_string(aggregation_report_json(rep, p->spec.matrix));
    if (warning_count) *warning_count = static_cast<int>(rep.warnings.size());
  });
}

hohf_status hohf_compare(const char* rankings_text, const char* metric,
                         char** report_json) {
  if (!rankings_text || !report_json) {
    g_last_error = "null argument";
    return HOHF_ERR_BAD_ARGUMENT;
  }
  return guarded([&] {
    OptionOverrides ov;
    if (metric && *metric) {
      std::string m = metric;
      if (m == "l1") ov.metric = DistanceMetric::L1;
      else if (m == "maxmin") ov.metric = DistanceMetric::MaxMin;
      else fail(errc::schema_error, "metric is l1|maxmin");
    }
    RankingsSpec rs = parse_rankings_text(rankings_text, ov);
    ComparisonReport rep = sort_techniques(rs.orders, rs.alternatives,
                                           rs.dominance_overrides, rs.metric);
    *report_json = dup_string(comparison_report_json(rep));
  });
}

hohf_status hohf_compare_file(const char* path, const char* metric,
                              char** report_json) {
  if (!path || !report_json) {
    g_last_error = "null argument";
    return HOHF_ERR_BAD_ARGUMENT;
  }
  std::string text;
  hohf_status st = guarded([&] {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::io_error, std::string("cannot open ") + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  });
  if (st != HOHF_OK) return st;
  return hohf_compare(text.c_str(), metric, report_json);
}

hohf_status hohf_solve_rho(const double* singletons, size_t n,
                           int use_sugeno_plus, double* rho_out,
                           char** table_json) {
  if (!singletons || !rho_out) {
    g_last_error = "null argument";
    return HOHF_ERR_BAD_ARGUMENT;
  }
  return guarded([&] {
    std::vector<double> s(singletons, singletons + n);
    const RhoSign sign =
        use_sugeno_plus ? RhoSign::Plus : RhoSign::Minus;
    const double rho = measure_solve_rho(s, sign);
    *rho_out = rho;
    if (table_json) {
      FuzzyMeasure m = measure_rho_rule(s, rho, sign, Mode::Lenient);
      std::vector<std::string> labels;
      for (size_t i = 0; i < n; ++i)
        labels.push_back("x" + std::to_string(i + 1));
      nlohmann::json j = nlohmann::json::parse(measure_table_json(m, labels));
      j["rho"] = rho;
      *table_json = dup_string(j.dump(2));
    }
  });
}

void hohf_free(char* s) { std::free(s); }

const char* hohf_last_error(void) { return g_last_error.c_str(); }

const char* hohf_version(void) { return "1.0.0"; }

}  // extern "C"
