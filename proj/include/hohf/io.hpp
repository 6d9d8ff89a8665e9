#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hohf/choquet.hpp"
#include "hohf/consensus.hpp"

namespace hohf {

struct Options {
  Mode mode = Mode::Lenient;
  CombinePolicy policy = CombinePolicy::Typewise;
  DistanceMetric metric = DistanceMetric::L1;
  std::string format = "table";  // "table" | "json"
};

// CLI-flag overrides merged over the file's own options block.
struct OptionOverrides {
  std::optional<Mode> mode;
  std::optional<CombinePolicy> policy;
  std::optional<DistanceMetric> metric;
  std::optional<std::string> format;
};

// A parsed decision problem: matrix, measure, options, plus the
// warnings collected while validating under the active mode.
struct ProblemSpec {
  DecisionMatrix matrix;
  FuzzyMeasure measure;
  Options options;
  std::vector<ReportWarning> warnings;
};

struct RankingsSpec {
  std::vector<std::string> alternatives;
  std::vector<RankingOrder> orders;
  std::vector<std::optional<DominanceVector>> dominance_overrides;
  DistanceMetric metric = DistanceMetric::L1;
};

ProblemSpec parse_problem_text(const std::string& text,
                               const OptionOverrides& ov = {});
ProblemSpec parse_problem_file(const std::string& path,
                               const OptionOverrides& ov = {});

// Canonical serialization; parse(serialize(p)) == p at 1e-12.
std::string serialize_problem(const ProblemSpec& p);

RankingsSpec parse_rankings_text(const std::string& text,
                                 const OptionOverrides& ov = {});
RankingsSpec parse_rankings_file(const std::string& path,
                                 const OptionOverrides& ov = {});

// Machine-readable reports (stable byte-for-byte for equal inputs).
std::string aggregation_report_json(const AggregationReport& r,
                                    const DecisionMatrix& dm);
std::string comparison_report_json(const ComparisonReport& r);
std::string measure_table_json(const FuzzyMeasure& m,
                               const std::vector<std::string>& labels);

std::string gvalue_to_string(const GValue& g);  // 4 d.p. display form

bool problem_equal(const ProblemSpec& a, const ProblemSpec& b,
                   double tol = 1e-12);

}  // namespace hohf
