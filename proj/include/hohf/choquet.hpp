#pragma once

#include <string>
#include <vector>

#include "hohf/fuzzy_measure.hpp"
#include "hohf/hohfe.hpp"

namespace hohf {

// Real-valued Choquet integral of f against m. Ties in f are broken by
// ascending index when building the descending permutation.
double choquet_real(const std::vector<double>& f, const FuzzyMeasure& m);

// Criterion indices sorted by HOHFE score descending; ties (within
// 1e-9) broken by ascending index.
std::vector<int> sigma_order(const std::vector<HOHFE>& row);

// The HOHF Choquet integral: marginal weights along sigma paired with
// the sigma-ordered elements, combined under the given policy.
// Rejects negative weights applied to intuitionistic pairs.
HOHFE hohf_choquet(const std::vector<HOHFE>& row, const FuzzyMeasure& m,
                   CombinePolicy policy = CombinePolicy::Typewise);

struct ReportWarning {
  std::string code;
  std::string where;
  std::string detail;
};

struct AlternativeResult {
  std::string label;
  std::vector<int> sigma;        // 0-based criterion indices
  std::vector<double> weights;   // marginal weights, sigma order
  HOHFE aggregate;
  double score = 0.0;
};

struct AggregationReport {
  std::vector<AlternativeResult> results;  // matrix row order
  // Strict order with tie groups, best first; each group in matrix row
  // order.
  std::vector<std::vector<std::string>> ranking;
  std::vector<ReportWarning> warnings;
};

AggregationReport rank_alternatives(const DecisionMatrix& dm,
                                    const FuzzyMeasure& m,
                                    CombinePolicy policy =
                                        CombinePolicy::Typewise);

}  // namespace hohf
