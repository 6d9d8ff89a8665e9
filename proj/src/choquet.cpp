#include "hohf/choquet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace hohf {

double choquet_real(const std::vector<double>& f, const FuzzyMeasure& m) {
  if (static_cast<int>(f.size()) != m.n())
    fail(errc::dimension_mismatch, "input length must equal criterion count");
  std::vector<int> sigma(f.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  std::sort(sigma.begin(), sigma.end(), [&](int i, int j) {
    if (f[i] != f[j]) return f[i] > f[j];
    return i < j;
  });
  const std::vector<double> w = marginal_weights(m, sigma);
  double acc = 0.0;
  for (std::size_t k = 0; k < sigma.size(); ++k) acc += w[k] * f[sigma[k]];
  return acc;
}

std::vector<int> sigma_order(const std::vector<HOHFE>& row) {
  if (row.empty()) fail(errc::empty_terms, "empty criterion row");
  std::vector<double> scores;
  scores.reserve(row.size());
  for (const HOHFE& h : row) scores.push_back(hohfe_score(h));
  std::vector<int> sigma(row.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  std::sort(sigma.begin(), sigma.end(), [&](int i, int j) {
    if (scores[i] > scores[j] + 1e-9) return true;
    if (scores[j] > scores[i] + 1e-9) return false;
    return i < j;
  });
  return sigma;
}

HOHFE hohf_choquet(const std::vector<HOHFE>& row, const FuzzyMeasure& m,
                   CombinePolicy policy) {
  if (static_cast<int>(row.size()) != m.n())
    fail(errc::dimension_mismatch, "row length must equal criterion count");
  const std::vector<int> sigma = sigma_order(row);
  const std::vector<double> w = marginal_weights(m, sigma);
  std::vector<WeightedTerm> terms;
  terms.reserve(row.size());
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    if (w[k] < 0.0) {
      for (const GValue& g : row[sigma[k]].elements())
        if (g.kind() == Kind::IntuPair) {
          std::ostringstream os;
          os << "criterion x" << (sigma[k] + 1) << " carries marginal weight "
             << w[k] << " over an intuitionistic pair";
          fail(errc::negative_weight_unsupported, os.str());
        }
    }
    terms.push_back({w[k], row[sigma[k]]});
  }
  return hohfe_combine(terms, policy, m.mode());
}

AggregationReport rank_alternatives(const DecisionMatrix& dm,
                                    const FuzzyMeasure& m,
                                    CombinePolicy policy) {
  if (static_cast<int>(dm.criteria.size()) != m.n())
    fail(errc::dimension_mismatch,
         "measure criterion count must match the matrix");
  if (dm.cells.size() != dm.alternatives.size())
    fail(errc::dimension_mismatch, "matrix rows must match alternatives");

  AggregationReport rep;
  auto subset_names = [&](std::uint32_t s) {
    std::string out = "{";
    bool first = true;
    for (std::size_t c = 0; c < dm.criteria.size(); ++c)
      if (s >> c & 1u) {
        if (!first) out += ",";
        out += dm.criteria[c];
        first = false;
      }
    return out + "}";
  };
  for (const MonotonicityWarning& w : m.warnings()) {
    std::ostringstream detail;
    detail << "mu(" << subset_names(w.subset_a) << ") = " << w.value_a
           << " > mu(" << subset_names(w.subset_b) << ") = " << w.value_b;
    rep.warnings.push_back({"MONOTONICITY_VIOLATION", "measure",
                            detail.str()});
  }
  if (m.nonunit_total())
    rep.warnings.push_back({"TOTAL_NOT_ONE", "measure",
                            "mu of the full criterion set differs from 1"});

  for (std::size_t i = 0; i < dm.cells.size(); ++i) {
    const std::vector<HOHFE>& row = dm.cells[i];
    AlternativeResult res;
    res.label = dm.alternatives[i];
    res.sigma = sigma_order(row);
    res.weights = marginal_weights(m, res.sigma);
    for (std::size_t k = 0; k < res.weights.size(); ++k) {
      if (res.weights[k] < 0.0) {
        std::ostringstream detail;
        detail << "marginal weight " << res.weights[k] << " on criterion "
               << dm.criteria[res.sigma[k]];
        rep.warnings.push_back({"NEGATIVE_WEIGHT", res.label, detail.str()});
      }
    }
    res.aggregate = hohf_choquet(row, m, policy);
    res.score = hohfe_score(res.aggregate);
    rep.results.push_back(std::move(res));
  }

  // descending score, tie groups (1e-9) in matrix row order
  std::vector<int> idx(rep.results.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return rep.results[a].score > rep.results[b].score + 1e-9;
  });
  for (int i : idx) {
    if (!rep.ranking.empty()) {
      const std::string& head = rep.ranking.back().front();
      double head_score = 0.0;
      for (const AlternativeResult& r : rep.results)
        if (r.label == head) head_score = r.score;
      if (std::fabs(head_score - rep.results[i].score) <= 1e-9) {
        rep.ranking.back().push_back(rep.results[i].label);
        continue;
      }
    }
    rep.ranking.push_back({rep.results[i].label});
  }
  return rep;
}

}  // namespace hohf
