#include "hohf/consensus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>

#include "hohf/errors.hpp"

namespace hohf {

namespace {

std::map<std::string, int> index_of(const std::vector<std::string>& labels) {
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!idx.emplace(labels[i], static_cast<int>(i)).second)
      fail(errc::label_mismatch, "duplicate alternative label " + labels[i]);
  }
  return idx;
}

// rank position (0 = top) of each alternative, by canonical label index
std::vector<int> positions(const RankingOrder& r,
                           const std::vector<std::string>& labels) {
  auto idx = index_of(labels);
  if (r.order.size() != labels.size())
    fail(errc::label_mismatch,
         "order of technique " + r.label + " does not cover all alternatives");
  std::vector<int> pos(labels.size(), -1);
  for (std::size_t p = 0; p < r.order.size(); ++p) {
    auto it = idx.find(r.order[p]);
    if (it == idx.end())
      fail(errc::label_mismatch,
           "unknown alternative " + r.order[p] + " in technique " + r.label);
    if (pos[it->second] != -1)
      fail(errc::label_mismatch,
           "alternative " + r.order[p] + " repeated in technique " + r.label);
    pos[it->second] = static_cast<int>(p);
  }
  return pos;
}

}  // namespace

PreferenceMatrix preference_matrix(const RankingOrder& r,
                                   const std::vector<std::string>& labels) {
  const std::vector<int> pos = positions(r, labels);
  const std::size_t n = labels.size();
  PreferenceMatrix m;
  m.kind = PreferenceMatrix::Kind::Individual;
  m.r.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      m.r[i][j] = pos[i] < pos[j] ? 1 : -1;
    }
  return m;
}

DominanceVector dominance_vector(const RankingOrder& r,
                                 const std::vector<std::string>& labels) {
  const std::vector<int> pos = positions(r, labels);
  const int n = static_cast<int>(labels.size());
  DominanceVector d(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) d[i] = n - pos[i];
  return d;
}

PreferenceMatrix collective_matrix(const std::vector<RankingOrder>& rs,
                                   const std::vector<std::string>& labels) {
  if (rs.empty()) fail(errc::empty_terms, "no ranking orders");
  const std::size_t n = labels.size();
  PreferenceMatrix acc;
  acc.kind = PreferenceMatrix::Kind::Collective;
  acc.r.assign(n, std::vector<int>(n, 0));
  for (const RankingOrder& r : rs) {
    PreferenceMatrix m = preference_matrix(r, labels);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) acc.r[i][j] += m.r[i][j];
  }
  return acc;
}

RankingOrder extract_collective(const PreferenceMatrix& cm,
                                const std::vector<std::string>& labels) {
  const std::size_t n = labels.size();
  if (cm.r.size() != n)
    fail(errc::dimension_mismatch, "matrix size must match label count");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (cm.r[i][j] == 0)
        fail(errc::not_a_total_order,
             "majority tie between " + labels[i] + " and " + labels[j]);

  // The majority tournament is a total order iff win counts are all
  // distinct; otherwise some triple forms a cycle.
  std::vector<int> wins(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && cm.r[i][j] > 0) ++wins[i];
  std::vector<int> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return wins[a] > wins[b]; });
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (wins[idx[k]] == wins[idx[k + 1]]) {
      // find a witnessing cycle a > b > c > a
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c) {
            if (a == b || b == c || a == c) continue;
            if (cm.r[a][b] > 0 && cm.r[b][c] > 0 && cm.r[c][a] > 0)
              fail(errc::not_a_total_order,
                   "majority cycle " + labels[a] + " > " + labels[b] + " > " +
                       labels[c] + " > " + labels[a]);
          }
      fail(errc::not_a_total_order, "majority relation is not transitive");
    }
  }
  RankingOrder out;
  out.label = "collective";
  for (int i : idx) out.order.push_back(labels[i]);
  return out;
}

double preference_distance(const DominanceVector& p1,
                           const DominanceVector& p2, DistanceMetric metric) {
  if (p1.size() != p2.size())
    fail(errc::dimension_mismatch, "dominance vectors differ in length");
  if (metric == DistanceMetric::L1) {
    double d = 0.0;
    for (std::size_t i = 0; i < p1.size(); ++i)
      d += std::abs(p1[i] - p2[i]);
    return d;
  }
  // Set-wise max-min form: directed max over one vector of the min
  // absolute difference against the other, symmetrized.
  auto directed = [](const DominanceVector& a, const DominanceVector& b) {
    int worst = 0;
    for (int x : a) {
      int best = std::abs(x - b[0]);
      for (int y : b) best = std::min(best, std::abs(x - y));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(p1, p2), directed(p2, p1));
}

ComparisonReport sort_techniques(
    const std::vector<RankingOrder>& rs, const std::vector<std::string>& labels,
    const std::vector<std::optional<DominanceVector>>& overrides,
    DistanceMetric metric) {
  if (rs.empty()) fail(errc::empty_terms, "no ranking orders");
  if (!overrides.empty() && overrides.size() != rs.size())
    fail(errc::dimension_mismatch,
         "dominance overrides must align with the technique list");

  ComparisonReport rep;
  rep.labels = labels;
  rep.collective = collective_matrix(rs, labels);
  rep.collective_order = extract_collective(rep.collective, labels);
  const DominanceVector pi_bar = dominance_vector(rep.collective_order, labels);

  for (std::size_t k = 0; k < rs.size(); ++k) {
    TechniqueResult t;
    t.label = rs[k].label;
    t.derived = dominance_vector(rs[k], labels);
    t.dominance =
        (!overrides.empty() && overrides[k]) ? *overrides[k] : t.derived;
    if (t.dominance.size() != labels.size())
      fail(errc::dimension_mismatch,
           "dominance override for " + t.label + " has wrong length");
    if (t.dominance != t.derived) {
      std::ostringstream os;
      os << "technique " << t.label
         << ": supplied dominance vector differs from the one derived from "
            "its order";
      rep.notes.push_back(os.str());
    }
    t.distance = preference_distance(t.dominance, pi_bar, metric);
    rep.techniques.push_back(std::move(t));
  }

  // tiers ascending by distance, labels in input order
  std::vector<double> dists;
  for (const TechniqueResult& t : rep.techniques) dists.push_back(t.distance);
  std::vector<double> uniq = dists;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end(),
                         [](double a, double b) {
                           return std::fabs(a - b) <= 1e-9;
                         }),
             uniq.end());
  for (double d : uniq) {
    Tier tier;
    tier.distance = d;
    for (const TechniqueResult& t : rep.techniques)
      if (std::fabs(t.distance - d) <= 1e-9) tier.labels.push_back(t.label);
    rep.tiers.push_back(std::move(tier));
  }
  // normalized inverse-rank weights by tier index (1-based)
  double norm = 0.0;
  for (TechniqueResult& t : rep.techniques) {
    for (std::size_t ti = 0; ti < rep.tiers.size(); ++ti)
      if (std::fabs(rep.tiers[ti].distance - t.distance) <= 1e-9)
        t.weight = 1.0 / static_cast<double>(ti + 1);
    norm += t.weight;
  }
  for (TechniqueResult& t : rep.techniques) t.weight /= norm;
  return rep;
}

}  // namespace hohf
