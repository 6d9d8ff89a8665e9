#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hohf {

// One technique's outcome: a strict total order over alternatives,
// best first.
struct RankingOrder {
  std::string label;
  std::vector<std::string> order;
};

struct PreferenceMatrix {
  enum class Kind { Individual, Collective };
  Kind kind = Kind::Individual;
  std::vector<std::vector<int>> r;  // antisymmetric, zero diagonal
};

// Per-alternative count of dominated alternatives plus one, indexed by
// the canonical alternative label order. Always a permutation of 1..n.
using DominanceVector = std::vector<int>;

PreferenceMatrix preference_matrix(const RankingOrder& r,
                                   const std::vector<std::string>& labels);

DominanceVector dominance_vector(const RankingOrder& r,
                                 const std::vector<std::string>& labels);

// Componentwise integer sum of the individual matrices.
PreferenceMatrix collective_matrix(const std::vector<RankingOrder>& rs,
                                   const std::vector<std::string>& labels);

// Majority rule: i precedes j iff r_ij > 0. Fails with
// not_a_total_order on a zero entry or a Condorcet cycle.
RankingOrder extract_collective(const PreferenceMatrix& cm,
                                const std::vector<std::string>& labels);

enum class DistanceMetric { L1, MaxMin };

// L1: sum of componentwise absolute differences. MaxMin: the set-wise
// max-min form, which nulls on permutations of the same value set.
double preference_distance(const DominanceVector& p1,
                           const DominanceVector& p2,
                           DistanceMetric metric = DistanceMetric::L1);

struct TechniqueResult {
  std::string label;
  DominanceVector dominance;  // the vector the distance was computed on
  DominanceVector derived;    // derived from the order
  double distance = 0.0;
  double weight = 0.0;  // normalized inverse tier index
};

struct Tier {
  double distance = 0.0;
  std::vector<std::string> labels;  // input order
};

struct ComparisonReport {
  std::vector<std::string> labels;  // alternative labels
  std::vector<TechniqueResult> techniques;
  PreferenceMatrix collective;
  RankingOrder collective_order;
  std::vector<Tier> tiers;  // ascending distance, best first
  std::vector<std::string> notes;
};

// Full comparison pipeline. overrides, when nonempty, supplies an
// explicit dominance vector per technique (index-aligned with rs) used
// for the distance in place of the derived one; a mismatch against the
// derived vector is reported as a note.
ComparisonReport sort_techniques(
    const std::vector<RankingOrder>& rs,
    const std::vector<std::string>& labels,
    const std::vector<std::optional<DominanceVector>>& overrides = {},
    DistanceMetric metric = DistanceMetric::L1);

}  // namespace hohf
