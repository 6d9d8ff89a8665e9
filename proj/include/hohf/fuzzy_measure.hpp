#pragma once

#include <cstdint>
#include <vector>

#include "hohf/gvalue.hpp"

namespace hohf {

struct MonotonicityWarning {
  std::uint32_t subset_a = 0;  // A strictly contained in B
  std::uint32_t subset_b = 0;
  double value_a = 0.0;
  double value_b = 0.0;
};

// Sign convention for the disjoint-union recurrence
// mu(A u B) = mu(A) + mu(B) -/+ rho mu(A) mu(B).
enum class RhoSign { Minus, Plus };

// Non-additive set function over the criterion index set {0..n-1},
// indexed by bitmask (criterion j = bit j). Immutable after
// construction.
class FuzzyMeasure {
 public:
  // values must be total over all 2^n subsets, values[0] == 0 exactly.
  // Strict mode additionally requires monotonicity and a unit total;
  // lenient records monotonicity violations (and a non-unit total) as
  // warnings instead.
  static FuzzyMeasure from_table(int n, std::vector<double> values,
                                 Mode mode = Mode::Strict);

  int n() const { return n_; }
  std::uint32_t full_set() const { return (1u << n_) - 1u; }
  double at(std::uint32_t subset) const { return values_[subset]; }
  const std::vector<double>& values() const { return values_; }
  Mode mode() const { return mode_; }
  const std::vector<MonotonicityWarning>& warnings() const {
    return warnings_;
  }
  bool nonunit_total() const { return nonunit_total_; }

  // Empty placeholder; only from_table produces a usable measure.
  FuzzyMeasure() = default;

 private:
  int n_ = 0;
  std::vector<double> values_;
  Mode mode_ = Mode::Strict;
  std::vector<MonotonicityWarning> warnings_;
  bool nonunit_total_ = false;
};

// Builds a measure from singleton weights by folding the rho
// recurrence over disjoint unions in index order; fails unless the
// resulting mu(X) is 1 within 1e-9.
FuzzyMeasure measure_rho_rule(const std::vector<double>& singletons,
                              double rho, RhoSign sign = RhoSign::Minus,
                              Mode mode = Mode::Strict);

// Finds the rho in (-1, inf) normalizing the rho-rule measure, by
// bracketing plus bisection to 1e-12. Returns 0 when the singletons
// already sum to 1.
double measure_solve_rho(const std::vector<double>& singletons,
                         RhoSign sign = RhoSign::Minus);

enum class MeasureClass { Additive, Subadditive, Superadditive, General };

const char* measure_class_name(MeasureClass c);

// Exhaustive check over all disjoint nonempty pairs at tolerance 1e-9.
MeasureClass measure_classify(const FuzzyMeasure& m);

// w_i = mu(A_sigma(i)) - mu(A_sigma(i-1)) where A_sigma(k) is the set
// of the first k criteria in sigma order. sigma holds 0-based criterion
// indices.
std::vector<double> marginal_weights(const FuzzyMeasure& m,
                                     const std::vector<int>& sigma);

}  // namespace hohf
