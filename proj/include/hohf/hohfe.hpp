#pragma once

#include <string>
#include <vector>

#include "hohf/gvalue.hpp"

namespace hohf {

// Higher-order hesitant fuzzy element: the nonempty, de-duplicated
// collection of generalized fuzzy values evaluating one alternative on
// one criterion. Elements keep insertion order.
class HOHFE {
 public:
  // Empty placeholder; only HOHFE::of produces a valid element.
  HOHFE() = default;

  static HOHFE of(std::vector<GValue> elements);

  const std::vector<GValue>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

 private:
  explicit HOHFE(std::vector<GValue> els) : elements_(std::move(els)) {}
  std::vector<GValue> elements_;
};

struct DecisionMatrix {
  std::vector<std::string> alternatives;
  std::vector<std::string> criteria;
  // cells[i][j]: alternative i on criterion j
  std::vector<std::vector<HOHFE>> cells;
};

// One summand of the aggregation: a Choquet marginal weight and the
// element it scales. Weight may be negative in lenient mode.
struct WeightedTerm {
  double weight = 0.0;
  HOHFE element;
};

enum class CombinePolicy {
  // Partition scaled elements by variant class; cross-product within a
  // class across the terms that contribute to it. A class carried by a
  // single term passes through scaled but uncombined.
  Typewise,
  // All elements of all terms must share one variant.
  StrictUniform,
};

double hohfe_score(const HOHFE& h);

enum class Ordering { Precedes, Equivalent, Succeeds };

// Orders h1 against h2 by score; Equivalent on ties within 1e-9.
Ordering hohfe_compare(const HOHFE& h1, const HOHFE& h2);

HOHFE hohfe_scale(double lambda, const HOHFE& h, Mode mode = Mode::Lenient);

HOHFE hohfe_combine(const std::vector<WeightedTerm>& terms,
                    CombinePolicy policy = CombinePolicy::Typewise,
                    Mode mode = Mode::Lenient);

// Mean of per-criterion HOHFE scores.
double hohfs_score(const std::vector<HOHFE>& rows);

}  // namespace hohf
