#include "hohf/hohfe.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace hohf {

namespace {

void push_dedup(std::vector<GValue>& out, const GValue& g) {
  for (const GValue& e : out)
    if (gv_equal(e, g)) return;
  out.push_back(g);
}

}  // namespace

HOHFE HOHFE::of(std::vector<GValue> elements) {
  if (elements.empty())
    fail(errc::validation_error, "HOHFE must hold at least one element");
  std::vector<GValue> dedup;
  dedup.reserve(elements.size());
  for (const GValue& g : elements) push_dedup(dedup, g);
  return HOHFE(std::move(dedup));
}

double hohfe_score(const HOHFE& h) {
  double s = 0.0;
  for (const GValue& g : h.elements()) s += gv_score(g);
  return s / static_cast<double>(h.size());
}

Ordering hohfe_compare(const HOHFE& h1, const HOHFE& h2) {
  double s1 = hohfe_score(h1);
  double s2 = hohfe_score(h2);
  if (std::fabs(s1 - s2) <= 1e-9) return Ordering::Equivalent;
  return s1 > s2 ? Ordering::Precedes : Ordering::Succeeds;
}

HOHFE hohfe_scale(double lambda, const HOHFE& h, Mode mode) {
  std::vector<GValue> scaled;
  scaled.reserve(h.size());
  for (const GValue& g : h.elements()) scaled.push_back(gv_scale(lambda, g, mode));
  return HOHFE::of(std::move(scaled));
}

namespace {

// Cross-product oplus of per-term element lists, keeping term order.
std::vector<GValue> cross_oplus(const std::vector<std::vector<GValue>>& lists) {
  std::vector<GValue> acc = lists.front();
  for (std::size_t t = 1; t < lists.size(); ++t) {
    std::vector<GValue> next;
    next.reserve(acc.size() * lists[t].size());
    for (const GValue& a : acc)
      for (const GValue& b : lists[t]) next.push_back(gv_oplus(a, b));
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

HOHFE hohfe_combine(const std::vector<WeightedTerm>& terms,
                    CombinePolicy policy, Mode mode) {
  if (terms.empty()) fail(errc::empty_terms, "no terms to combine");

  // Zero-weight terms are the oplus identity and are elided before
  // class partitioning.
  std::vector<HOHFE> scaled;
  for (const WeightedTerm& t : terms) {
    if (t.weight == 0.0) continue;
    scaled.push_back(hohfe_scale(t.weight, t.element, mode));
  }
  if (scaled.empty()) {
    // all weights zero: combine degenerates to the identity of the
    // single class present, which we approximate by scaling the first
    // term by zero
    return hohfe_scale(0.0, terms.front().element, mode);
  }

  if (policy == CombinePolicy::StrictUniform) {
    Kind k = scaled.front().elements().front().kind();
    std::vector<std::vector<GValue>> lists;
    for (const HOHFE& h : scaled) {
      for (const GValue& g : h.elements())
        if (g.kind() != k)
          fail(errc::mixed_types,
               "strict-uniform combine requires a single variant");
      lists.push_back(h.elements());
    }
    return HOHFE::of(cross_oplus(lists));
  }

  // Typewise: per variant class, cross-product across the terms that
  // contribute to that class; union the classes.
  std::vector<GValue> result;
  static constexpr std::array<Kind, 4> kinds = {Kind::Crisp, Kind::Tfn,
                                                Kind::Hfe, Kind::IntuPair};
  for (Kind k : kinds) {
    std::vector<std::vector<GValue>> lists;
    for (const HOHFE& h : scaled) {
      std::vector<GValue> of_class;
      for (const GValue& g : h.elements())
        if (g.kind() == k) of_class.push_back(g);
      if (!of_class.empty()) lists.push_back(std::move(of_class));
    }
    if (lists.empty()) continue;
    for (GValue& g : cross_oplus(lists)) result.push_back(std::move(g));
  }
  return HOHFE::of(std::move(result));
}

double hohfs_score(const std::vector<HOHFE>& rows) {
  if (rows.empty()) fail(errc::empty_terms, "no HOHFEs to score");
  double s = 0.0;
  for (const HOHFE& h : rows) s += hohfe_score(h);
  return s / static_cast<double>(rows.size());
}

}  // namespace hohf
