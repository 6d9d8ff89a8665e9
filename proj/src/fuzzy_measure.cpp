#include "hohf/fuzzy_measure.hpp"

#include <cmath>
#include <sstream>

namespace hohf {

const char* measure_class_name(MeasureClass c) {
  switch (c) {
    case MeasureClass::Additive: return "additive";
    case MeasureClass::Subadditive: return "subadditive";
    case MeasureClass::Superadditive: return "superadditive";
    case MeasureClass::General: return "general";
  }
  return "?";
}

namespace {

std::string subset_str(std::uint32_t s, int n) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int j = 0; j < n; ++j) {
    if (!(s >> j & 1u)) continue;
    if (!first) os << ',';
    os << 'x' << (j + 1);
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace

FuzzyMeasure FuzzyMeasure::from_table(int n, std::vector<double> values,
                                      Mode mode) {
  if (n < 1 || n > 24)
    fail(errc::schema_error, "criterion count must be in 1..24");
  const std::uint32_t size = 1u << n;
  if (values.size() != size) {
    std::ostringstream os;
    os << "measure table holds " << values.size() << " entries, expected "
       << size;
    fail(errc::missing_subset, os.str());
  }
  if (values[0] != 0.0)
    fail(errc::bad_boundary, "mu(empty set) must be exactly 0");
  for (std::uint32_t s = 0; s < size; ++s) {
    if (values[s] < 0.0 || values[s] > 1.0) {
      std::ostringstream os;
      os << "mu(" << subset_str(s, n) << ") = " << values[s]
         << " outside [0,1]";
      fail(errc::value_out_of_range, os.str());
    }
  }

  FuzzyMeasure m;
  m.n_ = n;
  m.mode_ = mode;
  m.nonunit_total_ = values[size - 1] != 1.0;
  if (m.nonunit_total_ && mode == Mode::Strict)
    fail(errc::bad_boundary, "mu(X) must be exactly 1 in strict mode");

  // Every ordered violating pair A strictly inside B.
  for (std::uint32_t b = 1; b < size; ++b) {
    // iterate proper subsets of b
    for (std::uint32_t a = (b - 1) & b; a != 0; a = (a - 1) & b) {
      if (values[a] > values[b] + 1e-15)
        m.warnings_.push_back({a, b, values[a], values[b]});
    }
    if (values[0] > values[b] + 1e-15)
      m.warnings_.push_back({0, b, values[0], values[b]});
  }
  if (!m.warnings_.empty() && mode == Mode::Strict) {
    const MonotonicityWarning& w = m.warnings_.front();
    std::ostringstream os;
    os << "mu(" << subset_str(w.subset_a, n) << ") = " << w.value_a << " > mu("
       << subset_str(w.subset_b, n) << ") = " << w.value_b;
    fail(errc::monotonicity_violation, os.str());
  }
  m.values_ = std::move(values);
  return m;
}

namespace {

double rho_table_total(const std::vector<double>& singletons, double rho,
                       RhoSign sign, std::vector<double>* table_out) {
  const int n = static_cast<int>(singletons.size());
  const std::uint32_t size = 1u << n;
  std::vector<double> values(size, 0.0);
  const double s = sign == RhoSign::Minus ? -1.0 : 1.0;
  for (std::uint32_t mask = 1; mask < size; ++mask) {
    int j = 0;
    while (!(mask >> j & 1u)) ++j;
    const std::uint32_t rest = mask & ~(1u << j);
    const double a = values[rest];
    const double b = singletons[j];
    values[mask] = a + b + s * rho * a * b;
  }
  const double total = values[size - 1];
  if (table_out) *table_out = std::move(values);
  return total;
}

}  // namespace

FuzzyMeasure measure_rho_rule(const std::vector<double>& singletons,
                              double rho, RhoSign sign, Mode mode) {
  if (singletons.empty())
    fail(errc::schema_error, "at least one singleton weight required");
  if (rho <= -1.0)
    fail(errc::out_of_range, "rho must exceed -1");
  for (double v : singletons)
    if (v < 0.0 || v > 1.0)
      fail(errc::value_out_of_range, "singleton weights must lie in [0,1]");

  std::vector<double> values;
  const double total = rho_table_total(singletons, rho, sign, &values);
  if (std::fabs(total - 1.0) > 1e-9) {
    std::ostringstream os;
    os << "mu(X) = " << total << " under rho = " << rho;
    fail(errc::not_normalized, os.str());
  }
  values.back() = 1.0;  // pin the boundary exactly
  return FuzzyMeasure::from_table(static_cast<int>(singletons.size()),
                                  std::move(values), mode);
}

double measure_solve_rho(const std::vector<double>& singletons, RhoSign sign) {
  if (singletons.size() < 2)
    fail(errc::schema_error, "need at least two singleton weights");
  double sum = 0.0;
  for (double v : singletons) {
    if (v < 0.0 || v > 1.0)
      fail(errc::value_out_of_range, "singleton weights must lie in [0,1]");
    sum += v;
  }
  if (std::fabs(sum - 1.0) <= 1e-12) return 0.0;

  // Substitute t = rho (plus sign) or t = -rho (minus sign); either
  // way the total is (prod(1 + t s_i) - 1)/t, strictly increasing in t,
  // and the generated table stays inside [0,1] only for t > -1. For
  // the minus-sign form this additionally caps rho below 1.
  const double flip = sign == RhoSign::Minus ? -1.0 : 1.0;
  auto residual = [&](double t) {
    return rho_table_total(singletons, flip * t, sign, nullptr) - 1.0;
  };

  double lo = -1.0 + 1e-9;
  double hi = sign == RhoSign::Minus ? 1.0 - 1e-9 : 1e6;
  double flo = residual(lo);
  double fhi = residual(hi);
  if (flo * fhi > 0.0)
    fail(errc::no_root, "no normalizing rho for these singleton weights");
  while (hi - lo > 1e-12) {
    double mid = 0.5 * (lo + hi);
    double fmid = residual(mid);
    if (fmid == 0.0) return flip * mid;
    if (flo * fmid <= 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fmid;
    }
  }
  return flip * 0.5 * (lo + hi);
}

MeasureClass measure_classify(const FuzzyMeasure& m) {
  const std::uint32_t size = 1u << m.n();
  bool always_eq = true, always_sub = true, always_super = true;
  for (std::uint32_t a = 1; a < size; ++a) {
    const std::uint32_t comp = (size - 1u) & ~a;
    // disjoint nonempty b: subsets of the complement of a
    for (std::uint32_t b = comp; b != 0; b = (b - 1) & comp) {
      const double lhs = m.at(a | b);
      const double rhs = m.at(a) + m.at(b);
      if (std::fabs(lhs - rhs) > 1e-9) {
        always_eq = false;
        if (lhs > rhs) always_sub = false;
        else always_super = false;
      }
      if (!always_sub && !always_super) return MeasureClass::General;
    }
  }
  if (always_eq) return MeasureClass::Additive;
  if (always_sub) return MeasureClass::Subadditive;
  return MeasureClass::Superadditive;
}

std::vector<double> marginal_weights(const FuzzyMeasure& m,
                                     const std::vector<int>& sigma) {
  if (static_cast<int>(sigma.size()) != m.n())
    fail(errc::dimension_mismatch, "sigma length must equal criterion count");
  std::vector<bool> seen(m.n(), false);
  for (int i : sigma) {
    if (i < 0 || i >= m.n() || seen[i])
      fail(errc::dimension_mismatch, "sigma is not a permutation");
    seen[i] = true;
  }
  std::vector<double> w(m.n());
  std::uint32_t prefix = 0;
  double prev = 0.0;
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    prefix |= 1u << sigma[k];
    const double cur = m.at(prefix);
    w[k] = cur - prev;
    prev = cur;
  }
  return w;
}

}  // namespace hohf
