#include "hohf/gvalue.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hohf {

const char* errc_name(errc c) {
  switch (c) {
    case errc::ok: return "OK";
    case errc::parse_error: return "PARSE_ERROR";
    case errc::schema_error: return "SCHEMA_ERROR";
    case errc::validation_error: return "VALIDATION_ERROR";
    case errc::type_mismatch: return "TYPE_MISMATCH";
    case errc::cardinality_mismatch: return "CARDINALITY_MISMATCH";
    case errc::mixed_types: return "MIXED_TYPES";
    case errc::empty_terms: return "EMPTY_TERMS";
    case errc::negative_lambda: return "NEGATIVE_LAMBDA";
    case errc::out_of_range: return "OUT_OF_RANGE";
    case errc::missing_subset: return "MISSING_SUBSET";
    case errc::bad_boundary: return "BAD_BOUNDARY";
    case errc::monotonicity_violation: return "MONOTONICITY_VIOLATION";
    case errc::value_out_of_range: return "VALUE_OUT_OF_RANGE";
    case errc::not_normalized: return "NOT_NORMALIZED";
    case errc::no_root: return "NO_ROOT";
    case errc::dimension_mismatch: return "DIMENSION_MISMATCH";
    case errc::negative_weight_unsupported:
      return "NEGATIVE_WEIGHT_UNSUPPORTED";
    case errc::label_mismatch: return "LABEL_MISMATCH";
    case errc::not_a_total_order: return "NOT_A_TOTAL_ORDER";
    case errc::io_error: return "IO_ERROR";
    case errc::internal_error: return "INTERNAL_ERROR";
  }
  return "UNKNOWN";
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Crisp: return "crisp";
    case Kind::Tfn: return "tfn";
    case Kind::Hfe: return "hfe";
    case Kind::IntuPair: return "ifs";
  }
  return "?";
}

const char* violation_name(Violation v) {
  switch (v) {
    case Violation::DegreeOutOfRange: return "DEGREE_OUT_OF_RANGE";
    case Violation::CornersNotSorted: return "CORNERS_NOT_SORTED";
    case Violation::EmptyHfe: return "EMPTY_HFE";
    case Violation::MuNuSumExceedsOne: return "MU_NU_SUM_EXCEEDS_ONE";
  }
  return "?";
}

GValue GValue::hfe(std::vector<double> values) {
  if (values.empty())
    fail(errc::validation_error, "HFE must hold at least one degree");
  std::sort(values.begin(), values.end());
  return GValue(Hfe{std::move(values)});
}

namespace {

double psum(double a, double b) { return a + b - a * b; }

// Intuitionistic pairs scale by real exponentiation, so their
// components must stay in [0,1] regardless of mode.
void check_intu_range(const IntuPair& p) {
  if (p.mu < 0.0 || p.mu > 1.0 || p.nu < 0.0 || p.nu > 1.0)
    fail(errc::value_out_of_range,
         "intuitionistic pair components must lie in [0,1]");
}

}  // namespace

GValue gv_scale(double lambda, const GValue& g, Mode mode) {
  if (lambda < 0.0) {
    if (g.kind() == Kind::IntuPair)
      fail(errc::negative_lambda,
           "negative scalar is undefined for intuitionistic pairs");
    if (mode == Mode::Strict)
      fail(errc::out_of_range, "negative scalar requires lenient mode");
  }
  switch (g.kind()) {
    case Kind::Crisp:
      return GValue::crisp(lambda * g.as_crisp().m);
    case Kind::Tfn: {
      const Tfn& t = g.as_tfn();
      return GValue::tfn(lambda * t.a1, lambda * t.a2, lambda * t.a3);
    }
    case Kind::Hfe: {
      std::vector<double> scaled = g.as_hfe().values;
      for (double& v : scaled) v *= lambda;
      return GValue::hfe(std::move(scaled));
    }
    case Kind::IntuPair: {
      const IntuPair& p = g.as_intu();
      check_intu_range(p);
      return GValue::intu(1.0 - std::pow(1.0 - p.mu, lambda),
                          std::pow(p.nu, lambda));
    }
  }
  fail(errc::internal_error, "unreachable variant");
}

IntuPair intu_power(const IntuPair& p, double lambda) {
  if (lambda < 0.0)
    fail(errc::negative_lambda, "negative exponent for intuitionistic pair");
  check_intu_range(p);
  return IntuPair{std::pow(p.mu, lambda),
                  1.0 - std::pow(1.0 - p.nu, lambda)};
}

GValue gv_oplus(const GValue& a, const GValue& b) {
  if (a.kind() != b.kind())
    fail(errc::type_mismatch,
         std::string("cannot add ") + kind_name(a.kind()) + " to " +
             kind_name(b.kind()));
  switch (a.kind()) {
    case Kind::Crisp:
      return GValue::crisp(psum(a.as_crisp().m, b.as_crisp().m));
    case Kind::Tfn: {
      const Tfn& x = a.as_tfn();
      const Tfn& y = b.as_tfn();
      return GValue::tfn(psum(x.a1, y.a1), psum(x.a2, y.a2),
                         psum(x.a3, y.a3));
    }
    case Kind::Hfe: {
      const auto& x = a.as_hfe().values;
      const auto& y = b.as_hfe().values;
      if (x.size() != y.size())
        fail(errc::cardinality_mismatch,
             "HFE addition needs equal cardinalities");
      std::vector<double> out(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) out[i] = psum(x[i], y[i]);
      return GValue::hfe(std::move(out));
    }
    case Kind::IntuPair: {
      const IntuPair& x = a.as_intu();
      const IntuPair& y = b.as_intu();
      return GValue::intu(psum(x.mu, y.mu), x.nu * y.nu);
    }
  }
  fail(errc::internal_error, "unreachable variant");
}

double gv_score(const GValue& g) {
  switch (g.kind()) {
    case Kind::Crisp:
      return g.as_crisp().m;
    case Kind::Tfn: {
      const Tfn& t = g.as_tfn();
      return (t.a1 + t.a2 + t.a3) / 3.0;
    }
    case Kind::Hfe: {
      const auto& vals = g.as_hfe().values;
      double s = 0.0;
      for (double v : vals) s += v;
      return s / static_cast<double>(vals.size());
    }
    case Kind::IntuPair: {
      const IntuPair& p = g.as_intu();
      return 1.0 - p.mu - p.nu;
    }
  }
  fail(errc::internal_error, "unreachable variant");
}

std::vector<ViolationRecord> gv_validate(const GValue& g, Mode mode) {
  std::vector<ViolationRecord> out;
  auto degree = [&](const char* field, double v) {
    if (mode == Mode::Strict && (v < 0.0 || v > 1.0)) {
      std::ostringstream os;
      os << field << " = " << v << " outside [0,1]";
      out.push_back({Violation::DegreeOutOfRange, os.str()});
    }
  };
  switch (g.kind()) {
    case Kind::Crisp:
      degree("m", g.as_crisp().m);
      break;
    case Kind::Tfn: {
      const Tfn& t = g.as_tfn();
      degree("a1", t.a1);
      degree("a2", t.a2);
      degree("a3", t.a3);
      if (mode == Mode::Strict && !(t.a1 <= t.a2 && t.a2 <= t.a3)) {
        std::ostringstream os;
        os << "corners (" << t.a1 << ", " << t.a2 << ", " << t.a3
           << ") violate a1 <= a2 <= a3";
        out.push_back({Violation::CornersNotSorted, os.str()});
      }
      break;
    }
    case Kind::Hfe: {
      const auto& vals = g.as_hfe().values;
      if (vals.empty()) out.push_back({Violation::EmptyHfe, "no degrees"});
      for (double v : vals) degree("degree", v);
      break;
    }
    case Kind::IntuPair: {
      const IntuPair& p = g.as_intu();
      // in-range regardless of mode: scaling uses real exponentiation
      if (p.mu < 0.0 || p.mu > 1.0) {
        std::ostringstream os;
        os << "mu = " << p.mu << " outside [0,1]";
        out.push_back({Violation::DegreeOutOfRange, os.str()});
      }
      if (p.nu < 0.0 || p.nu > 1.0) {
        std::ostringstream os;
        os << "nu = " << p.nu << " outside [0,1]";
        out.push_back({Violation::DegreeOutOfRange, os.str()});
      }
      if (mode == Mode::Strict && p.mu + p.nu > 1.0) {
        std::ostringstream os;
        os << "mu + nu = " << p.mu + p.nu << " exceeds 1";
        out.push_back({Violation::MuNuSumExceedsOne, os.str()});
      }
      break;
    }
  }
  return out;
}

bool gv_equal(const GValue& a, const GValue& b, double tol) {
  if (a.kind() != b.kind()) return false;
  auto close = [tol](double x, double y) { return std::fabs(x - y) <= tol; };
  switch (a.kind()) {
    case Kind::Crisp:
      return close(a.as_crisp().m, b.as_crisp().m);
    case Kind::Tfn: {
      const Tfn& x = a.as_tfn();
      const Tfn& y = b.as_tfn();
      return close(x.a1, y.a1) && close(x.a2, y.a2) && close(x.a3, y.a3);
    }
    case Kind::Hfe: {
      const auto& x = a.as_hfe().values;
      const auto& y = b.as_hfe().values;
      if (x.size() != y.size()) return false;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (!close(x[i], y[i])) return false;
      return true;
    }
    case Kind::IntuPair: {
      const IntuPair& x = a.as_intu();
      const IntuPair& y = b.as_intu();
      return close(x.mu, y.mu) && close(x.nu, y.nu);
    }
  }
  return false;
}

}  // namespace hohf
