#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hohf/errors.hpp"

namespace hohf {

// Validation regime. Lenient permits degrees outside [0,1] for the
// crisp/triangular/hesitant variants; intermediates of a Choquet
// aggregation over a non-monotone measure need this.
enum class Mode { Strict, Lenient };

struct Crisp {
  double m = 0.0;
};

// Triangular fuzzy number (smallest possible, most promising, largest
// possible value).
struct Tfn {
  double a1 = 0.0, a2 = 0.0, a3 = 0.0;
};

// Hesitant fuzzy element: possible membership degrees, kept sorted
// ascending. Degrees may repeat.
struct Hfe {
  std::vector<double> values;
};

// Intuitionistic membership/non-membership pair.
struct IntuPair {
  double mu = 0.0, nu = 1.0;
};

enum class Kind { Crisp, Tfn, Hfe, IntuPair };

// One generalized fuzzy membership value. Immutable after construction;
// use the factories, which normalize representation (HFE sorting).
class GValue {
 public:
  using Storage = std::variant<Crisp, Tfn, Hfe, IntuPair>;

  static GValue crisp(double m) { return GValue(Crisp{m}); }
  static GValue tfn(double a1, double a2, double a3) {
    return GValue(Tfn{a1, a2, a3});
  }
  static GValue hfe(std::vector<double> values);
  // Closed interval [a, b], represented as the degenerate triangle
  // (a, (a+b)/2, b).
  static GValue interval(double a, double b) {
    return tfn(a, (a + b) / 2.0, b);
  }
  static GValue intu(double mu, double nu) { return GValue(IntuPair{mu, nu}); }

  Kind kind() const { return static_cast<Kind>(v_.index()); }
  const Storage& storage() const { return v_; }

  const Crisp& as_crisp() const { return std::get<Crisp>(v_); }
  const Tfn& as_tfn() const { return std::get<Tfn>(v_); }
  const Hfe& as_hfe() const { return std::get<Hfe>(v_); }
  const IntuPair& as_intu() const { return std::get<IntuPair>(v_); }

 private:
  explicit GValue(Storage v) : v_(std::move(v)) {}
  Storage v_;
};

const char* kind_name(Kind k);

// Scalar multiplication. Crisp/Tfn/Hfe scale linearly; the
// intuitionistic pair uses lambda<mu,nu> = <1-(1-mu)^l, nu^l>, the rule
// consistent with the worked aggregation numbers. Negative lambda is
// allowed only in lenient mode and never for IntuPair.
GValue gv_scale(double lambda, const GValue& g, Mode mode = Mode::Lenient);

// The alternative power rule <mu^l, 1-(1-nu)^l> for intuitionistic
// pairs. Kept alongside gv_scale; it does not reproduce the worked
// aggregation numbers, so it is not the default.
IntuPair intu_power(const IntuPair& p, double lambda);

// Probabilistic-sum addition. Operands must share a variant; HFEs must
// share cardinality (index-paired sum).
GValue gv_oplus(const GValue& a, const GValue& b);

// Defuzzified score: crisp value, corner mean, member mean, or the
// hesitancy degree 1-mu-nu.
double gv_score(const GValue& g);

enum class Violation {
  DegreeOutOfRange,
  CornersNotSorted,
  EmptyHfe,
  MuNuSumExceedsOne,
};

struct ViolationRecord {
  Violation code;
  std::string detail;
};

const char* violation_name(Violation v);

std::vector<ViolationRecord> gv_validate(const GValue& g, Mode mode);

// Componentwise equality at absolute tolerance; used for HOHFE
// de-duplication.
bool gv_equal(const GValue& a, const GValue& b, double tol = 1e-9);

}  // namespace hohf
