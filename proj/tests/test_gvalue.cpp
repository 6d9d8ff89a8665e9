#include "doctest.h"

#include <cmath>

#include "hohf/gvalue.hpp"
#include "test_util.hpp"

using namespace hohf;
using testutil::uniform;
using testutil::uniform_int;

namespace {

GValue random_value(Kind k) {
  switch (k) {
    case Kind::Crisp:
      return GValue::crisp(uniform(0.0, 1.0));
    case Kind::Tfn: {
      double a = uniform(0.0, 1.0), b = uniform(0.0, 1.0),
             c = uniform(0.0, 1.0);
      if (a > b) std::swap(a, b);
      if (b > c) std::swap(b, c);
      if (a > b) std::swap(a, b);
      return GValue::tfn(a, b, c);
    }
    case Kind::Hfe: {
      std::vector<double> vals(uniform_int(1, 4));
      for (double& v : vals) v = uniform(0.0, 1.0);
      return GValue::hfe(std::move(vals));
    }
    case Kind::IntuPair: {
      double mu = uniform(0.0, 1.0);
      double nu = uniform(0.0, 1.0 - mu);
      return GValue::intu(mu, nu);
    }
  }
  return GValue::crisp(0.0);
}

GValue random_value() {
  return random_value(static_cast<Kind>(uniform_int(0, 3)));
}

GValue same_shape_random(const GValue& g) {
  if (g.kind() != Kind::Hfe) return random_value(g.kind());
  std::vector<double> vals(g.as_hfe().values.size());
  for (double& v : vals) v = uniform(0.0, 1.0);
  return GValue::hfe(std::move(vals));
}

GValue zero_of(const GValue& g) {
  switch (g.kind()) {
    case Kind::Crisp: return GValue::crisp(0.0);
    case Kind::Tfn: return GValue::tfn(0.0, 0.0, 0.0);
    case Kind::Hfe:
      return GValue::hfe(std::vector<double>(g.as_hfe().values.size(), 0.0));
    case Kind::IntuPair: return GValue::intu(0.0, 1.0);
  }
  return GValue::crisp(0.0);
}

}  // namespace

TEST_CASE("scaling matches the worked examples") {
  GValue p = gv_scale(0.2, GValue::intu(0.2, 0.5));
  CHECK(p.as_intu().mu == doctest::Approx(0.0436).epsilon(0.002));
  CHECK(p.as_intu().nu == doctest::Approx(0.8706).epsilon(0.002));

  GValue t = gv_scale(0.3, GValue::tfn(0.5, 0.7, 0.7));
  CHECK(gv_equal(t, GValue::tfn(0.15, 0.21, 0.21), 1e-12));

  GValue h = gv_scale(0.7, GValue::hfe({0.3, 0.4, 0.5}));
  CHECK(gv_equal(h, GValue::hfe({0.21, 0.28, 0.35}), 1e-12));
}

TEST_CASE("scaling by one is the identity") {
  for (int i = 0; i < 200; ++i) {
    GValue g = random_value();
    CHECK(gv_equal(gv_scale(1.0, g), g, 1e-12));
  }
}

TEST_CASE("intu scaling rejects negative lambda; lenient allows it elsewhere") {
  CHECK_THROWS_AS(gv_scale(-0.5, GValue::intu(0.2, 0.5)), error);
  CHECK_THROWS_AS(gv_scale(-0.5, GValue::tfn(0.1, 0.2, 0.3), Mode::Strict),
                  error);
  GValue t = gv_scale(-0.1, GValue::tfn(0.5, 0.7, 0.7));
  CHECK(gv_equal(t, GValue::tfn(-0.05, -0.07, -0.07), 1e-12));
  CHECK(gv_validate(t, Mode::Lenient).empty());
}

TEST_CASE("the printed power rule differs from the scaling rule") {
  IntuPair p = intu_power(IntuPair{0.2, 0.5}, 0.2);
  CHECK(p.mu == doctest::Approx(std::pow(0.2, 0.2)));
  CHECK(p.nu == doctest::Approx(1.0 - std::pow(0.5, 0.2)));
  GValue s = gv_scale(0.2, GValue::intu(0.2, 0.5));
  CHECK(std::fabs(p.mu - s.as_intu().mu) > 0.1);
}

TEST_CASE("oplus golden values") {
  GValue r = gv_oplus(GValue::intu(0.0436, 0.8706), GValue::intu(0.1330, 0.7579));
  CHECK(r.as_intu().mu == doctest::Approx(0.1708).epsilon(1e-3));
  CHECK(r.as_intu().nu == doctest::Approx(0.6598).epsilon(1e-3));

  GValue t = gv_oplus(GValue::tfn(0.15, 0.21, 0.21), GValue::tfn(0.14, 0.21, 0.28));
  CHECK(gv_equal(t, GValue::tfn(0.269, 0.3759, 0.4312), 1e-12));
}

TEST_CASE("oplus requires matching variants and cardinalities") {
  CHECK_THROWS_AS(gv_oplus(GValue::crisp(0.5), GValue::tfn(0.1, 0.2, 0.3)),
                  error);
  CHECK_THROWS_AS(gv_oplus(GValue::hfe({0.1, 0.2}), GValue::hfe({0.1})),
                  error);
}

TEST_CASE("oplus commutative and associative, zero is the identity") {
  for (int i = 0; i < 500; ++i) {
    GValue a = random_value();
    GValue b = same_shape_random(a);
    GValue c = same_shape_random(a);
    CHECK(gv_equal(gv_oplus(a, b), gv_oplus(b, a), 1e-12));
    CHECK(gv_equal(gv_oplus(gv_oplus(a, b), c), gv_oplus(a, gv_oplus(b, c)),
                   1e-12));
    CHECK(gv_equal(gv_oplus(zero_of(a), a), a, 1e-12));
  }
}

TEST_CASE("oplus monotone on the unit square") {
  for (int i = 0; i < 500; ++i) {
    double a = uniform(0.0, 1.0), b = uniform(0.0, 1.0);
    double a2 = uniform(a, 1.0);
    double s1 = gv_oplus(GValue::crisp(a), GValue::crisp(b)).as_crisp().m;
    double s2 = gv_oplus(GValue::crisp(a2), GValue::crisp(b)).as_crisp().m;
    CHECK(s2 >= s1 - 1e-12);
  }
}

TEST_CASE("score functions") {
  CHECK(gv_score(GValue::intu(0.2, 0.5)) == doctest::Approx(0.3));
  CHECK(gv_score(GValue::tfn(0.4, 0.5, 0.6)) == doctest::Approx(0.5));
  CHECK(gv_score(GValue::hfe({0.21, 0.28, 0.35})) == doctest::Approx(0.28));
  CHECK(gv_score(GValue::crisp(0.7)) == doctest::Approx(0.7));
}

TEST_CASE("lambda-invariance of score for crisp/tfn/hfe, not for intu") {
  for (int i = 0; i < 500; ++i) {
    Kind k = static_cast<Kind>(uniform_int(0, 2));
    GValue g = random_value(k);
    double lambda = uniform(0.0, 3.0);
    CHECK(gv_score(gv_scale(lambda, g)) ==
          doctest::Approx(lambda * gv_score(g)).epsilon(1e-9));
  }
  // documented non-property: the intu scaling rule is not score-linear
  int violations = 0;
  for (int i = 0; i < 100; ++i) {
    GValue g = random_value(Kind::IntuPair);
    double lambda = uniform(0.1, 0.9);
    double lhs = gv_score(gv_scale(lambda, g));
    double rhs = lambda * gv_score(g);
    if (std::fabs(lhs - rhs) > 1e-6) ++violations;
  }
  CHECK(violations > 50);
}

TEST_CASE("idempotency hypothesis fails for nonzero values") {
  // lambda1 g + lambda2 g == (lambda1+lambda2) g only degenerately
  int failures = 0;
  for (int i = 0; i < 500; ++i) {
    Kind k = static_cast<Kind>(uniform_int(0, 2));
    GValue g = random_value(k);
    if (std::fabs(gv_score(g)) < 1e-6) continue;
    double l1 = uniform(0.1, 1.0), l2 = uniform(0.1, 1.0);
    GValue lhs = gv_oplus(gv_scale(l1, g), gv_scale(l2, g));
    GValue rhs = gv_scale(l1 + l2, g);
    if (!gv_equal(lhs, rhs, 1e-9)) ++failures;
  }
  CHECK(failures > 400);
  // and the conclusion does hold for the degenerate zero value
  GValue z = GValue::tfn(0.0, 0.0, 0.0);
  CHECK(gv_equal(gv_oplus(gv_scale(0.4, z), gv_scale(0.6, z)),
                 gv_scale(1.0, z), 1e-12));
}

TEST_CASE("validation modes") {
  auto v1 = gv_validate(GValue::intu(0.7, 0.5), Mode::Strict);
  REQUIRE(v1.size() == 1);
  CHECK(v1[0].code == Violation::MuNuSumExceedsOne);

  CHECK(gv_validate(GValue::tfn(-0.05, -0.07, -0.07), Mode::Lenient).empty());

  auto v3 = gv_validate(GValue::tfn(0.3, 0.2, 0.5), Mode::Strict);
  REQUIRE(v3.size() == 1);
  CHECK(v3[0].code == Violation::CornersNotSorted);

  CHECK_FALSE(gv_validate(GValue::crisp(1.2), Mode::Strict).empty());
  CHECK(gv_validate(GValue::crisp(1.2), Mode::Lenient).empty());
  CHECK_FALSE(gv_validate(GValue::intu(1.2, 0.1), Mode::Lenient).empty());
}
