#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "kacspin/diagram.hpp"
#include "kacspin/kron_op.hpp"
#include "kacspin/liftgroup.hpp"
#include "kacspin/spinreps.hpp"

using namespace kacspin;

namespace {
constexpr double kFloatTol = 1e-10;

RootVec simple(int n, int i) {
  RootVec a(n, 0);
  a[i] = 1;
  return a;
}
}  // namespace

TEST_CASE("angle parsing") {
  Angle a = parse_angle("3/2pi");
  CHECK(a.pi_multiple);
  CHECK(a.mult == Rat(3, 2));
  CHECK(a.exact_capable());
  CHECK(parse_angle("-1/2pi").mult == Rat(-1, 2));
  CHECK(parse_angle("2pi").mult == Rat(2));
  CHECK(parse_angle("pi").mult == Rat(1));
  CHECK(parse_angle("-pi").mult == Rat(-1));
  Angle z = parse_angle("0");
  CHECK(z.radians == 0.0);
  Angle r = parse_angle("0.75");
  CHECK_FALSE(r.pi_multiple);
  CHECK(r.radians == doctest::Approx(0.75));
  CHECK_FALSE(r.exact_capable());
  CHECK_FALSE(parse_angle("1/3pi").exact_capable());
  CHECK_THROWS_AS(parse_angle("pie"), std::invalid_argument);
  CHECK_THROWS_AS(parse_angle(""), std::invalid_argument);
}

TEST_CASE("exact trig table at quarter multiples") {
  CHECK(exact_cos_pi(Rat(0)) == Scalar(1));
  CHECK(exact_cos_pi(Rat(1)) == Scalar(-1));
  CHECK(exact_cos_pi(Rat(1, 2)) == Scalar(0));
  Scalar half_sqrt2(0, Rat(1, 2), 0, 0, 0);
  CHECK(exact_cos_pi(Rat(1, 4)) == half_sqrt2);
  CHECK(exact_cos_pi(Rat(-1, 4)) == half_sqrt2);
  CHECK(exact_cos_pi(Rat(3, 4)) == half_sqrt2 * Scalar(-1));
  CHECK(exact_sin_pi(Rat(1, 2)) == Scalar(1));
  CHECK(exact_sin_pi(Rat(-1, 2)) == Scalar(-1));
  CHECK(exact_sin_pi(Rat(1, 4)) == half_sqrt2);
  CHECK(exact_sin_pi(Rat(2)) == Scalar(0));
  CHECK_THROWS_AS(exact_cos_pi(Rat(1, 3)), std::invalid_argument);
}

TEST_CASE("level 1/2 r_i is the normalized 1 + Gamma") {
  GCM g = parse_gcm("A2");
  SpinRep rho = build_rho(g);
  GroupElement r1 = closed_form_exp(rho, 0, angle_pi(Rat(1, 2)));
  REQUIRE(r1.exact);
  Scalar half_sqrt2(0, Rat(1, 2), 0, 0, 0);
  RepOp expect =
      (RepOp(SpinOp::identity(2)) + RepOp(SpinOp::gamma(rho.table, simple(2, 0)))) * half_sqrt2;
  CHECK(r1.op == expect);
  // r_1^2 = Gamma(alpha_1), the reflection image squared.
  CHECK(r1.op * r1.op == RepOp(SpinOp::gamma(rho.table, simple(2, 0))));
}

TEST_CASE("exponential periodicity: 2pi gives -Id, 4pi gives Id") {
  GCM g = parse_gcm("A2");
  SpinRep rho = build_rho(g);
  std::vector<SpinRep> reps;
  reps.push_back(rho);
  reps.push_back(build_sigma(g, Level::three_half, rho));
  reps.push_back(build_sigma(g, Level::five_half, rho));
  reps.push_back(build_sigma(g, Level::seven_half, rho));
  for (const auto& r : reps) {
    for (int i = 0; i < g.n; ++i) {
      GroupElement two = closed_form_exp(r, i, angle_pi(Rat(2)));
      GroupElement four = closed_form_exp(r, i, angle_pi(Rat(4)));
      REQUIRE(two.exact);
      REQUIRE(four.exact);
      RepOp id;
      switch (r.kind()) {
        case RepKind::half_spinop: id = RepOp(SpinOp::identity(g.n)); break;
        case RepKind::kron: id = RepOp(KronOp::identity(r.dim_v, r.table)); break;
        default: id = RepOp(Matrix::identity(r.dim()));
      }
      CHECK(two.op == id * Scalar(-1));
      CHECK(four.op == id);
    }
  }
}

TEST_CASE("quarter-turn closed form at tensor levels") {
  GCM g = parse_gcm("A2");
  SpinRep rho = build_rho(g);
  SpinRep s32 = build_sigma(g, Level::three_half, rho);
  GroupElement q = closed_form_exp(s32, 0, angle_pi(Rat(1, 2)));
  REQUIRE(q.exact);
  // Sigma(pi/2) = (1/sqrt2) eta tensor (Id + Gamma): f-free at 3/2 and the
  // trig factors collapse to a single product.
  Scalar half_sqrt2(0, Rat(1, 2), 0, 0, 0);
  Matrix eta = s32.vmod->eta(WeylWord{0});
  KronOp expect = KronOp::tensor_mask(eta * half_sqrt2, 0, s32.table) +
                  KronOp::tensor(eta * half_sqrt2, simple(g.n, 0), s32.table);
  CHECK(q.op == RepOp(expect));
  // Level 7/2 on a regular diagram: the f-terms vanish at every multiple of
  // pi/2, leaving the same shape.
  GCM k4 = parse_gcm("K4");
  SpinRep s72 = build_sigma(k4, Level::seven_half, build_rho(k4));
  GroupElement q7 = closed_form_exp(s72, 1, angle_pi(Rat(1, 2)));
  REQUIRE(q7.exact);
  Matrix eta7 = s72.vmod->eta(WeylWord{1});
  KronOp expect7 = KronOp::tensor_mask(eta7 * half_sqrt2, 0, s72.table) +
                   KronOp::tensor(eta7 * half_sqrt2, simple(k4.n, 1), s72.table);
  CHECK(q7.op == RepOp(expect7));
}

TEST_CASE("one-parameter subgroup law") {
  GCM g = parse_gcm("A2");
  SpinRep s32 = build_sigma(g, Level::three_half, build_rho(g));
  GroupElement q = closed_form_exp(s32, 0, angle_pi(Rat(1, 2)));
  GroupElement h = closed_form_exp(s32, 0, angle_pi(Rat(1)));
  REQUIRE(q.exact);
  REQUIRE(h.exact);
  CHECK(q.op * q.op == h.op);
  GroupElement a = closed_form_exp(s32, 0, angle_radians(0.3));
  GroupElement b = closed_form_exp(s32, 0, angle_radians(0.4));
  GroupElement c = closed_form_exp(s32, 0, angle_radians(0.7));
  CHECK_FALSE(a.exact);
  CHECK(flt_max_abs_diff(flt_mul(a.flt, b.flt, c.dim), c.flt) < kFloatTol);
}

TEST_CASE("closed form agrees with the numeric exponential") {
  GCM g = parse_gcm("A2");
  SpinRep s32 = build_sigma(g, Level::three_half, build_rho(g));
  for (double phi : {0.7, 2.1, 1.571}) {
    GroupElement e = closed_form_exp(s32, 1, angle_radians(phi));
    Matrix gen = s32.gen(1).materialize();
    std::vector<double> m(size_t(e.dim) * e.dim);
    for (int r = 0; r < e.dim; ++r)
      for (int c = 0; c < e.dim; ++c) m[size_t(r) * e.dim + c] = gen.at(r, c).to_double() * phi;
    CHECK(flt_max_abs_diff(e.flt, numeric_expm(m, e.dim)) < kFloatTol);
  }
  // expm(0) = Id.
  std::vector<double> zero(9, 0.0);
  std::vector<double> id = numeric_expm(zero, 3);
  std::vector<double> expect(9, 0.0);
  expect[0] = expect[4] = expect[8] = 1.0;
  CHECK(flt_max_abs_diff(id, expect) == 0.0);
  CHECK_THROWS_AS(numeric_expm(std::vector<double>{std::numeric_limits<double>::infinity()}, 1),
                  std::invalid_argument);
}

TEST_CASE("lift classification is Spin-only at every level") {
  GCM g = parse_gcm("A2");
  SpinRep rho = build_rho(g);
  for (Level lv : {Level::half, Level::three_half, Level::five_half, Level::seven_half}) {
    SpinRep r = lv == Level::half ? rho : build_sigma(g, lv, rho);
    LiftReport rep = lift_classify(r);
    CHECK(rep.cls == LiftClass::lifts_only_to_Spin);
    CHECK(rep.checks.ok());
  }
  CHECK(lift_class_name(LiftClass::lifts_only_to_Spin) == "lifts_only_to_Spin");
}

TEST_CASE("spin-extended Weyl relations hold exactly") {
  for (const char* name : {"A2", "A3"}) {
    GCM g = parse_gcm(name);
    SpinRep rho = build_rho(g);
    CAPTURE(name);
    CHECK(wspin_relations_check(rho).ok());
    CHECK(wspin_relations_check(build_sigma(g, Level::three_half, rho)).ok());
  }
}

TEST_CASE("conjugation action of r_i on the Gammas") {
  GCM g = parse_gcm("A2");
  SpinRep rho = build_rho(g);
  // Odd pairing: (alpha_2 | alpha_1) = -1, image eps(alpha_1, alpha_2) Gamma(s_1 alpha_2).
  CHECK(ad_weyl_action_check(rho, 0, simple(2, 1)).ok());
  // Even pairing: a = alpha_1 itself, (a|alpha_1) = 2, image Gamma(a) unchanged.
  CHECK(ad_weyl_action_check(rho, 0, simple(2, 0)).ok());
  SpinRep s32 = build_sigma(g, Level::three_half, rho);
  // alpha_1 + alpha_2 has norm 2 and works too.
  CHECK(ad_weyl_action_check(rho, 1, RootVec{1, 1}).ok());
  CHECK_THROWS_AS(ad_weyl_action_check(s32, 0, simple(2, 1)), std::invalid_argument);
  CHECK_THROWS_AS(ad_weyl_action_check(rho, 0, RootVec{2, 0}), std::invalid_argument);
}

TEST_CASE("r_i preserves the contravariant form at level 3/2") {
  GCM g = parse_gcm("A2");
  SpinRep s32 = build_sigma(g, Level::three_half, build_rho(g));
  Matrix form = kron(s32.vmod->gram(), Matrix::identity(s32.dim_s));
  for (int i = 0; i < g.n; ++i) {
    Matrix r = closed_form_exp(s32, i, angle_pi(Rat(1, 2))).op.materialize();
    CHECK(r.transpose() * form * r == form);
  }
}
