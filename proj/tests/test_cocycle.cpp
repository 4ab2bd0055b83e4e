#include <doctest.h>

#include "kacspin/cocycle.hpp"
#include "kacspin/rootsys.hpp"

using namespace kacspin;

TEST_CASE("A2 cocycle values") {
  GCM g = parse_gcm("A2");
  CocycleTable t(g);
  RootVec a1{1, 0}, a2{0, 1};
  CHECK(t.eps(a1, a1) == -1);  // (-1)^{T11}, diagonal 1
  CHECK(t.eps(a2, a2) == -1);
  CHECK(t.eps(a1, a2) == -1);  // upper-triangle entry of A mod 2
  CHECK(t.eps(a2, a1) == 1);   // lower triangle is zero
  // Bilinearity: eps(a1+a2, a2) = eps(a1,a2) eps(a2,a2).
  CHECK(t.eps(RootVec{1, 1}, a2) == t.eps(a1, a2) * t.eps(a2, a2));
  // Sign law eps(a,b) eps(b,a) = (-1)^{(a|b)}.
  CHECK(t.eps(a1, a2) * t.eps(a2, a1) == -1);
  // Depends on classes mod 2Q only.
  CHECK(t.eps(RootVec{3, 2}, a1) == t.eps(RootVec{1, 0}, a1));
}

TEST_CASE("frozen Gamma(alpha_1) matrix on A2") {
  GCM g = parse_gcm("A2");
  CocycleTable t(g);
  SpinOp ga = SpinOp::gamma(t, RootVec{1, 0});
  Matrix m = ga.materialize();
  REQUIRE(m.rows() == 4);
  Matrix expect(4, 4);
  expect.at(1, 0) = Scalar(1);   // e_0 -> e_1
  expect.at(0, 1) = Scalar(-1);  // e_1 -> -e_0
  expect.at(3, 2) = Scalar(-1);  // e_2 -> -e_3
  expect.at(2, 3) = Scalar(1);   // e_3 -> e_2
  CHECK(m == expect);
}

TEST_CASE("Gamma operator laws") {
  GCM g = parse_gcm("cycle3");
  CocycleTable t(g);
  SpinOp id = SpinOp::identity(3);
  RootVec delta{1, 1, 1};  // isotropic: norm 0
  CHECK(norm2(g, delta) == 0);
  SpinOp gd = SpinOp::gamma(t, delta);
  CHECK(gd * gd == id);  // (-1)^{0/2} = +1
  RootVec a1{1, 0, 0};
  SpinOp g1 = SpinOp::gamma(t, a1);
  CHECK(g1 * g1 == id * Scalar(-1));
  // Product law against the table.
  CHECK(g1 * gd == SpinOp::gamma(t, RootVec{2, 1, 1}) * Scalar(t.eps(a1, delta)));
  // Transpose: Gamma(a)^T = eps(a,a) Gamma(a).
  CHECK(g1.transpose() == g1 * Scalar(t.eps(a1, a1)));
  CHECK(gd.transpose() == gd * Scalar(t.eps(delta, delta)));
}

TEST_CASE("right regular operators commute with every Gamma") {
  GCM g = parse_gcm("A3");
  CocycleTable t(g);
  for (uint32_t mu = 0; mu < 8; ++mu) {
    RootVec lam(3, 0);
    for (int i = 0; i < 3; ++i) lam[i] = (mu >> i) & 1;
    SpinOp r = SpinOp::right_reg(t, lam);
    for (int i = 0; i < 3; ++i) {
      RootVec ai(3, 0);
      ai[i] = 1;
      SpinOp gi = SpinOp::gamma(t, ai);
      CHECK((r * gi - gi * r).is_zero());
    }
  }
}

TEST_CASE("gamma axiom suite passes on presets") {
  for (const char* name : {"A2", "A3", "cycle3", "D4"}) {
    GCM g = parse_gcm(name);
    CocycleTable t(g);
    std::vector<RootVec> sample;
    for (int i = 0; i < g.n; ++i) {
      RootVec v(g.n, 0);
      v[i] = 1;
      sample.push_back(v);
    }
    sample.push_back(RootVec(g.n, 1));
    CheckReport rep = verify_gamma_axioms(t, sample);
    CAPTURE(name);
    CHECK(rep.ok());
    CHECK(rep.checks_run > 0);
  }
}
