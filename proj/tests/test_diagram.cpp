#include <doctest.h>

#include "kacspin/diagram.hpp"

using namespace kacspin;

TEST_CASE("preset Cartan matrices") {
  GCM a2 = parse_gcm("A2");
  REQUIRE(a2.n == 2);
  CHECK(a2.a[0][0] == 2);
  CHECK(a2.a[0][1] == -1);
  CHECK(a2.a[1][0] == -1);
  CHECK(a2.a[1][1] == 2);
  CHECK(a2.simply_laced);

  GCM k4 = parse_gcm("rank=4\nedges=1-2,2-3,3-4,4-1,1-3,2-4");
  REQUIRE(k4.n == 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(k4.a[i][j] == (i == j ? 2 : -1));
  CHECK(k4.a == parse_gcm("K4").a);

  CHECK(parse_gcm("a2").a == a2.a);  // case-insensitive
  GCM d4 = parse_gcm("D4");
  CHECK(d4.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}});
}

TEST_CASE("preset determinants pin the E-series attachment rule") {
  CHECK(validate(parse_gcm("E6")).det == 3);
  CHECK(validate(parse_gcm("E7")).det == 2);
  CHECK(validate(parse_gcm("E8")).det == 1);
  CHECK(validate(parse_gcm("E9")).det == 0);
  CHECK(validate(parse_gcm("E10")).det == -1);
  CHECK(validate(parse_gcm("D4")).det == 4);
  CHECK(validate(parse_gcm("A3")).det == 4);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_gcm("rank=2\nedges=1-1"), std::invalid_argument);       // self-loop
  CHECK_THROWS_AS(parse_gcm("rank=2\nedges=1-2,2-1"), std::invalid_argument);   // duplicate
  CHECK_THROWS_AS(parse_gcm("rank=2\nedges=1-3"), std::invalid_argument);       // out of range
  CHECK_THROWS_AS(parse_gcm("rank=0\nedges="), std::invalid_argument);
  CHECK_THROWS_AS(parse_gcm("E11"), std::invalid_argument);
  CHECK_THROWS_AS(parse_gcm("Q7"), std::invalid_argument);
  CHECK_THROWS_AS(parse_gcm("B2"), NotSimplyLacedError);
  CHECK_THROWS_AS(parse_gcm("F4"), NotSimplyLacedError);
}

TEST_CASE("DSL round-trip") {
  for (const char* name : {"A1", "A2", "A3", "D4", "E6", "E10", "CYCLE3", "K4"}) {
    GCM g = parse_gcm(name);
    GCM back = parse_gcm(render(g));
    CHECK(back.n == g.n);
    CHECK(back.a == g.a);
    CHECK(back.edges == g.edges);
  }
  // rank-2 diagram with no edges (A1 + A1)
  GCM disc = parse_gcm("rank=2\nedges=");
  CHECK(disc.edges.empty());
  CHECK(parse_gcm(render(disc)).a == disc.a);
}

TEST_CASE("validation and type classification") {
  ValidationReport a2 = validate(parse_gcm("A2"));
  CHECK(a2.violations.empty());
  CHECK(a2.indecomposable);
  CHECK(a2.type == TypeClass::finite);

  ValidationReport c3 = validate(parse_gcm("cycle3"));
  CHECK(c3.violations.empty());
  CHECK(c3.type == TypeClass::affine);
  CHECK(c3.det == 0);

  ValidationReport k4 = validate(parse_gcm("K4"));
  CHECK(k4.violations.empty());
  CHECK(k4.type == TypeClass::indefinite);

  ValidationReport e9 = validate(parse_gcm("E9"));
  CHECK(e9.type == TypeClass::affine);
  ValidationReport e10 = validate(parse_gcm("E10"));
  CHECK(e10.type == TypeClass::indefinite);

  CHECK_FALSE(validate(parse_gcm("rank=2\nedges=")).indecomposable);

  GCM bad = parse_gcm("A2");
  bad.a[0][1] = 0;  // breaks zero-pattern symmetry
  CHECK_FALSE(validate(bad).violations.empty());
}

TEST_CASE("realizations") {
  Realization a2 = realization(parse_gcm("A2"));
  CHECK(a2.regular);
  CHECK(a2.dim == 2);
  CHECK(a2.gram.at(0, 0) == Scalar(2));
  CHECK(a2.gram.at(0, 1) == Scalar(-1));

  Realization k4 = realization(parse_gcm("K4"));
  CHECK(k4.regular);
  CHECK(k4.dim == 4);

  Realization c3 = realization(parse_gcm("cycle3"));
  CHECK_FALSE(c3.regular);
  CHECK(c3.dim == 4);
  CHECK(rank(c3.gram) == 4);
  // gram restricted to the simple roots equals the Cartan matrix
  GCM g = parse_gcm("cycle3");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(c3.gram.at(i, j) == Scalar(g.a[i][j]));
  // coroot pairing: alpha_j(alpha_i^vee) = a_ij, i.e. coroots^T roots = A
  Matrix pair = c3.simple_coroots.transpose() * c3.simple_roots;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(pair.at(i, j) == Scalar(g.a[i][j]));
  // realization gram has even diagonal
  for (int i = 0; i < c3.dim; ++i) {
    Rat diag = c3.gram.at(i, i).c0();
    CHECK(diag.get_den() == 1);
    CHECK(diag.get_num() % 2 == 0);
  }
}
