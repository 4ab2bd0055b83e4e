#include <doctest.h>

#include "kacspin/rootsys.hpp"

using namespace kacspin;

TEST_CASE("inner products and reflections on A2") {
  GCM g = parse_gcm("A2");
  RootVec a1{1, 0}, a2{0, 1};
  CHECK(inner(g, a1, a1) == 2);
  CHECK(inner(g, a1, a2) == -1);
  CHECK(norm2(g, RootVec{1, 1}) == 2);
  CHECK(reflect(g, 0, a2) == RootVec{1, 1});
  CHECK(reflect(g, 0, a1) == RootVec{-1, 0});
  CHECK_THROWS_AS(reflect(g, 5, a1), std::out_of_range);
  // s1 s2 applied to alpha_1, last letter first: s2(a1) = a1+a2, s1(...) = a2.
  CHECK(apply_word(g, WeylWord{0, 1}, a1) == RootVec{0, 1});
}

TEST_CASE("positive real root enumeration counts") {
  CHECK(real_roots(parse_gcm("A2"), 8).size() == 3);
  CHECK(real_roots(parse_gcm("A3"), 8).size() == 6);
  CHECK(real_roots(parse_gcm("K4"), 6).size() == 34);
  auto c3 = real_roots(parse_gcm("cycle3"), 7);
  CHECK(c3.size() == 15);
  bool has_322 = false;
  for (const auto& r : c3) has_322 = has_322 || r == RootVec{3, 2, 2};
  CHECK(has_322);
  // Lexicographic order and positivity.
  for (size_t t = 1; t < c3.size(); ++t) CHECK(c3[t - 1] < c3[t]);
  for (const auto& r : c3) {
    CHECK(height(r) >= 1);
    CHECK(norm2(parse_gcm("cycle3"), r) == 2);
  }
}

TEST_CASE("word_to_simple reduces every root and uses smallest descents") {
  GCM g = parse_gcm("K4");
  for (const auto& a : real_roots(g, 6)) {
    auto [w, idx] = word_to_simple(g, a);
    RootVec simple(g.n, 0);
    simple[idx] = 1;
    CHECK(apply_word(g, w, simple) == a);
  }
  GCM c = parse_gcm("cycle3");
  auto [w, idx] = word_to_simple(c, RootVec{3, 2, 2});
  CHECK(w == WeylWord{0, 1, 2, 0});
  CHECK(idx == 1);
  CHECK_THROWS_AS(word_to_simple(c, RootVec{1, 1, 1}), std::invalid_argument);  // isotropic
  CHECK_THROWS_AS(word_to_simple(c, RootVec{-1, 0, 0}), std::invalid_argument);
}

TEST_CASE("root string round trip") {
  RootVec a{3, -1, 2};
  CHECK(root_to_string(a) == "3,-1,2");
  CHECK(root_from_string("3,-1,2", 3) == a);
  CHECK_THROWS_AS(root_from_string("1,2", 3), std::invalid_argument);
  CHECK_THROWS_AS(root_from_string("a,b,c", 3), std::invalid_argument);
}
