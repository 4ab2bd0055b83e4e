#include <doctest.h>

#include "kacspin/kron_op.hpp"
#include "kacspin/rootsys.hpp"

using namespace kacspin;

namespace {
Matrix sample_v(int d, long shift) {
  Matrix m(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m.at(r, c) = Scalar(shift + r - 2 * c);
  return m;
}
}  // namespace

TEST_CASE("tensor product law follows the mask cocycle") {
  GCM g = parse_gcm("A2");
  CocycleTable t(g);
  Matrix a = sample_v(2, 1), b = sample_v(2, -1);
  RootVec r1{1, 0}, r2{0, 1};
  KronOp x = KronOp::tensor(a, r1, t);
  KronOp y = KronOp::tensor(b, r2, t);
  // (A x Gamma(r1))(B x Gamma(r2)) = eps(r1,r2) AB x Gamma(r1+r2).
  KronOp lhs = x * y;
  KronOp rhs = KronOp::tensor(a * b, RootVec{1, 1}, t) * Scalar(long(t.eps(r1, r2)));
  CHECK(lhs == rhs);
  // Materialized agreement with the dense Kronecker product.
  Matrix dense = kron(a, SpinOp::gamma(t, r1).materialize());
  CHECK(x.materialize() == dense);
  CHECK(x.dim() == 8);
}

TEST_CASE("transpose carries the diagonal cocycle sign") {
  GCM g = parse_gcm("A2");
  CocycleTable t(g);
  Matrix a = sample_v(2, 3);
  RootVec r1{1, 0};
  KronOp x = KronOp::tensor(a, r1, t);
  // Gamma(r)^T = eps(r,r) Gamma(r), so (A x Gamma)^T = eps A^T x Gamma.
  CHECK(x.transpose() == KronOp::tensor(a.transpose(), r1, t) * Scalar(long(t.eps(r1, r1))));
  CHECK(x.transpose().materialize() == x.materialize().transpose());
}

TEST_CASE("sums, apply, and commutators match dense arithmetic") {
  GCM g = parse_gcm("A3");
  CocycleTable t(g);
  Matrix a = sample_v(3, 0), b = sample_v(3, 2);
  KronOp x = KronOp::tensor(a, RootVec{1, 0, 0}, t) + KronOp::tensor(b, RootVec{0, 1, 0}, t);
  KronOp y = KronOp::tensor(b, RootVec{0, 0, 1}, t) - KronOp::identity(3, t) * Scalar(Rat(1, 2));
  Matrix xd = x.materialize(), yd = y.materialize();
  CHECK((x * y).materialize() == xd * yd);
  CHECK((x + y).materialize() == xd + yd);
  CHECK(commutator(x, y).materialize() == xd * yd - yd * xd);
  std::vector<Scalar> v(x.dim());
  for (int i = 0; i < x.dim(); ++i) v[size_t(i)] = Scalar(i - 7);
  std::vector<Scalar> img = x.apply(v);
  for (int r = 0; r < x.dim(); ++r) {
    Scalar acc(0);
    for (int c = 0; c < x.dim(); ++c) acc += xd.at(r, c) * v[size_t(c)];
    CHECK(img[size_t(r)] == acc);
  }
}
