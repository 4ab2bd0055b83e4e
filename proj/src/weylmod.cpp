#include "kacspin/weylmod.hpp"

#include <algorithm>
#include <stdexcept>

namespace kacspin {

std::string level_name(Level l) {
  switch (l) {
    case Level::half: return "1/2";
    case Level::three_half: return "3/2";
    case Level::five_half: return "5/2";
    case Level::seven_half: return "7/2";
  }
  return "?";
}

Level level_from_string(const std::string& s) {
  if (s == "1/2") return Level::half;
  if (s == "3/2") return Level::three_half;
  if (s == "5/2") return Level::five_half;
  if (s == "7/2") return Level::seven_half;
  throw std::invalid_argument("level: expected one of 1/2, 3/2, 5/2, 7/2");
}

int level_sym_power(Level l) {
  switch (l) {
    case Level::half: return 0;
    case Level::three_half: return 1;
    case Level::five_half: return 2;
    case Level::seven_half: return 3;
  }
  return 0;
}

namespace {

void gen_multisets(int d, int k, int start, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  if (int(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < d; ++i) {
    cur.push_back(i);
    gen_multisets(d, k, i, cur, out);
    cur.pop_back();
  }
}

void permutations(int k, std::vector<std::vector<int>>& out) {
  std::vector<int> p(k);
  for (int i = 0; i < k; ++i) p[i] = i;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace

SymModule::SymModule(const Realization& re, int k) : re_(re), k_(k) {
  if (k < 1 || k > 3) throw std::invalid_argument("SymModule: k must be 1, 2, or 3");
  std::vector<int> cur;
  gen_multisets(re.dim, k, 0, cur, basis_);
  const int d = re.dim;
  // flat lookup over k-tuples of sorted indices
  int span = 1;
  for (int t = 0; t < k; ++t) span *= d;
  basis_lookup_.assign(1, std::vector<int>(span, -1));
  for (size_t b = 0; b < basis_.size(); ++b) basis_lookup_[0][flat_index(basis_[b])] = int(b);

  // induced gram by the (1/k!) sum-over-permutations formula
  gram_ = Matrix(dim(), dim());
  std::vector<std::vector<int>> perms;
  permutations(k, perms);
  const Rat inv_fact(1, long(perms.size()));
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) {
      Scalar s(0);
      for (const auto& p : perms) {
        Scalar prod(1);
        for (int t = 0; t < k; ++t) prod *= re_.gram.at(basis_[i][p[t]], basis_[j][t]);
        s += prod;
      }
      gram_.at(i, j) = s * Scalar(inv_fact);
    }
}

int SymModule::flat_index(const std::vector<int>& m) const {
  int idx = 0;
  for (int t = 0; t < k_; ++t) idx = idx * re_.dim + m[t];
  return idx;
}

int SymModule::index_of(std::vector<int> multiset) const {
  std::sort(multiset.begin(), multiset.end());
  const int idx = basis_lookup_[0][flat_index(multiset)];
  if (idx < 0) throw std::logic_error("SymModule: basis lookup failed");
  return idx;
}

std::vector<Scalar> SymModule::product_coords(
    const std::vector<std::vector<Scalar>>& vecs) const {
  if (int(vecs.size()) != k_) throw std::invalid_argument("product_coords: wrong factor count");
  const int d = re_.dim;
  std::vector<Scalar> out(dim());
  std::vector<int> combo(k_, 0);
  std::vector<int> sorted(k_);
  while (true) {
    Scalar c(1);
    bool zero = false;
    for (int t = 0; t < k_ && !zero; ++t) {
      if (vecs[t][combo[t]].is_zero())
        zero = true;
      else
        c *= vecs[t][combo[t]];
    }
    if (!zero) {
      sorted = combo;
      std::sort(sorted.begin(), sorted.end());
      out[basis_lookup_[0][flat_index(sorted)]] += c;
    }
    int t = k_ - 1;
    while (t >= 0 && ++combo[t] == d) combo[t--] = 0;
    if (t < 0) break;
  }
  return out;
}

Matrix SymModule::induced(const Matrix& m_h) const {
  const int d = re_.dim;
  Matrix out(dim(), dim());
  std::vector<std::vector<Scalar>> cols(k_);
  for (int j = 0; j < dim(); ++j) {
    for (int t = 0; t < k_; ++t) {
      cols[t].assign(d, Scalar());
      for (int r = 0; r < d; ++r) cols[t][r] = m_h.at(r, basis_[j][t]);
    }
    std::vector<Scalar> img = product_coords(cols);
    for (int i = 0; i < dim(); ++i) out.at(i, j) = img[i];
  }
  return out;
}

Matrix SymModule::reflection_h(const RootVec& a) const {
  std::vector<Scalar> av = embed_root(re_, a);
  // s_a(x) = x - (a|x) a for norm-2 a; (a|x) computed with the realization gram.
  Matrix out = Matrix::identity(re_.dim);
  std::vector<Scalar> ga(re_.dim);
  Scalar norm(0);
  for (int i = 0; i < re_.dim; ++i) {
    Scalar s(0);
    for (int j = 0; j < re_.dim; ++j)
      if (!av[j].is_zero()) s += re_.gram.at(i, j) * av[j];
    ga[i] = s;
    if (!av[i].is_zero()) norm += av[i] * s;
  }
  if (norm != Scalar(2))
    throw std::invalid_argument("reflection_h: vector must have norm 2 (real root)");
  for (int i = 0; i < re_.dim; ++i)
    for (int j = 0; j < re_.dim; ++j)
      if (!av[i].is_zero() && !ga[j].is_zero()) out.at(i, j) -= av[i] * ga[j];
  return out;
}

Matrix SymModule::eta(const WeylWord& w) const {
  Matrix out = Matrix::identity(dim());
  for (int letter : w) {
    if (letter < 0 || letter >= int(re_.simple_roots.cols()))
      throw std::out_of_range("eta: generator index out of range");
    RootVec e(re_.simple_roots.cols(), 0);
    e[letter] = 1;
    out = out * induced(reflection_h(e));
  }
  return out;
}

Matrix SymModule::eta_root(const RootVec& a) const { return induced(reflection_h(a)); }

std::vector<Scalar> SymModule::apply_matrix(const Matrix& m, const std::vector<Scalar>& v) const {
  std::vector<Scalar> out(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    Scalar s(0);
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero() && !v[j].is_zero()) s += m.at(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

Scalar SymModule::form(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
  Scalar s(0);
  for (int i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim(); ++j)
      if (!y[j].is_zero() && !gram_.at(i, j).is_zero()) s += x[i] * gram_.at(i, j) * y[j];
  }
  return s;
}

namespace {

Matrix inverse_gram(const Realization& re) {
  auto inv = solve(re.gram, Matrix::identity(re.dim));
  if (!inv) throw std::domain_error("inverse_gram: gram matrix is singular");
  return *inv;
}

}  // namespace

std::vector<Scalar> psi(const SymModule& mod3, const std::vector<Scalar>& a) {
  if (mod3.k() != 3) throw std::invalid_argument("psi: needs the Sym^3 module");
  const Realization& re = mod3.realization();
  if (!re.regular) throw std::domain_error("psi: requires a regular diagram");
  const Matrix om = inverse_gram(re);
  const int d = re.dim;
  std::vector<Scalar> out(mod3.dim());
  for (int k = 0; k < d; ++k) {
    for (int l = 0; l < d; ++l) {
      if (om.at(k, l).is_zero()) continue;
      std::vector<Scalar> ek(d), el(d);
      ek[k] = Scalar(1);
      el[l] = Scalar(1);
      std::vector<Scalar> prod = mod3.product_coords({a, ek, el});
      const Scalar c = Scalar(Rat(1, 2)) * om.at(k, l);
      for (int i = 0; i < mod3.dim(); ++i)
        if (!prod[i].is_zero()) out[i] += c * prod[i];
    }
  }
  return out;
}

std::vector<Scalar> psi_element(const SymModule& mod2) {
  if (mod2.k() != 2) throw std::invalid_argument("psi_element: needs the Sym^2 module");
  const Realization& re = mod2.realization();
  if (!re.regular) throw std::domain_error("psi_element: requires a regular diagram");
  const Matrix om = inverse_gram(re);
  std::vector<Scalar> out(mod2.dim());
  for (int k = 0; k < re.dim; ++k)
    for (int l = 0; l < re.dim; ++l) {
      if (om.at(k, l).is_zero()) continue;
      out[mod2.index_of({std::min(k, l), std::max(k, l)})] += om.at(k, l);
    }
  return out;
}

SevenHalfConstants seven_half_constants(int m, bool branch_minus) {
  SevenHalfConstants c;
  c.D = 6L * (m + 8);
  const Scalar sqrtD = Scalar::sqrtD(c.D);
  // p = eps/sqrt(3), q = -eps (12 -+ 2 sqrt D) / ((m+2) sqrt 3); eps^2 cancels.
  const Scalar twelve_branch =
      branch_minus ? Scalar(12) + 2 * sqrtD : Scalar(12) - 2 * sqrtD;
  c.p2 = Scalar(Rat(1, 3));
  c.pq = -(twelve_branch) * Scalar(Rat(1, 3 * (m + 2)));
  c.q2 = twelve_branch * twelve_branch * Scalar(Rat(1, 3L * (m + 2) * (m + 2)));
  return c;
}

Matrix f_alpha(const SymModule& mod3, const RootVec& a, bool branch_minus, bool eps_minus) {
  (void)eps_minus;  // the eps sign cancels in p^2, pq, q^2
  if (mod3.k() != 3) throw std::invalid_argument("f_alpha: needs the Sym^3 module");
  const Realization& re = mod3.realization();
  if (!re.regular) throw std::domain_error("f_alpha: requires a regular diagram");
  const SevenHalfConstants c = seven_half_constants(re.dim, branch_minus);
  std::vector<Scalar> av = embed_root(re, a);
  std::vector<Scalar> x = mod3.product_coords({av, av, av});
  std::vector<Scalar> y = psi(mod3, av);
  const int dim = mod3.dim();
  // W = p^2 x x^T + pq (x y^T + y x^T) + q^2 y y^T;  f = W * gram3.
  Matrix w(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Scalar s(0);
      if (!x[i].is_zero() && !x[j].is_zero()) s += c.p2 * x[i] * x[j];
      if (!x[i].is_zero() && !y[j].is_zero()) s += c.pq * x[i] * y[j];
      if (!y[i].is_zero() && !x[j].is_zero()) s += c.pq * y[i] * x[j];
      if (!y[i].is_zero() && !y[j].is_zero()) s += c.q2 * y[i] * y[j];
      w.at(i, j) = s;
    }
  return w * mod3.gram();
}

TauOperator tau(Level level, const SymModule& mod, const RootVec& a, bool branch_minus) {
  const int expect_k = level_sym_power(level);
  if (expect_k == 0) throw std::invalid_argument("tau: undefined at level 1/2");
  if (mod.k() != expect_k)
    throw std::invalid_argument("tau: module power does not match the level");
  TauOperator out{level, a, mod.eta_root(a)};
  const Matrix half = Matrix::identity(mod.dim()) * Scalar(Rat(1, 2));
  out.matrix = out.matrix - half;
  if (level == Level::seven_half) out.matrix = out.matrix + f_alpha(mod, a, branch_minus);
  return out;
}

CheckReport master_eq_check(Level level, const SymModule& mod, const RootVec& a,
                            const RootVec& b, bool branch_minus) {
  CheckReport rep;
  // inner product from the realization gram restricted to the lattice
  auto pair = [&](const RootVec& x, const RootVec& y) {
    const Realization& re = mod.realization();
    Scalar s(0);
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      for (size_t j = 0; j < y.size(); ++j)
        if (y[j] != 0) s += Scalar(long(x[i])) * re.gram.at(int(i), int(j)) * Scalar(long(y[j]));
    }
    return s;
  };
  const Scalar ip = pair(a, b);
  const Matrix ta = tau(level, mod, a, branch_minus).matrix;
  const Matrix tb = tau(level, mod, b, branch_minus).matrix;
  ++rep.checks_run;
  if (ip == Scalar(0)) {
    Matrix c = commutator(ta, tb);
    if (!c.is_zero())
      rep.failures.push_back({"[tau(a), tau(b)] == 0 for (a|b) = 0",
                              root_to_string(a) + " ; " + root_to_string(b),
                              "commutator nonzero"});
  } else if (ip == Scalar(1) || ip == Scalar(-1)) {
    RootVec target(a.size());
    const long sgn = (ip == Scalar(-1)) ? 1 : -1;  // (a|b) = -1 -> a+b, (a|b) = +1 -> a-b
    for (size_t i = 0; i < a.size(); ++i) target[i] = a[i] + sgn * b[i];
    const Matrix rhs = tau(level, mod, target, branch_minus).matrix;
    if (anticommutator(ta, tb) != rhs)
      rep.failures.push_back({"{tau(a), tau(b)} == tau(a -+ b) for (a|b) = +-1",
                              root_to_string(a) + " ; " + root_to_string(b),
                              "anticommutator mismatch"});
  } else {
    rep.failures.push_back({"master equation", root_to_string(a) + " ; " + root_to_string(b),
                            "pair has |(a|b)| > 1; no master equation applies"});
  }
  return rep;
}

}  // namespace kacspin
