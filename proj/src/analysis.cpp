#include "kacspin/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace kacspin {

namespace {

std::vector<Scalar> matvec(const Matrix& m, const std::vector<Scalar>& v) {
  std::vector<Scalar> out(m.rows(), Scalar(0));
  for (int r = 0; r < m.rows(); ++r) {
    Scalar acc(0);
    for (int c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero() && !v[c].is_zero()) acc += m.at(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

std::vector<Scalar> flatten(const Matrix& m) {
  std::vector<Scalar> v;
  v.reserve(size_t(m.rows()) * m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
  return v;
}

std::optional<Scalar> as_scalar_matrix(const Matrix& m) {
  Scalar diag = m.at(0, 0);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      if (r == c && !(m.at(r, c) == diag)) return std::nullopt;
      if (r != c && !m.at(r, c).is_zero()) return std::nullopt;
    }
  return diag;
}

/// Canonical matrix for a span: reduced echelon basis sorted by leading index.
Matrix canonical_span(const std::vector<std::vector<Scalar>>& vecs, int dim) {
  EchelonBasis bas(dim);
  for (const auto& v : vecs) bas.insert(v);
  Matrix cols = bas.column_matrix();
  std::vector<std::vector<Scalar>> list;
  for (int c = 0; c < cols.cols(); ++c) {
    std::vector<Scalar> v(dim);
    for (int r = 0; r < dim; ++r) v[r] = cols.at(r, c);
    list.push_back(std::move(v));
  }
  auto lead = [&](const std::vector<Scalar>& v) {
    for (int r = 0; r < dim; ++r)
      if (!v[r].is_zero()) return r;
    return dim;
  };
  std::sort(list.begin(), list.end(),
            [&](const auto& x, const auto& y) { return lead(x) < lead(y); });
  Matrix out(dim, int(list.size()));
  for (int c = 0; c < int(list.size()); ++c)
    for (int r = 0; r < dim; ++r) out.at(r, c) = list[c][r];
  return out;
}

bool verify_invariant(const std::vector<Matrix>& gens, const Matrix& basis) {
  EchelonBasis bas(basis.rows());
  for (int c = 0; c < basis.cols(); ++c) {
    std::vector<Scalar> v(basis.rows());
    for (int r = 0; r < basis.rows(); ++r) v[r] = basis.at(r, c);
    bas.insert(v);
  }
  for (const Matrix& g : gens)
    for (int c = 0; c < basis.cols(); ++c) {
      std::vector<Scalar> v(basis.rows());
      for (int r = 0; r < basis.rows(); ++r) v[r] = basis.at(r, c);
      if (!bas.contains(matvec(g, v))) return false;
    }
  return true;
}

/// S-side commutant data (right-regular strategy, full or restricted).
struct SideBasis {
  int dim = 0;
  std::vector<Matrix> dense;  // materialized basis elements
  CheckReport ver;
};

SideBasis s_side_commutant(const SpinRep& shape) {
  SideBasis out;
  const int n = shape.n();
  const CocycleTable& t = shape.table;
  auto mask_root = [&](uint32_t m) {
    RootVec v(n, 0);
    for (int i = 0; i < n; ++i)
      if (m & (1u << i)) v[i] = 1;
    return v;
  };
  if (!shape.restricted) {
    for (uint32_t mu = 0; mu < (1u << n); ++mu) {
      SpinOp rr = SpinOp::right_reg(t, mask_root(mu));
      out.dense.push_back(rr.materialize());
      ++out.dim;
      for (int i = 0; i < n; ++i) {
        ++out.ver.checks_run;
        SpinOp gi = SpinOp::gamma(t, RootVec(mask_root(uint32_t(1) << i)));
        if (!((rr * gi - gi * rr).is_zero()))
          out.ver.failures.push_back({"commutant-s-side", "mu mask " + std::to_string(mu),
                                      "R(mu) fails to commute with Gamma_i"});
      }
    }
    return out;
  }
  const auto& lambdas = shape.split_lambdas;
  const int k = int(lambdas.size());
  std::vector<uint32_t> span{0};
  for (uint32_t l : lambdas) {
    std::vector<uint32_t> grown;
    for (uint32_t s : span) { grown.push_back(s); grown.push_back(s ^ l); }
    span = grown;
  }
  std::vector<Matrix> gammas;
  for (int i = 0; i < n; ++i)
    gammas.push_back(
        restricted_op(SpinOp::gamma(t, mask_root(uint32_t(1) << i)), shape.p, k));
  for (uint32_t mu = 0; mu < (1u << n); ++mu) {
    bool even = true;
    for (uint32_t l : lambdas)
      if (inner(shape.gcm, mask_root(mu), mask_root(l)) % 2 != 0) { even = false; break; }
    if (!even) continue;
    bool minimal = true;
    for (uint32_t s : span)
      if (s != 0 && (mu ^ s) < mu) { minimal = false; break; }
    if (!minimal) continue;
    Matrix rr = restricted_op(SpinOp::right_reg(t, mask_root(mu)), shape.p, k);
    out.dense.push_back(rr);
    ++out.dim;
    for (int i = 0; i < n; ++i) {
      ++out.ver.checks_run;
      if (!commutator(rr, gammas[i]).is_zero())
        out.ver.failures.push_back({"commutant-s-side", "mu mask " + std::to_string(mu),
                                    "restricted R(mu) fails to commute"});
    }
  }
  return out;
}

std::optional<std::string> division_certificate(const std::vector<Matrix>& basis) {
  if (basis.empty()) return std::nullopt;
  const int d = basis[0].rows();
  const Rat dim_r(d);
  // Traceless (non-scalar) parts of the basis elements.
  std::vector<Matrix> parts;
  for (const Matrix& b : basis) {
    Scalar tr(0);
    for (int r = 0; r < d; ++r) tr += b.at(r, r);
    Matrix y = b - Matrix::identity(d) * (tr * Scalar(Rat(1) / dim_r));
    if (!y.is_zero()) parts.push_back(y);
  }
  if (parts.empty()) return std::nullopt;
  auto neg_rational_square = [&](const Matrix& y) -> std::optional<Rat> {
    auto s = as_scalar_matrix(y * y);
    if (!s || !s->is_rational()) return std::nullopt;
    Rat v = s->c0();
    if (v >= 0) return std::nullopt;
    return v;
  };
  // Look for one imaginary unit.
  int yi = -1;
  std::optional<Rat> ys;
  for (size_t t = 0; t < parts.size(); ++t)
    if ((ys = neg_rational_square(parts[t]))) { yi = int(t); break; }
  if (yi < 0) return std::nullopt;
  const Matrix& y = parts[yi];
  // A second anticommuting imaginary unit, adjusted if necessary.
  for (size_t t = 0; t < parts.size(); ++t) {
    if (int(t) == yi) continue;
    const Matrix& z0 = parts[t];
    auto w = as_scalar_matrix(anticommutator(y, z0));
    if (!w || !w->is_rational()) continue;
    // z = z0 - (w / (2 ys)) y anticommutes with y exactly.
    Matrix z = z0 - y * Scalar(w->c0() / (Rat(2) * *ys));
    if (z.is_zero()) continue;
    auto zs = neg_rational_square(z);
    if (!zs) continue;
    EchelonBasis indep(d * d);
    indep.insert(flatten(Matrix::identity(d)));
    indep.insert(flatten(y));
    indep.insert(flatten(z));
    indep.insert(flatten(y * z));
    if (indep.size() == 4)
      return std::string("quaternion certificate: Y^2 = ") + Rat(*ys).get_str() +
             ", Z^2 = " + zs->get_str() + ", YZ = -ZY, {Id, Y, Z, YZ} independent";
  }
  if (basis.size() == 2)
    return std::string("complex certificate: Y^2 = ") + ys->get_str() + " < 0";
  return std::nullopt;
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::irreducible: return "irreducible";
    case Verdict::reducible: return "reducible";
    case Verdict::irreducible_real_larger_commutant:
      return "irreducible-over-R-with-larger-commutant";
    default: return "inconclusive";
  }
}

CommutantResult commutant_direct(const std::vector<Matrix>& gens) {
  CommutantResult out;
  out.method = "direct-sylvester";
  if (gens.empty()) throw std::invalid_argument("commutant_direct: no generators");
  const int d = gens[0].rows();
  Matrix sys(int(gens.size()) * d * d, d * d);
  int row = 0;
  for (const Matrix& g : gens) {
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        // sum_k g(r,k) C(k,c) - C(r,k) g(k,c) = 0
        for (int k = 0; k < d; ++k) {
          if (!g.at(r, k).is_zero()) sys.at(row, k * d + c) += g.at(r, k);
          if (!g.at(k, c).is_zero()) sys.at(row, r * d + k) -= g.at(k, c);
        }
        ++row;
      }
  }
  Matrix ker = kernel_basis(sys);
  out.computed = true;
  out.dim = ker.cols();
  for (int c = 0; c < ker.cols(); ++c) {
    Matrix b(d, d);
    for (int r = 0; r < d; ++r)
      for (int cc = 0; cc < d; ++cc) b.at(r, cc) = ker.at(r * d + cc, c);
    out.dense_basis.push_back(b);
    for (const Matrix& g : gens) {
      ++out.verification.checks_run;
      if (!commutator(b, g).is_zero())
        out.verification.failures.push_back(
            {"commutant-direct", "basis element " + std::to_string(c), "does not commute"});
    }
  }
  return out;
}

CommutantResult commutant(const SpinRep& r, int dense_budget) {
  CommutantResult out;
  if (r.dim() > dense_budget) {
    out.budget_exceeded = true;
    out.method = "budget exceeded (dense dimension " + std::to_string(r.dim()) + ")";
    return out;
  }
  if (r.level == Level::seven_half) {
    out.budget_exceeded = true;
    out.method = "no exact strategy at level 7/2 within budget";
    return out;
  }
  if (r.dim() <= 16) {
    std::vector<Matrix> gens;
    for (int i = 0; i < r.n(); ++i) gens.push_back(r.gen(i).materialize());
    return commutant_direct(gens);
  }
  if (r.level == Level::half) {
    SideBasis side = s_side_commutant(r);
    out.computed = true;
    out.dim = side.dim;
    out.method = r.restricted ? "restricted-right-regular" : "right-regular";
    out.verification = side.ver;
    if (r.dim() <= 64) out.dense_basis = side.dense;
    return out;
  }
  // Levels 3/2, 5/2: tensor strategy via the split-action identities.
  CheckReport split = split_identities_check(r);
  out.verification.checks_run += split.checks_run;
  for (const auto& f : split.failures) out.verification.failures.push_back(f);
  std::vector<Matrix> etas;
  for (int i = 0; i < r.n(); ++i) etas.push_back(r.vmod->eta(WeylWord{i}));
  CommutantResult vside = commutant_direct(etas);
  out.verification.checks_run += vside.verification.checks_run;
  for (const auto& f : vside.verification.failures) out.verification.failures.push_back(f);
  // u commuting with every eta_i also commutes with tau_i = eta_i - 1/2.
  for (const Matrix& u : vside.dense_basis)
    for (const TauOperator& t : r.taus) {
      ++out.verification.checks_run;
      if (!commutator(u, t.matrix).is_zero())
        out.verification.failures.push_back(
            {"commutant-v-side", "tau at " + root_to_string(t.root), "V-side element fails"});
    }
  SideBasis side = s_side_commutant(r);
  out.verification.checks_run += side.ver.checks_run;
  for (const auto& f : side.ver.failures) out.verification.failures.push_back(f);
  out.computed = true;
  out.dim = vside.dim * side.dim;
  out.method = "tensor (V-side direct, S-side " +
               std::string(r.restricted ? "restricted-right-regular)" : "right-regular)");
  if (r.dim() <= 64) {
    for (const Matrix& u : vside.dense_basis)
      for (const Matrix& s : side.dense) out.dense_basis.push_back(kron(u, s));
  }
  return out;
}

DecompositionReport invariant_subspace_search_dense(
    const std::vector<Matrix>& gens, const Matrix& form,
    const std::vector<std::vector<Scalar>>& seeds,
    const std::vector<Matrix>& commutant_basis) {
  DecompositionReport rep;
  if (gens.empty()) throw std::invalid_argument("invariant_subspace_search: no generators");
  const int d = gens[0].rows();
  auto record = [&](const Matrix& basis, const std::string& origin) {
    if (basis.cols() == 0 || basis.cols() >= d) return;
    for (const auto& s : rep.subspaces)
      if (s.basis == basis) return;
    SubspaceInfo info;
    info.dim = basis.cols();
    info.basis = basis;
    info.origin = origin;
    info.invariant_verified = verify_invariant(gens, basis);
    ++rep.checks.checks_run;
    if (!info.invariant_verified)
      rep.checks.failures.push_back({"subspace-invariance", origin, "closure escapes the span"});
    rep.subspaces.push_back(std::move(info));
  };

  // Spin-up closures of the seeds.
  for (size_t t = 0; t < seeds.size(); ++t) {
    EchelonBasis bas(d);
    std::vector<std::vector<Scalar>> work;
    if (bas.insert(seeds[t])) work.push_back(seeds[t]);
    std::vector<std::vector<Scalar>> collected = work;
    while (!work.empty()) {
      std::vector<std::vector<Scalar>> next;
      for (const auto& v : work)
        for (const Matrix& g : gens) {
          std::vector<Scalar> w = matvec(g, v);
          if (bas.insert(w)) { next.push_back(w); collected.push_back(w); }
        }
      work = std::move(next);
    }
    if (bas.size() < d)
      record(canonical_span(collected, d), "spin-up(seed " + std::to_string(t) + ")");
  }

  // Rational-eigenvalue splits of commutant elements.
  for (size_t t = 0; t < commutant_basis.size(); ++t) {
    const Matrix& b = commutant_basis[t];
    if (as_scalar_matrix(b)) continue;
    std::vector<Scalar> mp = minimal_polynomial(b);
    bool rational = true;
    for (const Scalar& c : mp)
      if (!c.is_rational()) { rational = false; break; }
    if (!rational) continue;
    for (const Rat& root : rational_roots(mp)) {
      Matrix shifted = b - Matrix::identity(d) * Scalar(root);
      Matrix ker = kernel_basis(shifted);
      if (ker.cols() == 0 || ker.cols() >= d) continue;
      std::vector<std::vector<Scalar>> cols;
      for (int c = 0; c < ker.cols(); ++c) {
        std::vector<Scalar> v(d);
        for (int r = 0; r < d; ++r) v[r] = ker.at(r, c);
        cols.push_back(std::move(v));
      }
      record(canonical_span(cols, d),
             "commutant-eigenspace(element " + std::to_string(t) + ", eigenvalue " +
                 root.get_str() + ")");
    }
  }

  // Orthogonal complements w.r.t. the contravariant form.
  const size_t found = rep.subspaces.size();
  for (size_t t = 0; t < found; ++t) {
    const Matrix& basis = rep.subspaces[t].basis;
    Matrix pairing = basis.transpose() * form;  // w x d
    Matrix comp = kernel_basis(pairing);
    if (comp.cols() == 0 || comp.cols() >= d) continue;
    // Direct-sum check: the two spans must intersect trivially.
    EchelonBasis both(d);
    int inserted = 0;
    for (int c = 0; c < basis.cols(); ++c) {
      std::vector<Scalar> v(d);
      for (int r = 0; r < d; ++r) v[r] = basis.at(r, c);
      if (both.insert(v)) ++inserted;
    }
    for (int c = 0; c < comp.cols(); ++c) {
      std::vector<Scalar> v(d);
      for (int r = 0; r < d; ++r) v[r] = comp.at(r, c);
      if (both.insert(v)) ++inserted;
    }
    if (inserted != basis.cols() + comp.cols()) continue;  // form degenerate on the piece
    std::vector<std::vector<Scalar>> cols;
    for (int c = 0; c < comp.cols(); ++c) {
      std::vector<Scalar> v(d);
      for (int r = 0; r < d; ++r) v[r] = comp.at(r, c);
      cols.push_back(std::move(v));
    }
    record(canonical_span(cols, d), "form-complement(of subspace " + std::to_string(t) + ")");
  }
  return rep;
}

DecompositionReport invariant_subspace_search(const SpinRep& r, int dense_budget) {
  DecompositionReport rep;
  rep.signature = form_signature(r);
  rep.commutant = commutant(r, dense_budget);
  if (r.dim() > dense_budget) {
    rep.budget_exceeded = true;
    rep.verdict = Verdict::inconclusive;
    rep.verdict_note = "dense search skipped: dimension " + std::to_string(r.dim()) +
                       " exceeds the budget " + std::to_string(dense_budget);
    return rep;
  }
  std::vector<Matrix> gens;
  for (int i = 0; i < r.n(); ++i) gens.push_back(r.gen(i).materialize());
  Matrix form;
  switch (r.kind()) {
    case RepKind::half_spinop: form = Matrix::identity(r.dim()); break;
    case RepKind::kron: form = kron(r.vmod->gram(), Matrix::identity(r.dim_s)); break;
    default:
      form = r.level == Level::half ? Matrix::identity(r.dim_s)
                                    : kron(r.vmod->gram(), Matrix::identity(r.dim_s));
  }
  std::vector<std::vector<Scalar>> seeds;
  std::vector<Scalar> e0(r.dim(), Scalar(0));
  e0[0] = Scalar(1);
  seeds.push_back(e0);
  if (r.level == Level::five_half && r.re.regular) {
    std::vector<Scalar> psi = psi_element(*r.vmod);
    std::vector<Scalar> seed(r.dim(), Scalar(0));
    for (int v = 0; v < r.dim_v; ++v) seed[size_t(v) * r.dim_s] = psi[v];
    seeds.push_back(seed);
  }
  DecompositionReport found = invariant_subspace_search_dense(gens, form, seeds,
                                                              rep.commutant.dense_basis);
  rep.subspaces = std::move(found.subspaces);
  for (const auto& f : found.checks.failures) rep.checks.failures.push_back(f);
  rep.checks.checks_run += found.checks.checks_run;

  if (!rep.subspaces.empty()) {
    rep.verdict = Verdict::reducible;
    rep.verdict_note = "proper invariant subspace exhibited";
  } else if (rep.commutant.computed && rep.commutant.dim == 1) {
    rep.verdict = Verdict::irreducible;
    rep.verdict_note = "commutant is the scalars";
  } else if (rep.commutant.computed) {
    auto cert = division_certificate(rep.commutant.dense_basis);
    if (cert) {
      rep.verdict = Verdict::irreducible_real_larger_commutant;
      rep.verdict_note = "commutant dim " + std::to_string(rep.commutant.dim) + "; " + *cert;
    } else {
      rep.verdict = Verdict::inconclusive;
      rep.verdict_note = "commutant dim " + std::to_string(rep.commutant.dim) +
                         " nonscalar; no rational eigenvalues and no division certificate";
    }
  } else {
    rep.verdict = Verdict::inconclusive;
    rep.verdict_note = "commutant not computed: " + rep.commutant.method;
  }
  return rep;
}

DecompositionReport s52_decompose(const SpinRep& r) {
  if (r.level != Level::five_half)
    throw std::invalid_argument("s52_decompose: level must be 5/2");
  DecompositionReport rep;
  rep.signature = form_signature(r);
  const int dv = r.dim_v, ds = r.dim_s, d = dv * ds;
  std::vector<Scalar> psi = psi_element(*r.vmod);  // throws on singular diagrams

  // tau(alpha_i) Psi = 1/2 Psi, exactly.
  for (int i = 0; i < r.n(); ++i) {
    ++rep.checks.checks_run;
    std::vector<Scalar> img = r.vmod->apply_matrix(r.taus[i].matrix, psi);
    bool ok = true;
    for (int v = 0; v < dv; ++v)
      if (!(img[v] == psi[v] * Scalar(Rat(1, 2)))) { ok = false; break; }
    if (!ok)
      rep.checks.failures.push_back({"tau-psi-half", "i=" + std::to_string(i + 1),
                                     "tau(alpha_i) Psi != 1/2 Psi"});
  }

  // The submodule Psi tensor S and the intertwiner to the level-1/2 rep.
  Matrix w1(d, ds);
  for (int v = 0; v < dv; ++v)
    for (int b = 0; b < ds; ++b) w1.at(v * ds + b, b) = psi[v];
  std::vector<Matrix> gens, rhos;
  for (int i = 0; i < r.n(); ++i) {
    gens.push_back(r.gen(i).materialize());
    RootVec alpha(r.n(), 0);
    alpha[i] = 1;
    rhos.push_back(r.gamma_s(alpha).materialize() * Scalar(Rat(1, 2)));
  }
  for (int i = 0; i < r.n(); ++i) {
    ++rep.checks.checks_run;
    if (!(gens[i] * w1 == w1 * rhos[i]))
      rep.checks.failures.push_back({"psi-intertwiner", "i=" + std::to_string(i + 1),
                                     "sigma_i (Psi tensor s) != Psi tensor rho_i s"});
  }
  SubspaceInfo s1;
  s1.dim = ds;
  s1.basis = w1;
  s1.origin = "psi-tensor-S";
  s1.invariant_verified = verify_invariant(gens, w1);
  ++rep.checks.checks_run;
  if (!s1.invariant_verified)
    rep.checks.failures.push_back({"psi-invariance", "Psi tensor S", "not invariant"});
  rep.subspaces.push_back(std::move(s1));

  // Orthogonal complement (Psi-perp) tensor S.
  std::vector<Scalar> w = r.vmod->apply_matrix(r.vmod->gram(), psi);
  Matrix pairing(1, dv);
  for (int v = 0; v < dv; ++v) pairing.at(0, v) = w[v];
  Matrix perp = kernel_basis(pairing);  // dv x (dv-1)
  // V-side invariance: b(Psi, tau_i u) = 0 for every column u.
  for (int i = 0; i < r.n(); ++i)
    for (int c = 0; c < perp.cols(); ++c) {
      ++rep.checks.checks_run;
      std::vector<Scalar> u(dv);
      for (int v = 0; v < dv; ++v) u[v] = perp.at(v, c);
      std::vector<Scalar> img = r.vmod->apply_matrix(r.taus[i].matrix, u);
      Scalar pair(0);
      for (int v = 0; v < dv; ++v)
        if (!w[v].is_zero() && !img[v].is_zero()) pair += w[v] * img[v];
      if (!pair.is_zero())
        rep.checks.failures.push_back({"complement-invariance-v",
                                       "i=" + std::to_string(i + 1) +
                                           " column=" + std::to_string(c),
                                       "b(Psi, tau_i u) = " + pair.to_string()});
    }
  Matrix w2(d, perp.cols() * ds);
  for (int c = 0; c < perp.cols(); ++c)
    for (int v = 0; v < dv; ++v)
      for (int b = 0; b < ds; ++b) w2.at(v * ds + b, c * ds + b) = perp.at(v, c);
  SubspaceInfo s2;
  s2.dim = w2.cols();
  s2.basis = w2;
  s2.origin = "psi-perp-tensor-S";
  s2.invariant_verified = d <= 64 ? verify_invariant(gens, w2) : true;
  if (d <= 64) {
    ++rep.checks.checks_run;
    if (!s2.invariant_verified)
      rep.checks.failures.push_back({"complement-invariance", "Psi-perp tensor S",
                                     "not invariant"});
    // Orthogonality of the two pieces under the contravariant form.
    ++rep.checks.checks_run;
    Matrix form = kron(r.vmod->gram(), Matrix::identity(ds));
    if (!(w1.transpose() * form * w2).is_zero())
      rep.checks.failures.push_back({"complement-orthogonality", "", "pieces not orthogonal"});
  }
  rep.subspaces.push_back(std::move(s2));
  ++rep.checks.checks_run;
  if (rep.subspaces[0].dim + rep.subspaces[1].dim != d)
    rep.checks.failures.push_back({"dimension-sum", "", "pieces do not fill the module"});
  rep.verdict = Verdict::reducible;
  rep.verdict_note = "split along the invariant element Psi";
  return rep;
}

Inertia form_signature(const SpinRep& r) {
  if (r.level == Level::half) return Inertia{r.dim_s, 0, 0};
  Inertia v = symmetric_inertia(r.vmod->gram());
  Inertia out{v.pos * r.dim_s, v.neg * r.dim_s, v.zero * r.dim_s};
  if (r.dim() <= 64) {
    Matrix form = kron(r.vmod->gram(), Matrix::identity(r.dim_s));
    Inertia direct = symmetric_inertia(form);
    if (direct.pos != out.pos || direct.neg != out.neg || direct.zero != out.zero)
      throw std::logic_error("form_signature: structured and dense inertia disagree");
  }
  return out;
}

std::vector<Scalar> minimal_polynomial(const Matrix& b) {
  if (b.rows() != b.cols()) throw std::invalid_argument("minimal_polynomial: square only");
  const int d = b.rows();
  EchelonBasis span(d * d);
  std::vector<Matrix> powers;
  Matrix pw = Matrix::identity(d);
  while (true) {
    if (!span.insert(flatten(pw))) break;
    powers.push_back(pw);
    pw = pw * b;
  }
  const int t = int(powers.size());
  Matrix sys(d * d, t);
  for (int c = 0; c < t; ++c) {
    std::vector<Scalar> f = flatten(powers[c]);
    for (int r = 0; r < d * d; ++r) sys.at(r, c) = f[r];
  }
  Matrix rhs(d * d, 1);
  std::vector<Scalar> f = flatten(pw);
  for (int r = 0; r < d * d; ++r) rhs.at(r, 0) = f[r];
  auto sol = solve(sys, rhs);
  if (!sol) throw std::logic_error("minimal_polynomial: inconsistent Krylov solve");
  std::vector<Scalar> coeffs(t + 1);
  for (int c = 0; c < t; ++c) coeffs[c] = sol->at(c, 0) * Scalar(-1);
  coeffs[t] = Scalar(1);
  return coeffs;
}

std::vector<Rat> rational_roots(const std::vector<Scalar>& monic) {
  for (const Scalar& c : monic)
    if (!c.is_rational()) throw std::invalid_argument("rational_roots: rational coeffs only");
  std::vector<Rat> coeffs;
  for (const Scalar& c : monic) coeffs.push_back(c.c0());
  // Clear denominators.
  mpz_class lcm = 1;
  for (const Rat& c : coeffs) {
    mpz_class den = c.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / g * den;
  }
  std::vector<mpz_class> ints;
  for (const Rat& c : coeffs) ints.push_back(mpz_class(c * Rat(lcm)));
  std::vector<Rat> roots;
  auto eval = [&](const Rat& x) {
    Rat acc = 0;
    for (int k = int(coeffs.size()) - 1; k >= 0; --k) acc = acc * x + coeffs[k];
    return acc;
  };
  // Deflate factors of t.
  size_t low = 0;
  while (low + 1 < ints.size() && ints[low] == 0) ++low;
  if (low > 0) roots.push_back(Rat(0));
  mpz_class a0 = abs(ints[low]);
  mpz_class am = abs(ints.back());
  auto divisors = [](const mpz_class& v) {
    std::vector<long> out;
    if (v == 0 || v > 1000000000L) return out;  // desk-scale guard
    long n = v.get_si();
    for (long t = 1; t * t <= n; ++t)
      if (n % t == 0) { out.push_back(t); if (t != n / t) out.push_back(n / t); }
    std::sort(out.begin(), out.end());
    return out;
  };
  for (long p : divisors(a0))
    for (long q : divisors(am)) {
      for (int sign : {1, -1}) {
        Rat cand(sign * p, q);
        cand.canonicalize();
        if (eval(cand) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
    }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace kacspin
