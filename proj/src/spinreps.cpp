#include "kacspin/spinreps.hpp"

#include <algorithm>
#include <stdexcept>

namespace kacspin {

namespace {

RootVec simple_root_vec(int n, int i) {
  RootVec a(n, 0);
  a[i] = 1;
  return a;
}

Scalar inv_sqrt2() { return Scalar(Rat(0), Rat(1, 2), Rat(0), Rat(0), 0); }  // sqrt2 / 2

std::string entry_detail(const Matrix& m) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero())
        return "entry (" + std::to_string(r) + "," + std::to_string(c) +
               ") = " + m.at(r, c).to_string();
  return "zero";
}

std::string residual_detail(const RepOp& diff) {
  if (diff.is_zero()) return "zero";
  return entry_detail(diff.materialize());
}

void require_same_kind(const RepOp& a, const RepOp& b, const char* who) {
  if (a.kind != b.kind) throw std::logic_error(std::string(who) + ": mixed operator kinds");
}

}  // namespace

RepOp RepOp::operator+(const RepOp& o) const {
  require_same_kind(*this, o, "RepOp+");
  switch (kind) {
    case RepKind::half_spinop: return RepOp(s + o.s);
    case RepKind::kron: return RepOp(k + o.k);
    default: return RepOp(d + o.d);
  }
}

RepOp RepOp::operator-(const RepOp& o) const {
  require_same_kind(*this, o, "RepOp-");
  switch (kind) {
    case RepKind::half_spinop: return RepOp(s - o.s);
    case RepKind::kron: return RepOp(k - o.k);
    default: return RepOp(d - o.d);
  }
}

RepOp RepOp::operator*(const RepOp& o) const {
  require_same_kind(*this, o, "RepOp*");
  switch (kind) {
    case RepKind::half_spinop: return RepOp(s * o.s);
    case RepKind::kron: return RepOp(k * o.k);
    default: return RepOp(d * o.d);
  }
}

RepOp RepOp::operator*(const Scalar& c) const {
  switch (kind) {
    case RepKind::half_spinop: return RepOp(s * c);
    case RepKind::kron: return RepOp(k * c);
    default: return RepOp(d * c);
  }
}

RepOp RepOp::transpose() const {
  switch (kind) {
    case RepKind::half_spinop: return RepOp(s.transpose());
    case RepKind::kron: return RepOp(k.transpose());
    default: return RepOp(d.transpose());
  }
}

bool RepOp::is_zero() const {
  switch (kind) {
    case RepKind::half_spinop: return s.is_zero();
    case RepKind::kron: return k.is_zero();
    default: return d.is_zero();
  }
}

bool RepOp::operator==(const RepOp& o) const {
  require_same_kind(*this, o, "RepOp==");
  switch (kind) {
    case RepKind::half_spinop: return s == o.s;
    case RepKind::kron: return k == o.k;
    default: return d == o.d;
  }
}

Matrix RepOp::materialize() const {
  switch (kind) {
    case RepKind::half_spinop: return s.materialize();
    case RepKind::kron: return k.materialize();
    default: return d;
  }
}

RepOp commutator(const RepOp& a, const RepOp& b) { return a * b - b * a; }

RepKind SpinRep::kind() const {
  if (restricted) return RepKind::dense;
  return level == Level::half ? RepKind::half_spinop : RepKind::kron;
}

RepOp SpinRep::gen(int i) const {
  if (i < 0 || i >= n()) throw std::out_of_range("SpinRep::gen: index");
  switch (kind()) {
    case RepKind::half_spinop: return RepOp(gens_s[i]);
    case RepKind::kron: return RepOp(gens_kron[i]);
    default: return RepOp(gens_dense[i]);
  }
}

RepOp SpinRep::gamma_s(const RootVec& a) const {
  SpinOp g = SpinOp::gamma(table, a);
  if (!restricted) return RepOp(g);
  return RepOp(restricted_op(g, p, int(split_lambdas.size())));
}

RepOp SpinRep::expected_at_root(const RootVec& a) const {
  if (level == Level::half) {
    RepOp g = gamma_s(a);
    return g * Scalar(Rat(1, 2));
  }
  TauOperator t = tau(level, *vmod, a, branch_minus);
  if (!restricted) return RepOp(KronOp::tensor(t.matrix, a, table));
  Matrix gs = restricted_op(SpinOp::gamma(table, a), p, int(split_lambdas.size()));
  return RepOp(kron(t.matrix, gs));
}

Matrix restricted_op(const SpinOp& op, const Matrix& p, int k) {
  const int full = p.rows();
  const int cols = p.cols();
  Matrix out(cols, cols);
  const Rat scale(1, 1 << k);
  for (int c = 0; c < cols; ++c) {
    std::vector<Scalar> col(full);
    for (int r = 0; r < full; ++r) col[r] = p.at(r, c);
    std::vector<Scalar> img = op.apply(col);
    for (int r = 0; r < cols; ++r) {
      Scalar acc(0);
      for (int row = 0; row < full; ++row)
        if (!p.at(row, r).is_zero() && !img[row].is_zero()) acc += p.at(row, r) * img[row];
      out.at(r, c) = acc * Scalar(scale);
    }
  }
  return out;
}

SpinRep build_rho(const GCM& g) {
  SpinRep r;
  r.level = Level::half;
  r.gcm = g;
  r.re = realization(g);
  r.table = CocycleTable(g);
  r.dim_v = 1;
  r.dim_s = 1 << g.n;
  for (int i = 0; i < g.n; ++i)
    r.gens_s.push_back(SpinOp::gamma(r.table, simple_root_vec(g.n, i)) * Scalar(Rat(1, 2)));
  return r;
}

SpinRep restrict_irreducible(const SpinRep& r) {
  if (r.level != Level::half || r.restricted)
    throw std::invalid_argument("restrict_irreducible: needs the unrestricted level-1/2 rep");
  const GCM& g = r.gcm;
  const int n = g.n;

  // Scan for the canonical maximal family of commuting splitting involutions.
  std::vector<uint32_t> lambdas;
  std::vector<uint32_t> span{0};
  auto in_span = [&](uint32_t m) { return std::find(span.begin(), span.end(), m) != span.end(); };
  auto mask_root = [&](uint32_t m) {
    RootVec v(n, 0);
    for (int i = 0; i < n; ++i)
      if (m & (1u << i)) v[i] = 1;
    return v;
  };
  bool grew = true;
  while (grew) {
    grew = false;
    for (uint32_t m = 1; m < (1u << n); ++m) {
      if (in_span(m)) continue;
      RootVec mv = mask_root(m);
      long nn = norm2(g, mv);
      if (((nn % 4) + 4) % 4 != 0) continue;
      bool ok = true;
      for (uint32_t l : lambdas)
        if (inner(g, mv, mask_root(l)) % 2 != 0) { ok = false; break; }
      if (!ok) continue;
      lambdas.push_back(m);
      std::vector<uint32_t> grown;
      for (uint32_t sp : span) { grown.push_back(sp); grown.push_back(sp ^ m); }
      span = grown;
      grew = true;
      break;
    }
  }
  const int k = int(lambdas.size());
  const int full = 1 << n;
  const int cols = full >> k;

  // Coset representatives (smallest element of each span-coset), ascending.
  std::vector<uint32_t> reps;
  for (uint32_t b = 0; b < uint32_t(full); ++b) {
    bool minimal = true;
    for (uint32_t sp : span)
      if (sp != 0 && (b ^ sp) < b) { minimal = false; break; }
    if (minimal) reps.push_back(b);
  }
  if (int(reps.size()) != cols) throw std::logic_error("restrict_irreducible: coset count");

  // Column for rep beta: prod_j (1 + R(lambda_j)) e_beta, exact +-1 weights.
  Matrix p(full, cols);
  for (int c = 0; c < cols; ++c) {
    std::vector<int> w(full, 0);
    w[reps[c]] = 1;
    for (uint32_t l : lambdas) {
      std::vector<int> next = w;
      for (int b = 0; b < full; ++b)
        if (w[b] != 0) next[b ^ l] += r.table.eps_mask(uint32_t(b), l) * w[b];
      w = next;
    }
    for (int b = 0; b < full; ++b)
      if (w[b] != 0) p.at(b, c) = Scalar(long(w[b]));
  }

  SpinRep out;
  out.level = Level::half;
  out.gcm = g;
  out.re = r.re;
  out.table = r.table;
  out.restricted = true;
  out.split_lambdas = lambdas;
  out.p = p;
  out.dim_v = 1;
  out.dim_s = cols;
  for (int i = 0; i < n; ++i)
    out.gens_dense.push_back(
        restricted_op(SpinOp::gamma(r.table, simple_root_vec(n, i)), p, k) * Scalar(Rat(1, 2)));

  // Re-verify the defining axioms on the restricted generators.
  Matrix neg_quarter = Matrix::identity(cols) * Scalar(Rat(-1, 4));
  for (int i = 0; i < n; ++i)
    if (out.gens_dense[i] * out.gens_dense[i] != neg_quarter)
      throw std::logic_error("restrict_irreducible: square axiom lost");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Matrix rel = g.has_edge(i, j) ? anticommutator(out.gens_dense[i], out.gens_dense[j])
                                    : commutator(out.gens_dense[i], out.gens_dense[j]);
      if (!rel.is_zero()) throw std::logic_error("restrict_irreducible: pair axiom lost");
    }
  return out;
}

SpinRep build_sigma(const GCM& g, Level level, const SpinRep& rho, bool branch_minus) {
  if (level == Level::half) throw std::invalid_argument("build_sigma: level must be 3/2, 5/2, 7/2");
  if (rho.level != Level::half || rho.gcm.a != g.a)
    throw std::invalid_argument("build_sigma: rho must be a level-1/2 rep of the same diagram");
  SpinRep out;
  out.level = level;
  out.gcm = g;
  out.re = realization(g);
  if (!out.re.regular && level == Level::seven_half)
    throw std::domain_error("level 7/2 requires a regular diagram");
  out.experimental = !out.re.regular;
  out.branch_minus = branch_minus;
  out.table = rho.table;
  out.restricted = rho.restricted;
  out.split_lambdas = rho.split_lambdas;
  out.p = rho.p;
  out.vmod = std::make_shared<SymModule>(out.re, level_sym_power(level));
  out.dim_v = out.vmod->dim();
  out.dim_s = rho.dim_s;
  for (int i = 0; i < g.n; ++i) {
    RootVec ai = simple_root_vec(g.n, i);
    out.taus.push_back(tau(level, *out.vmod, ai, branch_minus));
    if (!rho.restricted) {
      out.gens_kron.push_back(KronOp::tensor(out.taus[i].matrix, ai, out.table));
    } else {
      Matrix gamma_restr = rho.gens_dense[i] * Scalar(2);  // 2 rho'_i = Gamma'_i
      out.gens_dense.push_back(kron(out.taus[i].matrix, gamma_restr));
    }
  }
  return out;
}

CheckReport verify_berman(const SpinRep& r, long dense_threshold) {
  CheckReport rep;
  const int n = r.n();
  auto record = [&](const std::string& id, int i, int j, const RepOp& diff, const char* path) {
    if (diff.is_zero()) return;
    rep.failures.push_back(
        {id, "i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1),
         std::string(path) + " residual: " + residual_detail(diff)});
  };
  // Native exact verification (SpinOp table algebra / KronOp factored / dense).
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      RepOp gi = r.gen(i), gj = r.gen(j);
      if (r.gcm.has_edge(i, j)) {
        RepOp res = commutator(gi, commutator(gi, gj)) + gj;
        record("berman-edge", i, j, res, "native");
        ++rep.checks_run;
      } else if (i < j) {
        record("berman-commute", i, j, commutator(gi, gj), "native");
        ++rep.checks_run;
      }
    }
  // Dense materialized cross-check within thresholds.
  bool dense_check = false;
  if (r.kind() == RepKind::half_spinop) dense_check = r.dim() <= 512;
  else if (r.kind() == RepKind::kron) dense_check = r.dim() <= dense_threshold;
  if (dense_check) {
    std::vector<Matrix> gd;
    for (int i = 0; i < n; ++i) gd.push_back(r.gen(i).materialize());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        if (r.gcm.has_edge(i, j)) {
          Matrix res = commutator(gd[i], commutator(gd[i], gd[j])) + gd[j];
          record("berman-edge", i, j, RepOp(res), "dense");
          ++rep.checks_run;
        } else if (i < j) {
          record("berman-commute", i, j, RepOp(commutator(gd[i], gd[j])), "dense");
          ++rep.checks_run;
        }
      }
  }
  return rep;
}

RepOp nested_commutator(const SpinRep& r, const std::vector<int>& word) {
  if (word.empty()) throw std::invalid_argument("nested_commutator: empty word");
  RepOp acc = r.gen(word.back());
  for (int k = int(word.size()) - 2; k >= 0; --k) acc = commutator(r.gen(word[k]), acc);
  return acc;
}

namespace {

/// The exact pi/2 letter exp((pi/2) * generator_j) and its inverse.
std::pair<RepOp, RepOp> half_turn_letters(const SpinRep& r, int j) {
  const Scalar c = inv_sqrt2();
  RootVec aj = simple_root_vec(r.n(), j);
  switch (r.kind()) {
    case RepKind::half_spinop: {
      SpinOp id = SpinOp::identity(r.n());
      SpinOp gj = SpinOp::gamma(r.table, aj);
      return {RepOp((id + gj) * c), RepOp((id - gj) * c)};
    }
    case RepKind::kron: {
      Matrix eta = r.vmod->eta(WeylWord{j});
      KronOp fwd(r.dim_v, r.table), bwd(r.dim_v, r.table);
      fwd.add_term(0, eta * c);
      fwd.add_term(r.table.mask_of(aj), eta * c);
      bwd.add_term(0, eta * c);
      bwd.add_term(r.table.mask_of(aj), eta * (c * Scalar(-1)));
      return {RepOp(fwd), RepOp(bwd)};
    }
    default: {
      if (r.level == Level::half) {
        Matrix id = Matrix::identity(r.dim_s);
        Matrix gj = r.gens_dense[j] * Scalar(2);
        return {RepOp((id + gj) * c), RepOp((id - gj) * c)};
      }
      Matrix eta = r.vmod->eta(WeylWord{j});
      Matrix id = Matrix::identity(r.dim_s);
      Matrix gj = restricted_op(SpinOp::gamma(r.table, aj), r.p, int(r.split_lambdas.size()));
      return {RepOp(kron(eta, id + gj) * c), RepOp(kron(eta, id - gj) * c)};
    }
  }
}

}  // namespace

TransportResult transport(const SpinRep& r, const RootVec& a) {
  TransportResult out;
  out.root = a;
  auto [word, idx] = word_to_simple(r.gcm, a);
  out.word = word;
  out.simple_idx = idx;
  out.op = r.gen(idx);
  RootVec current = simple_root_vec(r.n(), idx);
  // a = s_{w_1} ... s_{w_t} alpha_idx: conjugate by the last letter first.
  for (int k = int(word.size()) - 1; k >= 0; --k) {
    const int j = word[k];
    RootVec aj = simple_root_vec(r.n(), j);
    const int eps = r.table.eps(aj, current);
    out.naive_sign *= eps;
    if (inner(r.gcm, aj, current) % 2 != 0) out.sign *= eps;
    auto [fwd, bwd] = half_turn_letters(r, j);
    out.op = fwd * out.op * bwd;
    current = reflect(r.gcm, j, current);
  }
  if (current != a) throw std::logic_error("transport: word does not reach the root");
  out.naive_matches = (out.naive_sign == out.sign);
  out.verified = (out.op == r.expected_at_root(a) * Scalar(long(out.sign)));
  return out;
}

CheckReport split_identities_check(const SpinRep& r) {
  if (r.level != Level::three_half && r.level != Level::five_half)
    throw std::invalid_argument("split_identities_check: level must be 3/2 or 5/2");
  CheckReport rep;
  const int n = r.n();
  for (int i = 0; i < n; ++i) {
    RootVec ai = simple_root_vec(n, i);
    RepOp s1 = r.gen(i);
    RepOp s2 = s1 * s1;
    RepOp s3 = s2 * s1;
    RepOp s4 = s2 * s2;
    Matrix eta = r.vmod->eta(WeylWord{i});
    RepOp id_rho, eta_id, id_id, eta_shift_id;
    if (!r.restricted) {
      id_rho = RepOp(KronOp::tensor(Matrix::identity(r.dim_v) * Scalar(Rat(1, 2)),
                                    ai, r.table));
      eta_id = RepOp(KronOp::tensor(eta, RootVec(n, 0), r.table));
      id_id = RepOp(KronOp::identity(r.dim_v, r.table));
      eta_shift_id = RepOp(KronOp::tensor(eta - Matrix::identity(r.dim_v) * Scalar(Rat(5, 4)),
                                          RootVec(n, 0), r.table));
    } else {
      Matrix gj = restricted_op(SpinOp::gamma(r.table, ai), r.p, int(r.split_lambdas.size()));
      id_rho = RepOp(kron(Matrix::identity(r.dim_v), gj * Scalar(Rat(1, 2))));
      eta_id = RepOp(kron(eta, Matrix::identity(r.dim_s)));
      id_id = RepOp(Matrix::identity(r.dim()));
      eta_shift_id = RepOp(kron(eta - Matrix::identity(r.dim_v) * Scalar(Rat(5, 4)),
                                Matrix::identity(r.dim_s)));
    }
    auto check = [&](const char* name, const RepOp& lhs, const RepOp& rhs) {
      ++rep.checks_run;
      RepOp diff = lhs - rhs;
      if (!diff.is_zero())
        rep.failures.push_back({name, "i=" + std::to_string(i + 1),
                                "residual: " + residual_detail(diff)});
    };
    check("split-a", id_rho, s3 * Scalar(Rat(2, 3)) + s1 * Scalar(Rat(7, 6)));
    check("split-b", eta_id, s4 * Scalar(Rat(-20, 9)) + s2 * Scalar(Rat(-41, 9)));
    check("split-c", id_id, s4 * Scalar(Rat(-16, 9)) + s2 * Scalar(Rat(-40, 9)));
    check("split-square", s2, eta_shift_id);
  }
  return rep;
}

CheckReport mu_quartic_check(const GCM& g, Level level) {
  if (level != Level::three_half && level != Level::five_half)
    throw std::invalid_argument("mu_quartic_check: level must be 3/2 or 5/2");
  SpinRep rho = build_rho(g);
  SpinRep sigma = build_sigma(g, level, rho);
  const long total = long(sigma.dim()) * rho.dim();
  if (total > 512) throw std::domain_error("mu_quartic_check: dense budget exceeded");
  CheckReport rep;
  const int ds = sigma.dim();
  const int dr = rho.dim();
  Matrix id_big = Matrix::identity(ds * dr);
  for (int i = 0; i < g.n; ++i) {
    Matrix sig = sigma.gen(i).materialize();
    Matrix rh = rho.gen(i).materialize();
    Matrix mu = kron(sig, Matrix::identity(dr)) + kron(Matrix::identity(ds), rh);
    Matrix mu2 = mu * mu;
    Matrix mu4 = mu2 * mu2;
    // (1) claimed quartic.
    ++rep.checks_run;
    Matrix quartic = mu4 + mu2 * Scalar(Rat(5, 2)) + id_big * Scalar(Rat(9, 16));
    if (!quartic.is_zero()) {
      Matrix mu3 = mu2 * mu;
      Matrix quintic = mu4 * mu + mu3 * Scalar(5) + mu * Scalar(4);
      std::string note = quintic.is_zero()
                             ? "; mu instead satisfies mu^5 + 5 mu^3 + 4 mu = 0 exactly"
                             : "";
      rep.failures.push_back({"mu-quartic", "i=" + std::to_string(i + 1),
                              "residual " + entry_detail(quartic) + note});
    }
    // (2) span claim: dim span{Id, mu, mu^2, mu^3, mu^4} <= 4.
    ++rep.checks_run;
    EchelonBasis span(ds * dr * ds * dr);
    auto flat = [&](const Matrix& m) {
      std::vector<Scalar> v;
      v.reserve(size_t(m.rows()) * m.cols());
      for (int rr = 0; rr < m.rows(); ++rr)
        for (int cc = 0; cc < m.cols(); ++cc) v.push_back(m.at(rr, cc));
      return v;
    };
    span.insert(flat(id_big));
    span.insert(flat(mu));
    span.insert(flat(mu2));
    span.insert(flat(mu2 * mu));
    span.insert(flat(mu4));
    if (span.size() > 4)
      rep.failures.push_back({"mu-span", "i=" + std::to_string(i + 1),
                              "dim span{Id, mu..mu^4} = " + std::to_string(span.size()) +
                                  " exceeds the claimed bound 4"});
    // (3) sigma tensor Id must lie outside the power span.
    ++rep.checks_run;
    if (span.contains(flat(kron(sig, Matrix::identity(dr)))))
      rep.failures.push_back({"mu-span-outside", "i=" + std::to_string(i + 1),
                              "sigma(X_i) tensor Id lies inside span{mu^t}"});
    // (4) negative control: the constant changed to -1/2 must not annihilate.
    ++rep.checks_run;
    if ((mu4 + mu2 * Scalar(Rat(5, 2)) + id_big * Scalar(Rat(1, 2))).is_zero())
      rep.failures.push_back({"mu-negative-control", "i=" + std::to_string(i + 1),
                              "modified constant unexpectedly annihilates"});
  }
  return rep;
}

WitnessResult kernel_witness(const GCM& g, Level level, int max_height,
                             const std::optional<std::pair<RootVec, RootVec>>& pair) {
  if (level == Level::half)
    throw std::invalid_argument("kernel_witness: level must be 3/2, 5/2, 7/2");
  WitnessResult out;
  RootVec alpha, beta;
  if (pair) {
    alpha = pair->first;
    beta = pair->second;
    if (!is_real_root_norm(g, alpha) || !is_real_root_norm(g, beta))
      throw std::invalid_argument("kernel_witness: explicit pair must be real roots");
    bool even = true;
    for (int i = 0; i < g.n; ++i)
      if (((alpha[i] - beta[i]) % 2 + 2) % 2 != 0) even = false;
    if (!even) throw std::invalid_argument("kernel_witness: pair difference not in 2Q");
    out.found = true;
  } else {
    std::vector<RootVec> roots = real_roots(g, max_height);
    for (size_t i = 0; i < roots.size() && !out.found; ++i)
      for (size_t j = i + 1; j < roots.size() && !out.found; ++j) {
        bool even = true;
        for (int t = 0; t < g.n; ++t)
          if (((roots[j][t] - roots[i][t]) % 2 + 2) % 2 != 0) { even = false; break; }
        if (!even) continue;
        beta = roots[i];
        alpha = roots[j];  // the higher (later in lex order) root
        out.found = true;
      }
    if (!out.found) return out;
  }
  out.alpha = alpha;
  out.beta = beta;

  SpinRep rho = build_rho(g);
  TransportResult ta = transport(rho, alpha);
  TransportResult tb = transport(rho, beta);
  out.s = ta.sign * tb.sign;
  ++out.checks.checks_run;
  out.rho_match = (ta.op * Scalar(long(out.s)) == tb.op);
  if (!out.rho_match)
    out.checks.failures.push_back({"witness-rho-match",
                                   root_to_string(alpha) + " vs " + root_to_string(beta),
                                   "level-1/2 images do not agree up to sign"});

  SpinRep sigma = build_sigma(g, level, rho);
  TransportResult sa = transport(sigma, alpha);
  TransportResult sb = transport(sigma, beta);
  RepOp diff = sa.op - sb.op * Scalar(long(out.s));
  out.sigma_differs = !diff.is_zero();
  ++out.checks.checks_run;
  if (!out.sigma_differs)
    out.checks.failures.push_back({"witness-sigma-differs",
                                   root_to_string(alpha) + " vs " + root_to_string(beta),
                                   "higher-level images coincide; no witness"});
  // Structure of the difference: sign_a * (tau(alpha) - tau(beta)) tensor Gamma(alpha).
  TauOperator tau_a = tau(level, *sigma.vmod, alpha, sigma.branch_minus);
  TauOperator tau_b = tau(level, *sigma.vmod, beta, sigma.branch_minus);
  ++out.checks.checks_run;
  RepOp expected;
  if (!sigma.restricted) {
    expected = RepOp(KronOp::tensor((tau_a.matrix - tau_b.matrix) * Scalar(long(sa.sign)),
                                    alpha, sigma.table));
  } else {
    Matrix gs = restricted_op(SpinOp::gamma(sigma.table, alpha), sigma.p,
                              int(sigma.split_lambdas.size()));
    expected = RepOp(kron((tau_a.matrix - tau_b.matrix) * Scalar(long(sa.sign)), gs));
  }
  if (!(diff == expected))
    out.checks.failures.push_back({"witness-difference-form",
                                   root_to_string(alpha) + " vs " + root_to_string(beta),
                                   "difference is not (tau_a - tau_b) tensor Gamma"});
  ++out.checks.checks_run;
  if (tau_a.matrix == tau_b.matrix)
    out.checks.failures.push_back({"witness-eta-differs",
                                   root_to_string(alpha) + " vs " + root_to_string(beta),
                                   "tau operators coincide on h*"});
  return out;
}

CheckReport invariant_checks(const SpinRep& r) {
  CheckReport rep;
  for (int i = 0; i < r.n(); ++i) {
    RepOp gi = r.gen(i);
    // Traceless.
    ++rep.checks_run;
    Scalar tr(0);
    {
      Matrix m = gi.materialize();
      for (int d = 0; d < m.rows(); ++d) tr += m.at(d, d);
    }
    if (!tr.is_zero())
      rep.failures.push_back({"traceless", "i=" + std::to_string(i + 1),
                              "trace = " + tr.to_string()});
    // Skew-adjointness w.r.t. the contravariant form.
    ++rep.checks_run;
    RepOp form;
    switch (r.kind()) {
      case RepKind::half_spinop:
        form = RepOp(SpinOp::identity(r.n()));
        break;
      case RepKind::kron:
        form = RepOp(KronOp::tensor(r.vmod->gram(), RootVec(r.n(), 0), r.table));
        break;
      default:
        form = RepOp(r.level == Level::half
                         ? Matrix::identity(r.dim_s)
                         : kron(r.vmod->gram(), Matrix::identity(r.dim_s)));
    }
    RepOp skew = gi.transpose() * form + form * gi;
    if (!skew.is_zero())
      rep.failures.push_back({"contravariant-skew", "i=" + std::to_string(i + 1),
                              "residual: " + residual_detail(skew)});
  }
  return rep;
}

void inject_flip(SpinRep& r, int i, long at) {
  if (i < 0 || i >= r.n()) throw std::invalid_argument("inject_flip: generator index");
  switch (r.kind()) {
    case RepKind::half_spinop: {
      if (at < 0 || at >= r.dim_s) throw std::invalid_argument("inject_flip: site");
      SpinOp rebuilt(r.n());
      for (const auto& [cls, w] : r.gens_s[i].terms()) {
        std::vector<Scalar> nw = w;
        nw[size_t(at)] = nw[size_t(at)] * Scalar(-1);
        rebuilt.add_term(cls, nw);
      }
      r.gens_s[i] = rebuilt;
      return;
    }
    case RepKind::kron: {
      if (at < 0 || at >= long(r.dim_v) * r.dim_v)
        throw std::invalid_argument("inject_flip: site");
      KronOp rebuilt(r.dim_v, r.table);
      bool first = true;
      for (const auto& [m, a] : r.gens_kron[i].terms()) {
        Matrix na = a;
        if (first) {
          int rr = int(at / r.dim_v), cc = int(at % r.dim_v);
          na.at(rr, cc) = na.at(rr, cc) * Scalar(-1);
          first = false;
        }
        rebuilt.add_term(m, na);
      }
      r.gens_kron[i] = rebuilt;
      return;
    }
    default: {
      Matrix& m = r.gens_dense[i];
      if (at < 0 || at >= long(m.rows()) * m.cols())
        throw std::invalid_argument("inject_flip: site");
      int rr = int(at / m.cols()), cc = int(at % m.cols());
      m.at(rr, cc) = m.at(rr, cc) * Scalar(-1);
      return;
    }
  }
}

}  // namespace kacspin
