#include "kacspin/liftgroup.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace kacspin {

namespace {

constexpr double kPi = 3.14159265358979323846;

Rat floor_rat(const Rat& q) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return Rat(fl);
}

bool denominator_divides(const Rat& q, long d) {
  return mpz_divisible_p(mpz_class(d).get_mpz_t(), q.get_den().get_mpz_t()) != 0;
}

std::string angle_str(const Angle& a) {
  if (a.pi_multiple) return a.mult.get_str() + "pi";
  std::ostringstream os;
  os << a.radians;
  return os.str();
}

RepOp rep_identity(const SpinRep& r) {
  switch (r.kind()) {
    case RepKind::half_spinop: return RepOp(SpinOp::identity(r.n()));
    case RepKind::kron: return RepOp(KronOp::identity(r.dim_v, r.table));
    default: return RepOp(Matrix::identity(r.dim()));
  }
}

RootVec simple(int n, int i) {
  RootVec v(n, 0);
  v[i] = 1;
  return v;
}

/// The V-side coefficient matrices of the closed form at the six structural
/// slots (Id tensor Id, Id tensor Gamma, eta tensor Id, eta tensor Gamma,
/// f tensor Id, f tensor Gamma); level >= 3/2 only.
struct HigherBasis {
  Matrix id_v, eta, f;
  bool has_f = false;
};

HigherBasis higher_basis(const SpinRep& r, int i) {
  HigherBasis hb;
  hb.id_v = Matrix::identity(r.dim_v);
  hb.eta = r.vmod->eta(WeylWord{i});
  if (r.level == Level::seven_half) {
    hb.has_f = true;
    hb.f = r.taus[i].matrix - hb.eta + hb.id_v * Scalar(Rat(1, 2));
  }
  return hb;
}

std::vector<double> scale_add(std::vector<double> acc, const std::vector<double>& m, double c) {
  if (acc.empty()) acc.assign(m.size(), 0.0);
  for (size_t t = 0; t < m.size(); ++t) acc[t] += c * m[t];
  return acc;
}

}  // namespace

bool Angle::exact_capable() const { return pi_multiple && denominator_divides(mult, 2); }

Angle angle_pi(const Rat& mult) {
  Angle a;
  a.pi_multiple = true;
  a.mult = mult;
  a.radians = mult.get_d() * kPi;
  return a;
}

Angle angle_radians(double r) {
  Angle a;
  a.radians = r;
  return a;
}

Angle parse_angle(const std::string& text) {
  std::string s = text;
  if (s.empty()) throw std::invalid_argument("parse_angle: empty angle");
  if (s.size() >= 2 && s.substr(s.size() - 2) == "pi") {
    std::string head = s.substr(0, s.size() - 2);
    if (head.empty() || head == "+") return angle_pi(Rat(1));
    if (head == "-") return angle_pi(Rat(-1));
    try {
      Rat m(head);
      m.canonicalize();
      return angle_pi(m);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_angle: bad rational multiple in '" + text + "'");
    }
  }
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_angle: cannot parse '" + text + "'");
  }
  if (used != s.size()) throw std::invalid_argument("parse_angle: trailing junk in '" + text + "'");
  return angle_radians(v);
}

Scalar exact_cos_pi(const Rat& mult) {
  if (!denominator_divides(mult, 4))
    throw std::invalid_argument("exact_cos_pi: denominator must divide 4");
  Rat reduced = mult - Rat(2) * floor_rat(mult / Rat(2));
  Rat idx_r = reduced * Rat(4);
  long idx = mpz_class(idx_r.get_num()).get_si();  // 0..7 after reduction
  const Scalar half_sqrt2(0, Rat(1, 2), 0, 0, 0);
  switch (idx) {
    case 0: return Scalar(1);
    case 1: return half_sqrt2;
    case 2: return Scalar(0);
    case 3: return -half_sqrt2;
    case 4: return Scalar(-1);
    case 5: return -half_sqrt2;
    case 6: return Scalar(0);
    default: return half_sqrt2;
  }
}

Scalar exact_sin_pi(const Rat& mult) { return exact_cos_pi(Rat(1, 2) - mult); }

GroupElement closed_form_exp(const SpinRep& r, int i, const Angle& phi) {
  if (i < 0 || i >= r.n()) throw std::out_of_range("closed_form_exp: generator index");
  GroupElement out;
  out.dim = r.dim();
  out.provenance = "exp(" + angle_str(phi) + " * gen_" + std::to_string(i + 1) + ")";
  const bool exact = phi.exact_capable();
  const bool fill_float = !exact || r.dim() <= 4096;

  if (r.level == Level::half) {
    RepOp id = rep_identity(r);
    RepOp g = r.gamma_s(simple(r.n(), i));
    if (exact) {
      Scalar c = exact_cos_pi(phi.mult / Rat(2));
      Scalar s = exact_sin_pi(phi.mult / Rat(2));
      out.exact = true;
      out.op = id * c + g * s;
    }
    if (fill_float) {
      double h = phi.radians / 2.0;
      out.flt = scale_add(scale_add({}, id.materialize().to_double_rowmajor(), std::cos(h)),
                          g.materialize().to_double_rowmajor(), std::sin(h));
    }
    return out;
  }

  HigherBasis hb = higher_basis(r, i);
  if (exact) {
    const Rat& m = phi.mult;
    Scalar c1 = exact_cos_pi(m) * exact_cos_pi(m / Rat(2));
    Scalar c2 = exact_cos_pi(m) * exact_sin_pi(m / Rat(2));
    Scalar s1 = exact_sin_pi(m) * exact_cos_pi(m / Rat(2));
    Scalar s2 = exact_sin_pi(m) * exact_sin_pi(m / Rat(2));
    Matrix m0 = hb.id_v * c1 + hb.eta * s2;
    Matrix mi = hb.id_v * (-c2) + hb.eta * s1;
    if (hb.has_f) {
      Scalar c5 = (exact_cos_pi(m * Rat(5, 2)) - exact_cos_pi(m * Rat(3, 2))) * Scalar(Rat(1, 4));
      Scalar c6 = (exact_sin_pi(m * Rat(5, 2)) + exact_sin_pi(m * Rat(3, 2))) * Scalar(Rat(1, 4));
      m0 += hb.f * c5;
      mi += hb.f * c6;
    }
    out.exact = true;
    if (r.kind() == RepKind::kron) {
      out.op = RepOp(KronOp::tensor_mask(m0, 0, r.table) +
                     KronOp::tensor_mask(mi, uint32_t(1) << i, r.table));
    } else {
      Matrix gs = r.gamma_s(simple(r.n(), i)).materialize();
      out.op = RepOp(kron(m0, Matrix::identity(r.dim_s)) + kron(mi, gs));
    }
  }
  if (fill_float) {
    const double p = phi.radians;
    double c1 = std::cos(p) * std::cos(p / 2), c2 = std::cos(p) * std::sin(p / 2);
    double s1 = std::sin(p) * std::cos(p / 2), s2 = std::sin(p) * std::sin(p / 2);
    Matrix gs_exact = r.gamma_s(simple(r.n(), i)).materialize();
    std::vector<double> b0 = kron(hb.id_v, Matrix::identity(r.dim_s)).to_double_rowmajor();
    std::vector<double> b1 = kron(hb.id_v, gs_exact).to_double_rowmajor();
    std::vector<double> b2 = kron(hb.eta, Matrix::identity(r.dim_s)).to_double_rowmajor();
    std::vector<double> b3 = kron(hb.eta, gs_exact).to_double_rowmajor();
    std::vector<double> acc =
        scale_add(scale_add(scale_add(scale_add({}, b0, c1), b1, -c2), b2, s2), b3, s1);
    if (hb.has_f) {
      double c5 = 0.25 * (std::cos(2.5 * p) - std::cos(1.5 * p));
      double c6 = 0.25 * (std::sin(2.5 * p) + std::sin(1.5 * p));
      acc = scale_add(scale_add(std::move(acc),
                                kron(hb.f, Matrix::identity(r.dim_s)).to_double_rowmajor(), c5),
                      kron(hb.f, gs_exact).to_double_rowmajor(), c6);
    }
    out.flt = std::move(acc);
  }
  return out;
}

std::vector<double> numeric_expm(const std::vector<double>& m, int dim, double tol) {
  if (int(m.size()) != dim * dim) throw std::invalid_argument("numeric_expm: size mismatch");
  double norm = 0;
  for (int r = 0; r < dim; ++r) {
    double row = 0;
    for (int c = 0; c < dim; ++c) {
      if (!std::isfinite(m[size_t(r) * dim + c]))
        throw std::invalid_argument("numeric_expm: non-finite entry");
      row += std::fabs(m[size_t(r) * dim + c]);
    }
    norm = std::max(norm, row);
  }
  int s = 0;
  while (norm > 0.5) { norm /= 2; ++s; }
  const double scale = std::ldexp(1.0, -s);
  std::vector<double> a(m.size());
  for (size_t t = 0; t < m.size(); ++t) a[t] = m[t] * scale;
  std::vector<double> sum(m.size(), 0.0), term(m.size(), 0.0);
  for (int d = 0; d < dim; ++d) sum[size_t(d) * dim + d] = term[size_t(d) * dim + d] = 1.0;
  for (int k = 1; k <= 80; ++k) {
    term = flt_mul(term, a, dim);
    for (size_t t = 0; t < term.size(); ++t) term[t] /= k;
    double tmax = 0, smax = 0;
    for (size_t t = 0; t < term.size(); ++t) {
      sum[t] += term[t];
      tmax = std::max(tmax, std::fabs(term[t]));
      smax = std::max(smax, std::fabs(sum[t]));
    }
    if (tmax < tol * std::max(1.0, smax)) break;
  }
  for (int t = 0; t < s; ++t) sum = flt_mul(sum, sum, dim);
  return sum;
}

std::string lift_class_name(LiftClass c) {
  return c == LiftClass::lifts_to_K ? "lifts_to_K" : "lifts_only_to_Spin";
}

LiftReport lift_classify(const SpinRep& r) {
  LiftReport out;
  RepOp id = rep_identity(r);
  RepOp neg = id * Scalar(-1);
  std::optional<bool> only_spin;
  for (int i = 0; i < r.n(); ++i) {
    GroupElement e2 = closed_form_exp(r, i, angle_pi(Rat(2)));
    ++out.checks.checks_run;
    bool is_neg = e2.op == neg;
    bool is_pos = !is_neg && e2.op == id;
    if (!is_neg && !is_pos)
      throw std::logic_error("lift_classify: exp(2pi gen) is not +-Id");
    if (only_spin && *only_spin != is_neg)
      throw std::logic_error("lift_classify: lift case differs across generators");
    only_spin = is_neg;
    GroupElement e4 = closed_form_exp(r, i, angle_pi(Rat(4)));
    ++out.checks.checks_run;
    if (!(e4.op == id))
      out.checks.failures.push_back({"lift-4pi", "i=" + std::to_string(i + 1),
                                     "exp(4pi gen) is not the identity"});
  }
  out.cls = *only_spin ? LiftClass::lifts_only_to_Spin : LiftClass::lifts_to_K;
  return out;
}

CheckReport wspin_relations_check(const SpinRep& r) {
  CheckReport rep;
  const int n = r.n();
  RepOp id = rep_identity(r);
  RepOp neg = id * Scalar(-1);
  std::vector<RepOp> rs, rinv, r2;
  for (int i = 0; i < n; ++i) {
    rs.push_back(closed_form_exp(r, i, angle_pi(Rat(1, 2))).op);
    rinv.push_back(closed_form_exp(r, i, angle_pi(Rat(-1, 2))).op);
    r2.push_back(rs[i] * rs[i]);
  }
  for (int i = 0; i < n; ++i) {
    ++rep.checks_run;
    if (!(rs[i] * rinv[i] == id))
      rep.failures.push_back({"wspin-inverse", "i=" + std::to_string(i + 1),
                              "r_i * r_i^-1 != Id"});
    RepOp r4 = r2[i] * r2[i];
    ++rep.checks_run;
    if (!(r4 == neg))
      rep.failures.push_back({"wspin-R1-r4", "i=" + std::to_string(i + 1), "r_i^4 != -Id"});
    ++rep.checks_run;
    if (!(r4 * r4 == id))
      rep.failures.push_back({"wspin-R1", "i=" + std::to_string(i + 1), "r_i^8 != Id"});
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      RepOp lhs = rinv[j] * r2[i] * rs[j];
      RepOp rhs = r.gcm.has_edge(i, j) ? r2[i] * r2[j] : r2[i];
      ++rep.checks_run;
      if (!(lhs == rhs))
        rep.failures.push_back({"wspin-R2",
                                "(i,j)=(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                                "r_j^-1 r_i^2 r_j != r_i^2 r_j^{2n(i,j)}"});
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RepOp lhs, rhs;
      if (r.gcm.has_edge(i, j)) {
        lhs = rs[i] * rs[j] * rs[i];
        rhs = rs[j] * rs[i] * rs[j];
      } else {
        lhs = rs[i] * rs[j];
        rhs = rs[j] * rs[i];
      }
      ++rep.checks_run;
      if (!(lhs == rhs))
        rep.failures.push_back({"wspin-R3",
                                "(i,j)=(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                                "braid relation fails"});
    }
  return rep;
}

CheckReport ad_weyl_action_check(const SpinRep& r, int i, const RootVec& a) {
  if (r.level != Level::half)
    throw std::invalid_argument(
        "ad_weyl_action_check: Gamma conjugation form is a level-1/2 statement; "
        "use transport for higher levels");
  if (i < 0 || i >= r.n()) throw std::out_of_range("ad_weyl_action_check: index");
  if (norm2(r.gcm, a) != 2)
    throw std::invalid_argument("ad_weyl_action_check: a must be a real root");
  CheckReport rep;
  RepOp ga = r.gamma_s(a);
  RepOp ri = closed_form_exp(r, i, angle_pi(Rat(1, 2))).op;
  RepOp ri_inv = closed_form_exp(r, i, angle_pi(Rat(-1, 2))).op;
  RepOp lhs = ri * ga * ri_inv;
  const long pairing = inner(r.gcm, simple(r.n(), i), a);
  RepOp rhs;
  if (pairing % 2 == 0) {
    rhs = ga;
  } else {
    RootVec sia = reflect(r.gcm, i, a);
    rhs = r.gamma_s(sia) * Scalar(long(r.table.eps(simple(r.n(), i), a)));
  }
  ++rep.checks_run;
  if (!(lhs == rhs))
    rep.failures.push_back({"ad-weyl-exact", "i=" + std::to_string(i + 1) +
                                                 " a=" + root_to_string(a),
                            "r_i Gamma(a) r_i^-1 has the wrong value"});

  // General-angle float law.
  const double phi = 0.8;
  GroupElement c = closed_form_exp(r, i, angle_radians(phi));
  GroupElement cinv = closed_form_exp(r, i, angle_radians(-phi));
  std::vector<double> gaf = ga.materialize().to_double_rowmajor();
  std::vector<double> conj = flt_mul(flt_mul(c.flt, gaf, r.dim()), cinv.flt, r.dim());
  std::vector<double> expect;
  if (pairing % 2 == 0) {
    expect = gaf;
  } else {
    std::vector<double> giga =
        (r.gamma_s(simple(r.n(), i)) * ga).materialize().to_double_rowmajor();
    expect = scale_add(scale_add({}, gaf, std::cos(phi)), giga, std::sin(phi));
  }
  ++rep.checks_run;
  if (flt_max_abs_diff(conj, expect) > 1e-10)
    rep.failures.push_back({"ad-weyl-general-angle", "phi=0.8", "float conjugation law fails"});
  return rep;
}

std::vector<double> flt_mul(const std::vector<double>& a, const std::vector<double>& b, int dim) {
  std::vector<double> out(size_t(dim) * dim, 0.0);
  for (int r = 0; r < dim; ++r)
    for (int k = 0; k < dim; ++k) {
      double v = a[size_t(r) * dim + k];
      if (v == 0.0) continue;
      for (int c = 0; c < dim; ++c) out[size_t(r) * dim + c] += v * b[size_t(k) * dim + c];
    }
  return out;
}

double flt_max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0;
  for (size_t t = 0; t < a.size() && t < b.size(); ++t)
    m = std::max(m, std::fabs(a[t] - b[t]));
  if (a.size() != b.size()) return 1e300;
  return m;
}

}  // namespace kacspin
