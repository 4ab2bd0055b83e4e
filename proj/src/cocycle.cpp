#include "kacspin/cocycle.hpp"

#include <bit>
#include <stdexcept>

namespace kacspin {

CocycleTable::CocycleTable(const GCM& g) : n_(g.n), gcm_(g) {
  t_.assign(n_, std::vector<int>(n_, 0));
  row_masks_.assign(n_, 0);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (i < j)
        t_[i][j] = ((g.a[i][j] % 2) + 2) % 2;
      else if (i == j)
        t_[i][j] = 1;  // (alpha_i|alpha_i)/2 = 1 mod 2
    }
    for (int j = 0; j < n_; ++j)
      if (t_[i][j]) row_masks_[i] |= (1u << j);
  }
}

int CocycleTable::eps(const RootVec& a, const RootVec& b) const {
  long acc = 0;
  for (int i = 0; i < n_; ++i) {
    if (a[i] % 2 == 0) continue;
    for (int j = 0; j < n_; ++j)
      if (b[j] % 2 != 0) acc += t_[i][j];
  }
  return (acc % 2) ? -1 : 1;
}

int CocycleTable::eps_mask(uint32_t a, uint32_t b) const {
  int acc = 0;
  uint32_t rest = a;
  while (rest) {
    const int i = std::countr_zero(rest);
    rest &= rest - 1;
    acc ^= std::popcount(row_masks_[i] & b) & 1;
  }
  return acc ? -1 : 1;
}

uint32_t CocycleTable::mask_of(const RootVec& a) const {
  uint32_t m = 0;
  for (int i = 0; i < n_; ++i)
    if (((a[i] % 2) + 2) % 2) m |= (1u << i);
  return m;
}

SpinOp SpinOp::identity(int n) {
  SpinOp op(n);
  op.terms_[0] = std::vector<Scalar>(size_t(1) << n, Scalar(1));
  return op;
}

SpinOp SpinOp::gamma(const CocycleTable& t, const RootVec& a) {
  SpinOp op(t.n());
  const uint32_t cls = t.mask_of(a);
  const uint32_t amask = cls;
  std::vector<Scalar> w(size_t(1) << t.n());
  for (uint32_t b = 0; b < w.size(); ++b) w[b] = Scalar(t.eps_mask(amask, b));
  op.terms_[cls] = std::move(w);
  return op;
}

SpinOp SpinOp::right_reg(const CocycleTable& t, const RootVec& lambda) {
  SpinOp op(t.n());
  const uint32_t cls = t.mask_of(lambda);
  std::vector<Scalar> w(size_t(1) << t.n());
  for (uint32_t b = 0; b < w.size(); ++b) w[b] = Scalar(t.eps_mask(b, cls));
  op.terms_[cls] = std::move(w);
  return op;
}

bool SpinOp::is_zero() const { return terms_.empty(); }

void SpinOp::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    bool nz = false;
    for (const auto& x : it->second)
      if (!x.is_zero()) {
        nz = true;
        break;
      }
    it = nz ? std::next(it) : terms_.erase(it);
  }
}

void SpinOp::add_term(uint32_t cls, std::vector<Scalar> w) {
  auto it = terms_.find(cls);
  if (it == terms_.end()) {
    terms_[cls] = std::move(w);
  } else {
    for (size_t i = 0; i < it->second.size(); ++i) it->second[i] += w[i];
  }
  prune();
}

SpinOp SpinOp::operator+(const SpinOp& o) const {
  SpinOp out = *this;
  for (const auto& [cls, w] : o.terms_) out.add_term(cls, w);
  return out;
}

SpinOp SpinOp::operator-(const SpinOp& o) const { return *this + (-o); }

SpinOp SpinOp::operator-() const {
  SpinOp out(n_);
  for (const auto& [cls, w] : terms_) {
    std::vector<Scalar> neg(w.size());
    for (size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
    out.terms_[cls] = std::move(neg);
  }
  return out;
}

SpinOp SpinOp::operator*(const SpinOp& o) const {
  // (this o other) e_b = sum over pairs: w2(b) * w1(b ^ c2) e_{b ^ c2 ^ c1}
  SpinOp out(n_);
  const size_t N = size_t(1) << n_;
  for (const auto& [c1, w1] : terms_) {
    for (const auto& [c2, w2] : o.terms_) {
      std::vector<Scalar> w(N);
      for (uint32_t b = 0; b < N; ++b) {
        if (w2[b].is_zero()) continue;
        const Scalar& f = w1[b ^ c2];
        if (f.is_zero()) continue;
        w[b] = f * w2[b];
      }
      out.add_term(c1 ^ c2, std::move(w));
    }
  }
  return out;
}

SpinOp SpinOp::operator*(const Scalar& s) const {
  if (s.is_zero()) return SpinOp(n_);
  SpinOp out(n_);
  for (const auto& [cls, w] : terms_) {
    std::vector<Scalar> sw(w.size());
    for (size_t i = 0; i < w.size(); ++i)
      if (!w[i].is_zero()) sw[i] = w[i] * s;
    out.terms_[cls] = std::move(sw);
  }
  return out;
}

SpinOp SpinOp::transpose() const {
  // matrix entry (b ^ cls, b) = w(b); transpose has entry (b, b ^ cls),
  // i.e. weight w'(b) = w(b ^ cls) for the same class.
  SpinOp out(n_);
  for (const auto& [cls, w] : terms_) {
    std::vector<Scalar> tw(w.size());
    for (uint32_t b = 0; b < w.size(); ++b) tw[b] = w[b ^ cls];
    out.terms_[cls] = std::move(tw);
  }
  return out;
}

bool SpinOp::operator==(const SpinOp& o) const {
  if (n_ != o.n_) return false;
  return (*this - o).is_zero();
}

std::vector<Scalar> SpinOp::apply(const std::vector<Scalar>& v) const {
  std::vector<Scalar> out(v.size());
  for (const auto& [cls, w] : terms_)
    for (uint32_t b = 0; b < v.size(); ++b) {
      if (v[b].is_zero() || w[b].is_zero()) continue;
      out[b ^ cls] += w[b] * v[b];
    }
  return out;
}

Matrix SpinOp::materialize() const {
  const int N = dim();
  Matrix m(N, N);
  for (const auto& [cls, w] : terms_)
    for (uint32_t b = 0; b < uint32_t(N); ++b)
      if (!w[b].is_zero()) m.at(int(b ^ cls), int(b)) += w[b];
  return m;
}

std::pair<uint32_t, Scalar> SpinOp::as_single_class() const {
  if (terms_.size() != 1) throw std::logic_error("SpinOp: not a single-class operator");
  const auto& [cls, w] = *terms_.begin();
  const Scalar c = w[0];
  if (c.is_zero()) throw std::logic_error("SpinOp: weight table vanishes at basis index 0");
  return {cls, c};
}

namespace {

RootVec add_roots(const RootVec& a, const RootVec& b) {
  RootVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RootVec sub_roots(const RootVec& a, const RootVec& b) {
  RootVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

}  // namespace

CheckReport verify_gamma_axioms(const CocycleTable& t, const std::vector<RootVec>& sample) {
  CheckReport rep;
  const GCM& g = t.gcm();
  auto fail = [&](const std::string& id, const std::string& ops, const std::string& detail) {
    rep.failures.push_back({id, ops, detail});
  };
  const SpinOp id = SpinOp::identity(t.n());

  // Gamma(0) = Id.
  ++rep.checks_run;
  if (SpinOp::gamma(t, RootVec(g.n, 0)) != id)
    fail("gamma(0) == Id", "0", "materialized mismatch");

  for (const auto& a : sample) {
    const SpinOp ga = SpinOp::gamma(t, a);
    // Gamma(a)^2 = (-1)^{(a|a)/2} Id.
    ++rep.checks_run;
    const long na = norm2(g, a);
    const int sign = (((na / 2) % 2) + 2) % 2 ? -1 : 1;
    if (ga * ga != id * Scalar(sign))
      fail("gamma(a)^2 == (-1)^{(a|a)/2} Id", root_to_string(a),
           "norm = " + std::to_string(na));
    // Gamma(-a) = Gamma(a).
    ++rep.checks_run;
    RootVec neg(a.size());
    for (size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
    if (SpinOp::gamma(t, neg) != ga) fail("gamma(-a) == gamma(a)", root_to_string(a), "");
    for (const auto& b : sample) {
      const SpinOp gb = SpinOp::gamma(t, b);
      // Gamma(a)Gamma(b) = eps(a,b) Gamma(a+b).
      ++rep.checks_run;
      if (ga * gb != SpinOp::gamma(t, add_roots(a, b)) * Scalar(t.eps(a, b)))
        fail("gamma(a)gamma(b) == eps(a,b) gamma(a+b)",
             root_to_string(a) + " ; " + root_to_string(b),
             "eps = " + std::to_string(t.eps(a, b)));
      // Gamma(a)Gamma(b) = (-1)^{(a|b)} Gamma(b)Gamma(a).
      ++rep.checks_run;
      const int comm_sign = ((inner(g, a, b) % 2) + 2) % 2 ? -1 : 1;
      if (ga * gb != gb * ga * Scalar(comm_sign))
        fail("gamma(a)gamma(b) == (-1)^{(a|b)} gamma(b)gamma(a)",
             root_to_string(a) + " ; " + root_to_string(b),
             "(a|b) = " + std::to_string(inner(g, a, b)));
      // Gamma(a+b) = Gamma(a-b) and Gamma(a+2b) = Gamma(a).
      ++rep.checks_run;
      if (SpinOp::gamma(t, add_roots(a, b)) != SpinOp::gamma(t, sub_roots(a, b)))
        fail("gamma(a+b) == gamma(a-b)", root_to_string(a) + " ; " + root_to_string(b), "");
      ++rep.checks_run;
      if (SpinOp::gamma(t, add_roots(a, add_roots(b, b))) != ga)
        fail("gamma(a+2b) == gamma(a)", root_to_string(a) + " ; " + root_to_string(b), "");
      // eps sign law and bilinearity traces.
      ++rep.checks_run;
      if (t.eps(a, b) * t.eps(b, a) != ((inner(g, a, b) % 2 + 2) % 2 ? -1 : 1))
        fail("eps(a,b)eps(b,a) == (-1)^{(a|b)}", root_to_string(a) + " ; " + root_to_string(b),
             "");
      for (const auto& c : sample) {
        // Cocycle identity eps(a,b)eps(a+b,c) = eps(a,b+c)eps(b,c).
        ++rep.checks_run;
        if (t.eps(a, b) * t.eps(add_roots(a, b), c) !=
            t.eps(a, add_roots(b, c)) * t.eps(b, c))
          fail("cocycle identity",
               root_to_string(a) + " ; " + root_to_string(b) + " ; " + root_to_string(c), "");
      }
    }
  }
  return rep;
}

}  // namespace kacspin
