#include "kacspin/kron_op.hpp"

#include <stdexcept>

namespace kacspin {

KronOp KronOp::identity(int dv, const CocycleTable& t) {
  KronOp out(dv, t);
  out.add_term(0, Matrix::identity(dv));
  return out;
}

KronOp KronOp::tensor(const Matrix& a, const RootVec& gamma_arg, const CocycleTable& t) {
  return tensor_mask(a, t.mask_of(gamma_arg), t);
}

KronOp KronOp::tensor_mask(const Matrix& a, uint32_t mask, const CocycleTable& t) {
  if (a.rows() != a.cols()) throw std::invalid_argument("KronOp: V-side matrix must be square");
  KronOp out(a.rows(), t);
  out.add_term(mask, a);
  return out;
}

void KronOp::add_term(uint32_t mask, const Matrix& a) {
  auto it = terms_.find(mask);
  if (it == terms_.end()) {
    if (!a.is_zero()) terms_.emplace(mask, a);
  } else {
    it->second = it->second + a;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void KronOp::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
}

bool KronOp::is_zero() const { return terms_.empty(); }

bool KronOp::operator==(const KronOp& o) const {
  if (dv_ != o.dv_ || table_.n() != o.table_.n()) return false;
  return (*this - o).is_zero();
}

KronOp KronOp::operator+(const KronOp& o) const {
  if (dv_ != o.dv_ || table_.n() != o.table_.n())
    throw std::invalid_argument("KronOp: dimension mismatch in +");
  KronOp out = *this;
  for (const auto& [m, a] : o.terms_) out.add_term(m, a);
  return out;
}

KronOp KronOp::operator-(const KronOp& o) const { return *this + (-o); }

KronOp KronOp::operator-() const {
  KronOp out(dv_, table_);
  for (const auto& [m, a] : terms_) out.terms_.emplace(m, a * Scalar(-1));
  return out;
}

KronOp KronOp::operator*(const KronOp& o) const {
  if (dv_ != o.dv_ || table_.n() != o.table_.n())
    throw std::invalid_argument("KronOp: dimension mismatch in *");
  KronOp out(dv_, table_);
  for (const auto& [m1, a1] : terms_)
    for (const auto& [m2, a2] : o.terms_) {
      Matrix prod = a1 * a2;
      if (table_.eps_mask(m1, m2) < 0) prod = prod * Scalar(-1);
      out.add_term(m1 ^ m2, prod);
    }
  return out;
}

KronOp KronOp::operator*(const Scalar& s) const {
  if (s.is_zero()) return KronOp(dv_, table_);
  KronOp out(dv_, table_);
  for (const auto& [m, a] : terms_) out.terms_.emplace(m, a * s);
  return out;
}

KronOp KronOp::transpose() const {
  // (A tensor Gamma(m))^T = A^T tensor Gamma(m)^T and Gamma(m)^T = eps(m, m) Gamma(m)
  // since Gamma(m) is orthogonal with Gamma(m)^2 = eps(m, m) Id.
  KronOp out(dv_, table_);
  for (const auto& [m, a] : terms_) {
    Matrix at = a.transpose();
    if (table_.eps_mask(m, m) < 0) at = at * Scalar(-1);
    out.terms_.emplace(m, at);
  }
  return out;
}

std::vector<Scalar> KronOp::apply(const std::vector<Scalar>& v) const {
  const int ds = dim_s();
  if (int(v.size()) != dv_ * ds) throw std::invalid_argument("KronOp: vector size mismatch");
  std::vector<Scalar> out(v.size(), Scalar(0));
  for (const auto& [m, a] : terms_)
    for (uint32_t b = 0; b < uint32_t(ds); ++b) {
      const int sign = table_.eps_mask(m, b);
      for (int i = 0; i < dv_; ++i) {
        Scalar acc(0);
        for (int j = 0; j < dv_; ++j) {
          const Scalar& e = a.at(i, j);
          if (!e.is_zero()) acc += e * v[size_t(j) * ds + b];
        }
        if (!acc.is_zero()) {
          if (sign < 0) acc = acc * Scalar(-1);
          out[size_t(i) * ds + (b ^ m)] += acc;
        }
      }
    }
  return out;
}

Matrix KronOp::materialize() const {
  const int ds = dim_s();
  Matrix out = Matrix::zero(dv_ * ds, dv_ * ds);
  for (const auto& [m, a] : terms_)
    for (int i = 0; i < dv_; ++i)
      for (int j = 0; j < dv_; ++j) {
        const Scalar& e = a.at(i, j);
        if (e.is_zero()) continue;
        for (uint32_t b = 0; b < uint32_t(ds); ++b) {
          Scalar w = e;
          if (table_.eps_mask(m, b) < 0) w = w * Scalar(-1);
          out.at(size_t(i) * ds + (b ^ m), size_t(j) * ds + b) = w;
        }
      }
  return out;
}

double KronOp::max_abs_double() const {
  double mx = 0.0;
  for (const auto& [m, a] : terms_) {
    (void)m;
    mx = std::max(mx, a.max_abs_double());
  }
  return mx;
}

KronOp commutator(const KronOp& a, const KronOp& b) { return a * b - b * a; }

KronOp anticommutator(const KronOp& a, const KronOp& b) { return a * b + b * a; }

}  // namespace kacspin
