#include "kacspin/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kacspin {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix+: shape mismatch");
  Matrix out(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix-: shape mismatch");
  Matrix out(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - o.e_[i];
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = -e_[i];
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix*: shape mismatch");
  Matrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (b.is_zero()) continue;
        out.at(i, j) += a * b;
      }
    }
  }
  return out;
}

Matrix Matrix::operator*(const Scalar& s) const {
  Matrix out(rows_, cols_);
  if (s.is_zero()) return out;
  for (size_t i = 0; i < e_.size(); ++i)
    if (!e_[i].is_zero()) out.e_[i] = e_[i] * s;
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

double Matrix::max_abs_double() const {
  double m = 0;
  for (const auto& s : e_) m = std::max(m, std::fabs(s.to_double()));
  return m;
}

std::vector<double> Matrix::to_double_rowmajor() const {
  std::vector<double> out(e_.size());
  for (size_t i = 0; i < e_.size(); ++i) out[i] = e_[i].to_double();
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }
Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Scalar& av = a.at(i, j);
      if (av.is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) {
          const Scalar& bv = b.at(k, l);
          if (bv.is_zero()) continue;
          out.at(i * b.rows() + k, j * b.cols() + l) = av * bv;
        }
    }
  return out;
}

namespace {

/// In-place exact row echelon; returns pivot columns. If `rhs` is non-null it
/// receives the same row operations (augmented elimination).
std::vector<int> echelonize(Matrix& m, Matrix* rhs) {
  std::vector<int> pivots;
  int prow = 0;
  for (int col = 0; col < m.cols() && prow < m.rows(); ++col) {
    int p = -1;
    for (int r = prow; r < m.rows(); ++r)
      if (!m.at(r, col).is_zero()) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != prow) {
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(prow, c));
      if (rhs)
        for (int c = 0; c < rhs->cols(); ++c) std::swap(rhs->at(p, c), rhs->at(prow, c));
    }
    Scalar inv = m.at(prow, col).inverse();
    for (int c = col; c < m.cols(); ++c)
      if (!m.at(prow, c).is_zero()) m.at(prow, c) = m.at(prow, c) * inv;
    if (rhs)
      for (int c = 0; c < rhs->cols(); ++c)
        if (!rhs->at(prow, c).is_zero()) rhs->at(prow, c) = rhs->at(prow, c) * inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == prow) continue;
      const Scalar f = m.at(r, col);
      if (f.is_zero()) continue;
      for (int c = col; c < m.cols(); ++c)
        if (!m.at(prow, c).is_zero()) m.at(r, c) -= f * m.at(prow, c);
      if (rhs)
        for (int c = 0; c < rhs->cols(); ++c)
          if (!rhs->at(prow, c).is_zero()) rhs->at(r, c) -= f * rhs->at(prow, c);
    }
    pivots.push_back(col);
    ++prow;
  }
  return pivots;
}

}  // namespace

int rank(const Matrix& m) {
  Matrix w = m;
  return int(echelonize(w, nullptr).size());
}

Matrix kernel_basis(const Matrix& m) {
  Matrix w = m;
  std::vector<int> pivots = echelonize(w, nullptr);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix out(m.cols(), int(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    const int fc = free_cols[k];
    out.at(fc, int(k)) = Scalar(1);
    for (size_t r = 0; r < pivots.size(); ++r) out.at(pivots[r], int(k)) = -w.at(int(r), fc);
  }
  return out;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (m.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
  Matrix w = m, rhs = b;
  std::vector<int> pivots = echelonize(w, &rhs);
  if (int(pivots.size()) != m.cols())
    throw std::invalid_argument("solve: matrix does not have full column rank");
  // Consistency: rows beyond the pivot rows must have zero rhs.
  for (int r = int(pivots.size()); r < m.rows(); ++r)
    for (int c = 0; c < rhs.cols(); ++c)
      if (!rhs.at(r, c).is_zero()) return std::nullopt;
  Matrix x(m.cols(), b.cols());
  for (size_t r = 0; r < pivots.size(); ++r)
    for (int c = 0; c < b.cols(); ++c) x.at(pivots[r], c) = rhs.at(int(r), c);
  return x;
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  Matrix w = m;
  Scalar det(1);
  const int n = w.rows();
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int r = col; r < n; ++r)
      if (!w.at(r, col).is_zero()) {
        p = r;
        break;
      }
    if (p < 0) return Scalar(0);
    if (p != col) {
      for (int c = 0; c < n; ++c) std::swap(w.at(p, c), w.at(col, c));
      det = -det;
    }
    const Scalar pivot = w.at(col, col);
    det *= pivot;
    const Scalar inv = pivot.inverse();
    for (int r = col + 1; r < n; ++r) {
      const Scalar f = w.at(r, col);
      if (f.is_zero()) continue;
      const Scalar fi = f * inv;
      for (int c = col; c < n; ++c)
        if (!w.at(col, c).is_zero()) w.at(r, c) -= fi * w.at(col, c);
    }
  }
  return det;
}

Inertia symmetric_inertia(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("symmetric_inertia: not square");
  Matrix w = m;
  const int n = w.rows();
  std::vector<bool> done(n, false);
  Inertia out;
  int remaining = n;
  while (remaining > 0) {
    // Prefer a nonzero diagonal pivot.
    int p = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && !w.at(i, i).is_zero()) {
        p = i;
        break;
      }
    if (p >= 0) {
      const Scalar piv = w.at(p, p);
      (piv.sgn() > 0 ? out.pos : out.neg)++;
      const Scalar inv = piv.inverse();
      for (int r = 0; r < n; ++r) {
        if (done[r] || r == p) continue;
        const Scalar f = w.at(r, p);
        if (f.is_zero()) continue;
        const Scalar fi = f * inv;
        for (int c = 0; c < n; ++c) {
          if (done[c]) continue;
          if (!w.at(p, c).is_zero()) w.at(r, c) -= fi * w.at(p, c);
        }
      }
      for (int c = 0; c < n; ++c) {
        w.at(p, c) = Scalar();
        w.at(c, p) = Scalar();
      }
      done[p] = true;
      --remaining;
      continue;
    }
    // All remaining diagonal entries are zero: find an off-diagonal entry.
    int pi = -1, pj = -1;
    for (int i = 0; i < n && pi < 0; ++i) {
      if (done[i]) continue;
      for (int j = i + 1; j < n; ++j)
        if (!done[j] && !w.at(i, j).is_zero()) {
          pi = i;
          pj = j;
          break;
        }
    }
    if (pi < 0) {
      out.zero += remaining;
      break;
    }
    // Hyperbolic 2x2 block [[0,b],[b,0]] contributes one positive and one
    // negative square; eliminate both rows/columns using the pair.
    const Scalar b = w.at(pi, pj);
    const Scalar binv = b.inverse();
    for (int r = 0; r < n; ++r) {
      if (done[r] || r == pi || r == pj) continue;
      // subtract multiples of rows pi and pj to zero out w(r,pi), w(r,pj)
      const Scalar fj = w.at(r, pi) * binv;  // coefficient for row pj
      const Scalar fi = w.at(r, pj) * binv;  // coefficient for row pi
      for (int c = 0; c < n; ++c) {
        if (done[c]) continue;
        const Scalar delta = fi * w.at(pi, c) + fj * w.at(pj, c);
        if (!delta.is_zero()) w.at(r, c) -= delta;
      }
    }
    // The (pi,pj) plane itself contributes (+1, -1).
    out.pos++;
    out.neg++;
    for (int c = 0; c < n; ++c) {
      w.at(pi, c) = Scalar();
      w.at(c, pi) = Scalar();
      w.at(pj, c) = Scalar();
      w.at(c, pj) = Scalar();
    }
    done[pi] = done[pj] = true;
    remaining -= 2;
  }
  return out;
}

bool EchelonBasis::insert(std::vector<Scalar> v) {
  reduce(v);
  int lead = -1;
  for (int i = 0; i < dim_; ++i)
    if (!v[i].is_zero()) {
      lead = i;
      break;
    }
  if (lead < 0) return false;
  const Scalar inv = v[lead].inverse();
  for (auto& x : v)
    if (!x.is_zero()) x = x * inv;
  // Back-substitute into existing rows to keep reduced form.
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar f = rows_[r][lead];
    if (f.is_zero()) continue;
    for (int c = 0; c < dim_; ++c)
      if (!v[c].is_zero()) rows_[r][c] -= f * v[c];
  }
  rows_.push_back(std::move(v));
  lead_.push_back(lead);
  return true;
}

bool EchelonBasis::contains(std::vector<Scalar> v) const {
  reduce(v);
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

void EchelonBasis::reduce(std::vector<Scalar>& v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar f = v[lead_[r]];
    if (f.is_zero()) continue;
    for (int c = 0; c < dim_; ++c)
      if (!rows_[r][c].is_zero()) v[c] -= f * rows_[r][c];
  }
}

Matrix EchelonBasis::column_matrix() const {
  Matrix out(dim_, int(rows_.size()));
  for (size_t k = 0; k < rows_.size(); ++k)
    for (int i = 0; i < dim_; ++i) out.at(i, int(k)) = rows_[k][i];
  return out;
}

}  // namespace kacspin
