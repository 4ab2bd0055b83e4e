#pragma once
/**
 * Dense exact matrices over the Scalar field, with the linear-algebra kernels
 * used throughout: arithmetic, Kronecker products, exact Gaussian elimination
 * (rank, kernel bases, solving), determinants, and the inertia (signature) of
 * symmetric matrices via exact symmetric elimination.
 *
 * Multiplication skips zero entries of the left factor, which makes products of
 * the structured operators appearing here (Kronecker factors of small dense
 * blocks with signed permutations) cheap despite the dense storage.
 */

#include <functional>
#include <optional>
#include <vector>

#include "kacspin/scalar.hpp"

namespace kacspin {

class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}

  static Matrix identity(int n);
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }

  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Scalar& s) const;
  Matrix transpose() const;

  Matrix& operator+=(const Matrix& o) { return *this = *this + o; }
  Matrix& operator-=(const Matrix& o) { return *this = *this - o; }

  /// Maximum absolute value of entries, as double (diagnostics only).
  double max_abs_double() const;

  std::vector<double> to_double_rowmajor() const;

 private:
  int rows_, cols_;
  std::vector<Scalar> e_;
};

inline Matrix operator*(const Scalar& s, const Matrix& m) { return m * s; }

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix anticommutator(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);

/// Rank by exact Gaussian elimination.
int rank(const Matrix& m);

/// Basis of the right kernel {v : Mv = 0}; each column of the result is a basis vector.
Matrix kernel_basis(const Matrix& m);

/// Solve M x = b exactly (b may have several columns). Returns nullopt when inconsistent;
/// requires M to have full column rank for a unique solution (throws otherwise).
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

Scalar determinant(const Matrix& m);

/// Inertia (positive, negative, zero counts) of an exact symmetric matrix.
struct Inertia {
  int pos = 0, neg = 0, zero = 0;
};
Inertia symmetric_inertia(const Matrix& m);

/// Row-space echelon basis maintained incrementally; used for spin-up closures
/// and rank computations over growing vector sets.
class EchelonBasis {
 public:
  explicit EchelonBasis(int ambient_dim) : dim_(ambient_dim) {}

  /// Reduce v against the basis; if a nonzero remainder survives, insert it and
  /// return true. Returns false when v was already in the span.
  bool insert(std::vector<Scalar> v);
  bool contains(std::vector<Scalar> v) const;
  int size() const { return int(rows_.size()); }
  int ambient_dim() const { return dim_; }
  /// Basis vectors as the columns of a dim x size matrix.
  Matrix column_matrix() const;

 private:
  void reduce(std::vector<Scalar>& v) const;
  int dim_;
  std::vector<std::vector<Scalar>> rows_;  // echelonized, leading entry 1
  std::vector<int> lead_;                  // leading index per stored row
};

}  // namespace kacspin
