#pragma once
/**
 * Exact operators on V tensor S, where V carries a dense Scalar matrix action
 * and S is the 2^n-dimensional spinor space of the cocycle construction.
 *
 * Every operator arising from the higher-level generators sigma = tau tensor
 * Gamma (and their sums, products, commutators, transposes, and the group
 * elements built from them) is a finite sum of pure tensors
 *
 *      sum_m  A_m tensor Gamma(m),      m a mod-2 class of the root lattice,
 *
 * because Gamma(m1) Gamma(m2) = eps(m1, m2) Gamma(m1 xor m2) closes the
 * S-side on signed Gamma operators and the sign is absorbed into A_m.  KronOp
 * stores exactly this canonical form: a map from the class mask m to the
 * V-side matrix A_m.  All arithmetic is exact; a dense materialization of
 * dimension dim(V) * 2^n is available for cross-checks.
 */

#include <cstdint>
#include <map>

#include "kacspin/cocycle.hpp"
#include "kacspin/matrix.hpp"

namespace kacspin {

class KronOp {
 public:
  KronOp() : dv_(0), table_(GCM{}) {}
  KronOp(int dv, const CocycleTable& t) : dv_(dv), table_(t) {}

  static KronOp identity(int dv, const CocycleTable& t);
  /// A tensor Gamma(a); a may be any lattice vector (only its mod-2 class acts).
  static KronOp tensor(const Matrix& a, const RootVec& gamma_arg, const CocycleTable& t);
  static KronOp tensor_mask(const Matrix& a, uint32_t mask, const CocycleTable& t);

  int dim_v() const { return dv_; }
  int dim_s() const { return 1 << table_.n(); }
  int dim() const { return dv_ * dim_s(); }
  const CocycleTable& table() const { return table_; }
  const std::map<uint32_t, Matrix>& terms() const { return terms_; }

  bool is_zero() const;
  bool operator==(const KronOp& o) const;
  bool operator!=(const KronOp& o) const { return !(*this == o); }

  KronOp operator+(const KronOp& o) const;
  KronOp operator-(const KronOp& o) const;
  KronOp operator-() const;
  KronOp operator*(const KronOp& o) const;  // composition: (*this) after o
  KronOp operator*(const Scalar& s) const;
  KronOp transpose() const;

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
  Matrix materialize() const;

  /// Largest |entry| across all V-side matrices (double approximation).
  double max_abs_double() const;

  void add_term(uint32_t mask, const Matrix& a);

 private:
  void prune();
  int dv_;
  CocycleTable table_;
  std::map<uint32_t, Matrix> terms_;
};

inline KronOp operator*(const Scalar& s, const KronOp& op) { return op * s; }

KronOp commutator(const KronOp& a, const KronOp& b);
KronOp anticommutator(const KronOp& a, const KronOp& b);

}  // namespace kacspin
