#pragma once
/**
 * The standard 2-cocycle on the root lattice Q and generalized Gamma matrices
 * realized on the 2^n-dimensional twisted group algebra of Q/2Q.
 *
 * The cocycle table T stores the mod-2 values on simple-root pairs (upper
 * triangle: Cartan entry mod 2; diagonal: 1; lower triangle: 0) and extends
 * bilinearly: eps(a, b) = (-1)^(a^T T b).
 *
 * Gamma(a) acts by e_beta -> eps(a, beta) e_{abar xor beta}; it is a signed
 * permutation depending on a only mod 2Q. SpinOp is the algebra generated by
 * such operators together with scalar multiples and sums: a formal sum of
 * "XOR-class" operators e_b -> w(b) e_{b xor c}, closed under addition,
 * composition, and transposition, with exact Scalar weights. Operators are
 * composed lazily in O(2^n) per class pair; a dense materialization is
 * available for cross-checks.
 */

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kacspin/matrix.hpp"
#include "kacspin/rootsys.hpp"

namespace kacspin {

class CocycleTable {
 public:
  explicit CocycleTable(const GCM& g);

  int n() const { return n_; }
  const GCM& gcm() const { return gcm_; }

  /// eps(a, b) in {+1, -1} for arbitrary lattice vectors.
  int eps(const RootVec& a, const RootVec& b) const;
  /// eps on mod-2 classes encoded as bitmasks (bit i = coefficient of alpha_i).
  int eps_mask(uint32_t a, uint32_t b) const;

  uint32_t mask_of(const RootVec& a) const;
  int entry(int i, int j) const { return t_[i][j]; }

 private:
  int n_;
  GCM gcm_;
  std::vector<std::vector<int>> t_;     // {0,1} table on simple pairs
  std::vector<uint32_t> row_masks_;     // row i as bitmask for O(1) eps_mask
};

/// A single XOR-class operator on the 2^n-dimensional space: e_b -> w(b) e_{b xor cls}.
struct XorTerm {
  uint32_t cls = 0;
  std::vector<Scalar> w;  // size 2^n
};

class SpinOp {
 public:
  SpinOp() : n_(0) {}
  explicit SpinOp(int n) : n_(n) {}

  static SpinOp identity(int n);
  /// Gamma(a) on the twisted group algebra of Q/2Q.
  static SpinOp gamma(const CocycleTable& t, const RootVec& a);
  /// Right-regular operator R(lambda): e_b -> eps(b, lambda) e_{b xor lambda};
  /// commutes with every Gamma(a) by the cocycle identity.
  static SpinOp right_reg(const CocycleTable& t, const RootVec& lambda);

  int n() const { return n_; }
  int dim() const { return 1 << n_; }
  bool is_zero() const;
  const std::map<uint32_t, std::vector<Scalar>>& terms() const { return terms_; }

  SpinOp operator+(const SpinOp& o) const;
  SpinOp operator-(const SpinOp& o) const;
  SpinOp operator-() const;
  SpinOp operator*(const SpinOp& o) const;  // composition: (*this) after o
  SpinOp operator*(const Scalar& s) const;
  SpinOp transpose() const;

  bool operator==(const SpinOp& o) const;
  bool operator!=(const SpinOp& o) const { return !(*this == o); }

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
  Matrix materialize() const;

  /// If this operator is exactly coeff * Gamma-type for a single class, return
  /// (class, coeff) with the weight table factored at basis index 0; the table
  /// is then verified proportional. Throws std::logic_error otherwise.
  std::pair<uint32_t, Scalar> as_single_class() const;

  void add_term(uint32_t cls, std::vector<Scalar> w);

 private:
  void prune();
  int n_;
  std::map<uint32_t, std::vector<Scalar>> terms_;
};

inline SpinOp operator*(const Scalar& s, const SpinOp& op) { return op * s; }

struct CheckFailure {
  std::string identity;          // which identity failed
  std::string operands;          // serialized operands
  std::string detail;            // lhs/rhs or residual description
};

struct CheckReport {
  std::vector<CheckFailure> failures;
  long checks_run = 0;
  bool ok() const { return failures.empty(); }
};

/// Verify the five defining Gamma identities plus the cocycle/bilinearity laws
/// on all pairs (and cocycle triples) from the sample, exactly.
CheckReport verify_gamma_axioms(const CocycleTable& t, const std::vector<RootVec>& sample);

}  // namespace kacspin
