#pragma once
/**
 * The Weyl-group modules V_1 = h*, V_2 = Sym^2(h*), V_3 = Sym^3(h*): monomial
 * bases, induced reflection actions eta, induced invariant forms, the symmetric
 * insertion psi, the invariant element Psi, the rank-one correction f(alpha),
 * and the tau operators
 *    level 3/2, 5/2:  tau(a) = eta(s_a) - 1/2
 *    level 7/2:       tau(a) = eta(s_a) - 1/2 + f(a)
 * together with the master (anti)commutation equations they satisfy:
 *    [tau(a), tau(b)] = 0                if (a|b) = 0
 *    {tau(a), tau(b)} = tau(a -+ b)      if (a|b) = +-1.
 *
 * Monomial conventions: the basis of Sym^k is the sorted index multisets
 * (i_1 <= ... <= i_k); the coordinates of a product u_1...u_k accumulate
 * prod_t u_t(i_t) onto the sorted multiset over all index tuples; the induced
 * form is b(v_1..v_k, u_1..u_k) = (1/k!) sum_sigma prod_t b(v_{sigma(t)}, u_t).
 */

#include <vector>

#include "kacspin/cocycle.hpp"
#include "kacspin/diagram.hpp"
#include "kacspin/matrix.hpp"
#include "kacspin/rootsys.hpp"

namespace kacspin {

enum class Level { half, three_half, five_half, seven_half };

std::string level_name(Level l);
/// Parse "1/2", "3/2", "5/2", "7/2".
Level level_from_string(const std::string& s);
/// Symmetric power carrying the level: 1 for 3/2, 2 for 5/2, 3 for 7/2.
int level_sym_power(Level l);

class SymModule {
 public:
  /// k in {1, 2, 3}; the module is Sym^k of the realization space.
  SymModule(const Realization& re, int k);

  int k() const { return k_; }
  int dim() const { return int(basis_.size()); }
  const Realization& realization() const { return re_; }
  const std::vector<std::vector<int>>& basis() const { return basis_; }
  const Matrix& gram() const { return gram_; }

  /// Index of a sorted multiset in the monomial basis.
  int index_of(std::vector<int> multiset) const;

  /// Coordinates of the symmetric product of k vectors of h*.
  std::vector<Scalar> product_coords(const std::vector<std::vector<Scalar>>& vecs) const;

  /// Induced action of a single linear map M on h*.
  Matrix induced(const Matrix& m_h) const;

  /// Reflection s_a on h* for a real root a (exact, norm 2).
  Matrix reflection_h(const RootVec& a) const;

  /// eta(word): induced action of s_{w_1} ... s_{w_k} (last letter acts first).
  Matrix eta(const WeylWord& w) const;
  /// eta of the reflection in an arbitrary real root.
  Matrix eta_root(const RootVec& a) const;

  std::vector<Scalar> apply_matrix(const Matrix& m, const std::vector<Scalar>& v) const;

  /// b-pairing of two coordinate vectors.
  Scalar form(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;

 private:
  Realization re_;
  int k_;
  std::vector<std::vector<int>> basis_;
  std::vector<std::vector<int>> basis_lookup_;  // flattened index map
  Matrix gram_;
  int flat_index(const std::vector<int>& m) const;
};

/// Symmetric insertion psi(a) in Sym^3 coordinates; requires a regular diagram
/// (invertible gram). Throws std::domain_error on singular realizations.
std::vector<Scalar> psi(const SymModule& mod3, const std::vector<Scalar>& a);

/// The invariant element Psi in Sym^2 coordinates; regular diagrams only.
std::vector<Scalar> psi_element(const SymModule& mod2);

/// Constants entering f(alpha): products p^2, pq, q^2 over Q(sqrt D), D = 6(m+8).
/// branch_minus selects the "-" branch (12 + 2 sqrt D); the overall eps sign of
/// (p, q) cancels in all three products and is accepted only for interface
/// completeness.
struct SevenHalfConstants {
  Scalar p2, pq, q2;
  long D = 0;
};
SevenHalfConstants seven_half_constants(int m, bool branch_minus);

/// Rank-one operator f(a) = v(a) b(v(a), .) on Sym^3, v(a) = p aaa + q psi(a).
Matrix f_alpha(const SymModule& mod3, const RootVec& a, bool branch_minus = false,
               bool eps_minus = false);

struct TauOperator {
  Level level;
  RootVec root;
  Matrix matrix;
};

/// tau at the given level on the matching SymModule (V_1 for 3/2, V_2 for 5/2,
/// V_3 for 7/2; the module's k must match).
TauOperator tau(Level level, const SymModule& mod, const RootVec& a, bool branch_minus = false);

/// Exact check of the master equations for the pair (a, b) at the given level.
CheckReport master_eq_check(Level level, const SymModule& mod, const RootVec& a,
                            const RootVec& b, bool branch_minus = false);

}  // namespace kacspin
