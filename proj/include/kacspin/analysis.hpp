#pragma once
/**
 * Decomposition machinery: commutant computation with exact strategies per
 * representation shape, invariant-subspace search (spin-up closures plus
 * rational-eigenvalue splits of commutant elements), the structured splitting
 * of the level-5/2 module along the invariant element Psi, and contravariant
 * form signatures.
 *
 * Commutant strategies (all exact):
 *  - module dim <= 16: direct Sylvester solve [g_i, C] = 0.
 *  - level 1/2 unrestricted: span{R(mu)} over all mod-2 classes mu.  Any C
 *    commuting with every Gamma is determined by C e_0 because the Gammas act
 *    transitively with signs from e_0, so dim <= 2^n; the 2^n independent
 *    right-regular operators realize the bound.
 *  - level 1/2 restricted: span{2^{-k} P^T R(mu) P} over classes mu with even
 *    pairing against every splitting class, modulo the splitting span.  The
 *    projector onto the restricted submodule lies in the R-span, every Gamma
 *    preserves the submodule, and odd-pairing classes project to zero, which
 *    makes this list complete.
 *  - levels 3/2, 5/2: the split-action identities put eta_i tensor Id and
 *    Id tensor rho_i inside the image algebra, so the algebra is the tensor
 *    product of its two factors and the commutant is (V-side commutant of the
 *    eta_i) tensor (S-side commutant as above).
 *  - level 7/2 and anything above the dense budget: reported budget-exceeded.
 *
 * Verdicts follow the commutant: dimension 1 certifies absolute
 * irreducibility; a found proper invariant subspace certifies reducibility; a
 * division-algebra certificate (an exhibited C or H basis inside the
 * commutant) yields "irreducible over R with larger commutant"; otherwise the
 * result is an explicit "inconclusive".
 */

#include "kacspin/spinreps.hpp"

namespace kacspin {

enum class Verdict { irreducible, reducible, irreducible_real_larger_commutant, inconclusive };
std::string verdict_name(Verdict v);

struct CommutantResult {
  bool computed = false;
  bool budget_exceeded = false;
  int dim = 0;
  std::string method;
  std::vector<Matrix> dense_basis;  // materialized when the module dim is <= 64
  CheckReport verification;         // exact commutation of the basis
};

/// Direct Sylvester solve for dense generator lists (any source).
CommutantResult commutant_direct(const std::vector<Matrix>& gens);

CommutantResult commutant(const SpinRep& r, int dense_budget = 512);

struct SubspaceInfo {
  int dim = 0;
  Matrix basis;  // ambient-dim x dim, canonical reduced column span
  bool invariant_verified = false;
  std::string origin;
};

struct DecompositionReport {
  bool budget_exceeded = false;
  std::vector<SubspaceInfo> subspaces;
  CommutantResult commutant;
  Verdict verdict = Verdict::inconclusive;
  std::string verdict_note;
  Inertia signature;
  CheckReport checks;
};

/// Low-level search over dense generators: spin-up closures of the seeds and
/// rational-eigenvalue splits of the supplied commutant elements; every
/// reported subspace re-verified invariant exactly.
DecompositionReport invariant_subspace_search_dense(const std::vector<Matrix>& gens,
                                                    const Matrix& form,
                                                    const std::vector<std::vector<Scalar>>& seeds,
                                                    const std::vector<Matrix>& commutant_basis);

DecompositionReport invariant_subspace_search(const SpinRep& r, int dense_budget = 512);

/// The exact splitting of the level-5/2 module: Psi tensor S intertwined with
/// the level-1/2 rep, orthogonal invariant complement. Regular diagrams only.
DecompositionReport s52_decompose(const SpinRep& r);

/// Signature of the contravariant form (gram of V tensor a positive multiple
/// of the identity on S): computed structurally, cross-checked densely on
/// small modules.
Inertia form_signature(const SpinRep& r);

/// Monic minimal polynomial coefficients (ascending, last = 1) of a square
/// matrix, by exact Krylov span closure.
std::vector<Scalar> minimal_polynomial(const Matrix& b);

/// Exact rational roots of a monic polynomial with rational coefficients.
std::vector<Rat> rational_roots(const std::vector<Scalar>& monic_coeffs);

}  // namespace kacspin
