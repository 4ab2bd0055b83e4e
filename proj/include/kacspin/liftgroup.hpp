#pragma once
/**
 * One-parameter subgroups attached to the representation generators, with
 * closed-form exponentials (exact over the scalar tower at multiples of pi/2,
 * double precision elsewhere), a scaling-and-squaring numeric exponential used
 * as a cross-check oracle, lift classification of the generated group, the
 * spin-extended Weyl group relation checks, and the conjugation action of the
 * r_i on the Gamma operators at level 1/2.
 */

#include <optional>
#include <string>
#include <vector>

#include "kacspin/spinreps.hpp"

namespace kacspin {

/// An angle, either an exact rational multiple of pi or a plain radian value.
struct Angle {
  bool pi_multiple = false;
  Rat mult = Rat(0);     // meaningful when pi_multiple
  double radians = 0.0;  // always filled
  /// Exact closed forms exist precisely for multiples of pi/2.
  bool exact_capable() const;
};

Angle angle_pi(const Rat& mult);
Angle angle_radians(double r);

/// Accepts "3/2pi", "-1/2pi", "2pi", "pi", "-pi", "0", or a decimal radian
/// value such as "0.75". Throws std::invalid_argument on malformed input.
Angle parse_angle(const std::string& text);

/// Exact trig at rational multiples of pi whose denominator divides 4; the
/// values live in {0, +-1/2, +-1, +-sqrt2/2}. Throws otherwise.
Scalar exact_cos_pi(const Rat& mult);
Scalar exact_sin_pi(const Rat& mult);

/// Image of exp(phi * generator) in a representation.  At exact angles both
/// the exact operator and its float shadow are filled; otherwise only flt.
struct GroupElement {
  bool exact = false;
  RepOp op;                 // valid when exact
  std::vector<double> flt;  // row-major, always filled
  int dim = 0;
  std::string provenance;
};

/// Closed-form exp(phi * gen_i) (gen_i = rho(X_i) at level 1/2, sigma(X_i)
/// above).  Exact at multiples of pi/2, float at generic angles; the level-7/2
/// extra terms are included and vanish identically at the exact angles.
GroupElement closed_form_exp(const SpinRep& r, int i, const Angle& phi);

/// Matrix exponential of a dim x dim row-major double matrix by scaling and
/// squaring with a truncated series, target relative tolerance tol.
/// Throws std::invalid_argument on non-finite input.
std::vector<double> numeric_expm(const std::vector<double>& m, int dim, double tol = 1e-12);

enum class LiftClass { lifts_to_K, lifts_only_to_Spin };
std::string lift_class_name(LiftClass c);

struct LiftReport {
  LiftClass cls = LiftClass::lifts_only_to_Spin;
  CheckReport checks;
};

/// Evaluates exp(2pi * gen_i) exactly for every i and classifies the lift.
/// A value other than +-Id, or a mixture of the two cases across i, indicates
/// an implementation bug and raises std::logic_error.
LiftReport lift_classify(const SpinRep& r);

/// r_i = closed_form_exp(pi/2), exactly; checks the three relation families:
/// R1 r_i^8 = e (with r_i^4 = -Id recorded), R2 r_j^-1 r_i^2 r_j =
/// r_i^2 r_j^{2n(i,j)} with n = 1 on edges and 0 off edges, R3 braid with
/// m = 3 on edges and 2 off edges.  All products exact.
CheckReport wspin_relations_check(const SpinRep& r);

/// Conjugation law at level 1/2 for a real root a: r_i Gamma(a) r_i^-1 equals
/// Gamma(a) for even (a|alpha_i) and eps(alpha_i,a) Gamma(s_i a) for odd,
/// exactly; plus a float spot check of the general-angle law
/// cos(phi) Gamma(a) + sin(phi) Gamma(alpha_i) Gamma(a) in the odd case.
/// Higher levels are reached through transport and are rejected here.
CheckReport ad_weyl_action_check(const SpinRep& r, int i, const RootVec& a);

/// Row-major double matrix helpers shared by the float cross-checks.
std::vector<double> flt_mul(const std::vector<double>& a, const std::vector<double>& b, int dim);
double flt_max_abs_diff(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace kacspin
