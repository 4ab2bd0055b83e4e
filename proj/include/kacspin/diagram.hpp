#pragma once
/**
 * Generalized Cartan matrices (GCMs) and Dynkin diagrams: preset catalogue,
 * a small DSL parser, validation (including the finite/affine/indefinite type
 * classification by exact inertia), and realizations of the diagram on a
 * nondegenerate quadratic space h*.
 */

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kacspin/matrix.hpp"

namespace kacspin {

struct GCM {
  int n = 0;
  std::vector<std::vector<int>> a;          // n x n entries
  bool simply_laced = false;
  std::vector<std::pair<int, int>> edges;   // 0-based, i < j, sorted

  bool has_edge(int i, int j) const;
};

/// Thrown for diagrams that are recognized but outside the simply-laced scope
/// (e.g. preset names B2, F4). Distinct from parse errors so the CLI can map it
/// to the "unsupported" exit code.
class NotSimplyLacedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parse a preset name (An, Dn, E6..E10, cycle<k>, K<k>; case-insensitive) or a
/// DSL block "rank=<n>\nedges=i-j,..." with 1-based indices.
/// Throws std::invalid_argument on malformed input, NotSimplyLacedError for
/// recognized non-simply-laced families.
GCM parse_gcm(const std::string& text);

/// Canonical DSL text; parse_gcm(render(g)) == g.
std::string render(const GCM& g);

enum class TypeClass { finite, affine, indefinite };

struct ValidationReport {
  std::vector<std::string> violations;  // empty iff valid
  bool indecomposable = false;
  TypeClass type = TypeClass::indefinite;
  long det = 0;  // determinant of the Cartan matrix (fits in long for our sizes)
};

ValidationReport validate(const GCM& g);

struct Realization {
  int dim = 0;          // d = 2n - rank(A)
  Matrix simple_roots;  // d x n, column i = root alpha_i in h* coordinates
  Matrix simple_coroots;  // d x n, column i = the functional (gram * alpha_i)
  Matrix gram;          // d x d symmetric nondegenerate, restricts to A on roots
  bool regular = false;  // true iff det A != 0 (then dim == n and gram == A)
};

/// Build the realization; for singular A the space is extended by one
/// coordinate per radical dimension, pairing the kernel of A against new dual
/// directions so that the gram matrix stays nondegenerate.
Realization realization(const GCM& g);

/// Embed a root-lattice vector (coords over simple roots) into h* coordinates.
std::vector<Scalar> embed_root(const Realization& re, const std::vector<long>& coords);

}  // namespace kacspin
