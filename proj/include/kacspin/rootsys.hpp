#pragma once
/**
 * Root-lattice arithmetic for a simply-laced GCM: simple reflections, Weyl
 * words, positive real-root enumeration by orbit closure, descent words
 * reducing a real root to a simple root, and the invariant inner product.
 *
 * RootVec holds integer coordinates over the simple roots. The inner product
 * uses the Cartan matrix directly (the invariant form restricted to the span
 * of the simple roots), so it is available for singular diagrams as well.
 */

#include <string>
#include <vector>

#include "kacspin/diagram.hpp"

namespace kacspin {

using RootVec = std::vector<long>;
using WeylWord = std::vector<int>;  // 0-based generator indices

long height(const RootVec& a);
long inner(const GCM& g, const RootVec& a, const RootVec& b);
inline long norm2(const GCM& g, const RootVec& a) { return inner(g, a, a); }
bool is_real_root_norm(const GCM& g, const RootVec& a);

/// s_i(a); 0-based index i. Throws std::out_of_range for bad i.
RootVec reflect(const GCM& g, int i, const RootVec& a);

/// s_{w_1} o ... o s_{w_k} applied to a (the last letter acts first).
RootVec apply_word(const GCM& g, const WeylWord& w, const RootVec& a);

/// All positive real roots of height <= max_height, sorted lexicographically.
std::vector<RootVec> real_roots(const GCM& g, long max_height);

/// For a positive real root a, return (w, i) with apply_word(w, alpha_i) == a.
/// Descent picks the smallest index j with (a | alpha_j) > 0 at each step.
/// Throws std::invalid_argument when a is not a positive real root.
std::pair<WeylWord, int> word_to_simple(const GCM& g, const RootVec& a);

std::string root_to_string(const RootVec& a);
RootVec root_from_string(const std::string& s, int n);

}  // namespace kacspin
