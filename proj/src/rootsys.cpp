#include "kacspin/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kacspin {

long height(const RootVec& a) { return std::accumulate(a.begin(), a.end(), 0L); }

long inner(const GCM& g, const RootVec& a, const RootVec& b) {
  long s = 0;
  for (int i = 0; i < g.n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < g.n; ++j)
      if (b[j] != 0) s += a[i] * g.a[i][j] * b[j];
  }
  return s;
}

bool is_real_root_norm(const GCM& g, const RootVec& a) { return norm2(g, a) == 2; }

RootVec reflect(const GCM& g, int i, const RootVec& a) {
  if (i < 0 || i >= g.n) throw std::out_of_range("reflect: generator index out of range");
  RootVec out = a;
  long pairing = 0;  // a(alpha_i^vee) = sum_j a_{ij} coords_j
  for (int j = 0; j < g.n; ++j)
    if (a[j] != 0) pairing += g.a[i][j] * a[j];
  out[i] -= pairing;
  return out;
}

RootVec apply_word(const GCM& g, const WeylWord& w, const RootVec& a) {
  RootVec cur = a;
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = reflect(g, *it, cur);
  return cur;
}

std::vector<RootVec> real_roots(const GCM& g, long max_height) {
  if (max_height < 1) throw std::invalid_argument("real_roots: max_height must be >= 1");
  std::set<RootVec> found;
  std::vector<RootVec> frontier;
  for (int i = 0; i < g.n; ++i) {
    RootVec e(g.n, 0);
    e[i] = 1;
    found.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<RootVec> next;
    for (const auto& a : frontier) {
      for (int i = 0; i < g.n; ++i) {
        RootVec b = reflect(g, i, a);
        if (std::any_of(b.begin(), b.end(), [](long c) { return c < 0; })) continue;
        if (height(b) > max_height) continue;
        if (found.insert(b).second) next.push_back(b);
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};  // std::set iterates in lexicographic order
}

std::pair<WeylWord, int> word_to_simple(const GCM& g, const RootVec& a) {
  if (int(a.size()) != g.n) throw std::invalid_argument("word_to_simple: coordinate size mismatch");
  if (std::any_of(a.begin(), a.end(), [](long c) { return c < 0; }) || height(a) < 1 ||
      norm2(g, a) != 2)
    throw std::invalid_argument("word_to_simple: not a positive real root");
  RootVec cur = a;
  WeylWord w;
  while (height(cur) > 1) {
    int pick = -1;
    for (int j = 0; j < g.n; ++j) {
      RootVec ej(g.n, 0);
      ej[j] = 1;
      if (inner(g, cur, ej) > 0) {
        pick = j;
        break;
      }
    }
    if (pick < 0) throw std::invalid_argument("word_to_simple: descent failed (not a real root?)");
    cur = reflect(g, pick, cur);
    if (std::any_of(cur.begin(), cur.end(), [](long c) { return c < 0; }) && height(cur) != 1)
      throw std::invalid_argument("word_to_simple: descent left the positive cone");
    w.push_back(pick);
  }
  int idx = -1;
  for (int j = 0; j < g.n; ++j)
    if (cur[j] == 1) idx = j;
  if (idx < 0 || height(cur) != 1)
    throw std::invalid_argument("word_to_simple: descent did not reach a simple root");
  return {w, idx};
}

std::string root_to_string(const RootVec& a) {
  std::ostringstream out;
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) out << ",";
    out << a[i];
  }
  return out.str();
}

RootVec root_from_string(const std::string& s, int n) {
  RootVec out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stol(item));
    } catch (...) {
      throw std::invalid_argument("root: bad coordinate '" + item + "'");
    }
  }
  if (int(out.size()) != n)
    throw std::invalid_argument("root: expected " + std::to_string(n) + " coordinates");
  return out;
}

}  // namespace kacspin
