#include "kacspin/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace kacspin {

bool GCM::has_edge(int i, int j) const {
  if (i == j) return false;
  return a[i][j] != 0;
}

namespace {

GCM from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  GCM g;
  g.n = n;
  g.a.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) g.a[i][i] = 2;
  std::set<std::pair<int, int>> seen;
  for (auto [i, j] : edges) {
    if (i == j) throw std::invalid_argument("diagram: self-loop at node " + std::to_string(i + 1));
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw std::invalid_argument("diagram: edge index out of range");
    auto key = std::minmax(i, j);
    if (!seen.insert({key.first, key.second}).second)
      throw std::invalid_argument("diagram: duplicate edge " + std::to_string(key.first + 1) +
                                  "-" + std::to_string(key.second + 1));
    g.a[i][j] = g.a[j][i] = -1;
    g.edges.push_back({key.first, key.second});
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.simply_laced = true;
  return g;
}

bool parse_preset(const std::string& up, GCM* out) {
  auto family_rank = [&](const std::string& prefix) -> long {
    if (up.size() <= prefix.size() || up.compare(0, prefix.size(), prefix) != 0) return -1;
    const std::string rest = up.substr(prefix.size());
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), ::isdigit)) return -1;
    return std::stol(rest);
  };
  if (long k = family_rank("CYCLE"); k >= 0) {
    if (k < 3) throw std::invalid_argument("diagram: cycle<k> needs k >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.push_back({i, int((i + 1) % k)});
    *out = from_edges(int(k), e);
    return true;
  }
  if (long k = family_rank("A"); k >= 0) {
    if (k < 1) throw std::invalid_argument("diagram: A<n> needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < k; ++i) e.push_back({i, i + 1});
    *out = from_edges(int(k), e);
    return true;
  }
  if (long k = family_rank("D"); k >= 0) {
    if (k < 3) throw std::invalid_argument("diagram: D<n> needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 2 < k; ++i) e.push_back({i, i + 1});
    e.push_back({int(k) - 3, int(k) - 1});
    *out = from_edges(int(k), e);
    return true;
  }
  if (long k = family_rank("E"); k >= 0) {
    if (k < 6 || k > 10) throw std::invalid_argument("diagram: E<n> supported for 6 <= n <= 10");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 2 < k; ++i) e.push_back({i, i + 1});
    e.push_back({int(k) - 4, int(k) - 1});
    *out = from_edges(int(k), e);
    return true;
  }
  if (long k = family_rank("K"); k >= 0) {
    if (k < 1) throw std::invalid_argument("diagram: K<n> needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) e.push_back({i, j});
    *out = from_edges(int(k), e);
    return true;
  }
  for (const char* fam : {"B", "C", "F", "G"}) {
    if (family_rank(fam) >= 0)
      throw NotSimplyLacedError("diagram: family " + std::string(fam) +
                                " is not simply-laced and is unsupported");
  }
  return false;
}

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

GCM parse_dsl(const std::string& text) {
  // Lines separated by newline or ';'; "rank=<n>" and "edges=i-j,...".
  std::string norm = text;
  std::replace(norm.begin(), norm.end(), ';', '\n');
  std::istringstream in(norm);
  std::string line;
  long rank = -1;
  bool have_edges = false;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("diagram: malformed line '" + line + "'");
    std::string key = strip(line.substr(0, eq));
    std::string val = strip(line.substr(eq + 1));
    std::transform(key.begin(), key.end(), key.begin(), ::tolower);
    if (key == "rank") {
      try {
        rank = std::stol(val);
      } catch (...) {
        throw std::invalid_argument("diagram: bad rank '" + val + "'");
      }
      if (rank < 1) throw std::invalid_argument("diagram: rank must be >= 1");
    } else if (key == "edges") {
      have_edges = true;
      std::istringstream ev(val);
      std::string item;
      while (std::getline(ev, item, ',')) {
        item = strip(item);
        if (item.empty()) continue;
        size_t dash = item.find('-');
        if (dash == std::string::npos)
          throw std::invalid_argument("diagram: bad edge '" + item + "'");
        long i, j;
        try {
          i = std::stol(strip(item.substr(0, dash)));
          j = std::stol(strip(item.substr(dash + 1)));
        } catch (...) {
          throw std::invalid_argument("diagram: bad edge '" + item + "'");
        }
        edges.push_back({int(i) - 1, int(j) - 1});  // DSL is 1-based
      }
    } else {
      throw std::invalid_argument("diagram: unknown key '" + key + "'");
    }
  }
  if (rank < 0) throw std::invalid_argument("diagram: missing 'rank='");
  if (!have_edges) throw std::invalid_argument("diagram: missing 'edges='");
  return from_edges(int(rank), edges);
}

}  // namespace

GCM parse_gcm(const std::string& text) {
  const std::string t = strip(text);
  if (t.empty()) throw std::invalid_argument("diagram: empty input");
  if (t.find('=') != std::string::npos) return parse_dsl(t);
  std::string up = t;
  std::transform(up.begin(), up.end(), up.begin(), ::toupper);
  GCM g;
  if (parse_preset(up, &g)) return g;
  throw std::invalid_argument("diagram: unknown preset '" + t + "'");
}

std::string render(const GCM& g) {
  std::ostringstream out;
  out << "rank=" << g.n << "\nedges=";
  for (size_t k = 0; k < g.edges.size(); ++k) {
    if (k) out << ",";
    out << (g.edges[k].first + 1) << "-" << (g.edges[k].second + 1);
  }
  return out.str();
}

ValidationReport validate(const GCM& g) {
  ValidationReport rep;
  if (g.n <= 0 || int(g.a.size()) != g.n) {
    rep.violations.push_back("rank/entry shape mismatch");
    return rep;
  }
  for (int i = 0; i < g.n; ++i) {
    if (int(g.a[i].size()) != g.n) {
      rep.violations.push_back("row " + std::to_string(i + 1) + " has wrong length");
      return rep;
    }
  }
  for (int i = 0; i < g.n; ++i) {
    if (g.a[i][i] != 2)
      rep.violations.push_back("diagonal entry a[" + std::to_string(i + 1) + "][" +
                               std::to_string(i + 1) + "] != 2");
    for (int j = 0; j < g.n; ++j) {
      if (i == j) continue;
      if (g.a[i][j] > 0)
        rep.violations.push_back("positive off-diagonal entry at (" + std::to_string(i + 1) +
                                 "," + std::to_string(j + 1) + ")");
      if ((g.a[i][j] == 0) != (g.a[j][i] == 0))
        rep.violations.push_back("zero pattern not symmetric at (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + ")");
      if (g.simply_laced && g.a[i][j] < -1)
        rep.violations.push_back("entry < -1 contradicts simply-laced flag at (" +
                                 std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  }
  // Connectivity (indecomposability) via union of nonzero off-diagonals.
  std::vector<int> comp(g.n, -1);
  std::vector<int> stack = {0};
  comp[0] = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < g.n; ++w)
      if (w != v && g.a[v][w] != 0 && comp[w] < 0) {
        comp[w] = 0;
        stack.push_back(w);
      }
  }
  rep.indecomposable = std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });

  // Type classification from the exact inertia of the symmetrization (= A for
  // simply-laced): positive definite -> finite; positive semidefinite with a
  // kernel -> affine; otherwise indefinite.
  Matrix A(g.n, g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) A.at(i, j) = Scalar(g.a[i][j]);
  Inertia in = symmetric_inertia(A);
  if (in.neg == 0 && in.zero == 0)
    rep.type = TypeClass::finite;
  else if (in.neg == 0)
    rep.type = TypeClass::affine;
  else
    rep.type = TypeClass::indefinite;
  Scalar det = determinant(A);
  rep.det = long(det.c0().get_num().get_si());
  return rep;
}

Realization realization(const GCM& g) {
  if (!g.simply_laced)
    throw NotSimplyLacedError("realization: diagram must be simply-laced");
  const int n = g.n;
  Matrix A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A.at(i, j) = Scalar(g.a[i][j]);
  Matrix K = kernel_basis(A);
  const int corank = K.cols();
  Realization re;
  re.regular = (corank == 0);
  re.dim = n + corank;
  re.gram = Matrix(re.dim, re.dim);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) re.gram.at(i, j) = A.at(i, j);
  for (int t = 0; t < corank; ++t)
    for (int i = 0; i < n; ++i) {
      re.gram.at(i, n + t) = K.at(i, t);
      re.gram.at(n + t, i) = K.at(i, t);
    }
  re.simple_roots = Matrix(re.dim, n);
  for (int i = 0; i < n; ++i) re.simple_roots.at(i, i) = Scalar(1);
  re.simple_coroots = re.gram * re.simple_roots;
  if (rank(re.gram) != re.dim)
    throw std::logic_error("realization: extended gram matrix is degenerate");
  return re;
}

std::vector<Scalar> embed_root(const Realization& re, const std::vector<long>& coords) {
  std::vector<Scalar> v(re.dim);
  for (size_t i = 0; i < coords.size(); ++i) v[i] = Scalar(coords[i]);
  return v;
}

}  // namespace kacspin
