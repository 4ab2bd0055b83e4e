#include "kacspin/report.hpp"

#include <sstream>

namespace kacspin {

namespace {

Json root_json(const RootVec& v) {
  Json arr = Json::array();
  for (long c : v) arr.push_back(c);
  return arr;
}

Json word_json(const WeylWord& w) {
  Json arr = Json::array();
  for (int i : w) arr.push_back(i + 1);  // 1-based for output
  return arr;
}

std::string type_name(TypeClass t) {
  switch (t) {
    case TypeClass::finite: return "finite";
    case TypeClass::affine: return "affine";
    default: return "indefinite";
  }
}

Json failure_json(const CheckFailure& f) {
  return Json{{"identity", f.identity}, {"operands", f.operands}, {"detail", f.detail}};
}

Json inertia_json(const Inertia& s) {
  return Json{{"positive", s.pos}, {"negative", s.neg}, {"zero", s.zero}};
}

}  // namespace

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

std::string matrix_csv(const Matrix& m) {
  std::ostringstream os;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      os << m.at(r, c).to_string();
    }
    os << '\n';
  }
  return os.str();
}

Json flt_matrix_json(const std::vector<double>& m, int dim) {
  Json rows = Json::array();
  for (int r = 0; r < dim; ++r) {
    Json row = Json::array();
    for (int c = 0; c < dim; ++c) row.push_back(m[size_t(r) * dim + c]);
    rows.push_back(std::move(row));
  }
  return Json{{"rows", dim}, {"cols", dim}, {"entries", std::move(rows)}};
}

Json check_report_json(const CheckReport& r) {
  Json fails = Json::array();
  for (const auto& f : r.failures) fails.push_back(failure_json(f));
  return Json{{"schema", kSchemaVersion},
              {"checks_run", r.checks_run},
              {"failures", std::move(fails)},
              {"ok", r.ok()}};
}

Json validation_json(const GCM& g, const ValidationReport& v) {
  Json a = Json::array();
  for (int r = 0; r < g.n; ++r) {
    Json row = Json::array();
    for (int c = 0; c < g.n; ++c) row.push_back(g.a[r][c]);
    a.push_back(std::move(row));
  }
  Json edges = Json::array();
  for (const auto& e : g.edges)
    edges.push_back(Json::array({e.first + 1, e.second + 1}));
  return Json{{"schema", kSchemaVersion},
              {"rank", g.n},
              {"cartan_matrix", std::move(a)},
              {"edges", std::move(edges)},
              {"simply_laced", g.simply_laced},
              {"indecomposable", v.indecomposable},
              {"type", type_name(v.type)},
              {"determinant", v.det},
              {"violations", v.violations},
              {"valid", v.violations.empty()}};
}

Json realization_json(const Realization& re) {
  return Json{{"schema", kSchemaVersion},
              {"dim", re.dim},
              {"regular", re.regular},
              {"simple_roots", matrix_json(re.simple_roots)},
              {"gram", matrix_json(re.gram)}};
}

Json rep_summary_json(const SpinRep& r) {
  std::string kind;
  switch (r.kind()) {
    case RepKind::half_spinop: kind = "spinor"; break;
    case RepKind::kron: kind = "tensor"; break;
    default: kind = "dense"; break;
  }
  Json lambdas = Json::array();
  for (uint32_t l : r.split_lambdas) lambdas.push_back(l);
  return Json{{"schema", kSchemaVersion},
              {"level", level_name(r.level)},
              {"rank", r.n()},
              {"dim", r.dim()},
              {"dim_v", r.dim_v},
              {"dim_s", r.dim_s},
              {"kind", kind},
              {"restricted", r.restricted},
              {"splitting_classes", std::move(lambdas)},
              {"experimental", r.experimental}};
}

Json transport_json(const TransportResult& t) {
  return Json{{"schema", kSchemaVersion},
              {"root", root_json(t.root)},
              {"word", word_json(t.word)},
              {"simple_index", t.simple_idx + 1},
              {"sign", t.sign},
              {"naive_sign", t.naive_sign},
              {"naive_matches", t.naive_matches},
              {"verified", t.verified}};
}

Json witness_json(const WitnessResult& w) {
  return Json{{"schema", kSchemaVersion},
              {"found", w.found},
              {"alpha", root_json(w.alpha)},
              {"beta", root_json(w.beta)},
              {"sign", w.s},
              {"rho_images_match", w.rho_match},
              {"sigma_images_differ", w.sigma_differs},
              {"report", check_report_json(w.checks)}};
}

Json decomposition_json(const DecompositionReport& d, bool include_bases) {
  Json subs = Json::array();
  for (const auto& s : d.subspaces) {
    Json j{{"dim", s.dim},
           {"origin", s.origin},
           {"invariant_verified", s.invariant_verified}};
    if (include_bases) j["basis"] = matrix_json(s.basis);
    subs.push_back(std::move(j));
  }
  Json comm{{"computed", d.commutant.computed},
            {"budget_exceeded", d.commutant.budget_exceeded},
            {"dim", d.commutant.dim},
            {"method", d.commutant.method},
            {"verification", check_report_json(d.commutant.verification)}};
  return Json{{"schema", kSchemaVersion},
              {"budget_exceeded", d.budget_exceeded},
              {"subspaces", std::move(subs)},
              {"commutant", std::move(comm)},
              {"verdict", verdict_name(d.verdict)},
              {"verdict_note", d.verdict_note},
              {"signature", inertia_json(d.signature)},
              {"report", check_report_json(d.checks)}};
}

Json lift_json(const LiftReport& l) {
  return Json{{"schema", kSchemaVersion},
              {"classification", lift_class_name(l.cls)},
              {"report", check_report_json(l.checks)}};
}

Json group_element_json(const GroupElement& e, bool include_matrix) {
  Json j{{"schema", kSchemaVersion},
         {"dim", e.dim},
         {"exact", e.exact},
         {"provenance", e.provenance}};
  if (include_matrix) {
    if (e.exact)
      j["matrix"] = matrix_json(e.op.materialize());
    else
      j["matrix"] = flt_matrix_json(e.flt, e.dim);
  }
  return j;
}

}  // namespace kacspin
