#include "semidual/json_io.hpp"

#include <stdexcept>

namespace semidual {

json to_json(const ExtInt& v) {
  if (v.finite()) return json(v.value());
  return json(v.to_string());
}

json to_json(const LaurentPoly& p) {
  json j = json::object();
  for (auto& [e, c] : p.c)
    if (c != 0) j[std::to_string(e)] = c;
  return j;
}

json to_json(const QRPtr& R) {
  const PolyRing* P = R->cover();
  json gens = json::array();
  for (auto& g : R->ideal().gens()) gens.push_back(g.to_string());
  return {{"field", P->field().name()}, {"vars", P->vars()}, {"weights", P->weights()}, {"ideal", gens}};
}

json to_json(const FPModule& M) {
  json rels = json::array();
  for (auto& v : M.rels) {
    json r = json::array();
    for (auto& e : v) r.push_back(e.to_string());
    rels.push_back(r);
  }
  return {{"ngens", M.ngens}, {"twists", M.twists}, {"relations", rels}};
}

json to_json(const Complex& X) {
  json ranks = json::array(), twists = json::array(), diffs = json::array(), rels = json::array();
  bool free = true;
  for (int i = X.lo; i <= X.hi(); ++i) {
    ranks.push_back(X.rank(i));
    twists.push_back(X.twists(i));
    json r = json::array();
    for (auto& v : X.at(i).rels) {
      json e = json::array();
      for (auto& p : v) e.push_back(p.to_string());
      r.push_back(e);
    }
    free &= X.at(i).rels.empty();
    rels.push_back(r);
    if (i == X.lo) continue;
    Mat m = X.diff(i);
    json rows = json::array();
    for (int a = 0; a < m.rows; ++a) {
      json row = json::array();
      for (int b = 0; b < m.ncols(); ++b) row.push_back(m.at(a, b).to_string());
      rows.push_back(row);
    }
    diffs.push_back(rows);
  }
  json j = {{"lo", X.lo}, {"hi", X.hi()}, {"ranks", ranks}, {"twists", twists}, {"differentials", diffs}};
  if (!free) j["relations"] = rels;
  return j;
}

Complex complex_from_json(const QRPtr& R, const json& j) {
  int lo = j.at("lo").get<int>();
  auto ranks = j.at("ranks").get<std::vector<int>>();
  int hi = j.contains("hi") ? j.at("hi").get<int>() : lo + static_cast<int>(ranks.size()) - 1;
  if (static_cast<int>(ranks.size()) != hi - lo + 1) throw std::invalid_argument("ranks do not match [lo, hi]");
  std::vector<std::vector<int>> tw;
  if (j.contains("twists")) tw = j.at("twists").get<std::vector<std::vector<int>>>();
  std::vector<FPModule> mods;
  for (int k = 0; k < hi - lo + 1; ++k) {
    std::vector<int> t = k < static_cast<int>(tw.size()) ? tw[k] : std::vector<int>(ranks[k], 0);
    if (static_cast<int>(t.size()) != ranks[k]) throw std::invalid_argument("twists do not match ranks");
    FPModule M = FPModule::free(R, ranks[k], t);
    if (j.contains("relations")) {
      for (auto& v : j.at("relations").at(k)) {
        Vec r;
        for (auto& e : v) r.push_back(R->parse(e.get<std::string>()));
        if (static_cast<int>(r.size()) != ranks[k]) throw std::invalid_argument("relation of wrong length");
        M.rels.push_back(r);
      }
    }
    mods.push_back(M);
  }
  std::vector<Mat> diffs;
  const json& d = j.at("differentials");
  if (static_cast<int>(d.size()) != hi - lo) throw std::invalid_argument("expected hi - lo differentials");
  for (int k = 0; k < hi - lo; ++k) {
    int rows = ranks[k], cols = ranks[k + 1];
    Mat m(rows, cols, R->cover());
    const json& rj = d.at(k);
    if (static_cast<int>(rj.size()) != rows) throw std::invalid_argument("differential has wrong row count");
    for (int a = 0; a < rows; ++a) {
      if (static_cast<int>(rj.at(a).size()) != cols) throw std::invalid_argument("differential has wrong column count");
      for (int b = 0; b < cols; ++b) m.at(a, b) = R->parse(rj.at(a).at(b).get<std::string>());
    }
    diffs.push_back(m);
  }
  Complex X = Complex::make(R, lo, mods, diffs);
  X.validate();
  return X;
}

json to_json(const Fingerprint& f) {
  json a = json::array();
  for (auto& e : f) {
    json o = {{"index", e.index}, {"ann", e.ann}};
    if (e.min_gens >= 0) {
      o["min_gens"] = e.min_gens;
      o["hilbert"] = e.hilbert;
    } else {
      o["dim"] = e.dim;
      o["length"] = e.length;
    }
    a.push_back(o);
  }
  return a;
}

json to_json(const Bounds& b) { return {{"inf", to_json(b.inf)}, {"sup", to_json(b.sup)}, {"amp", to_json(b.amp)}}; }

json to_json(const Window& w) {
  json j = {{"tag", w.tag_name()}, {"N", w.N}};
  if (w.valid_lo != INT_MIN) j["valid_lo"] = w.valid_lo;
  if (w.valid_hi != INT_MAX) j["valid_hi"] = w.valid_hi;
  return j;
}

json to_json(const DObj& A) {
  json j = {{"kind", A.is_dual() ? "dual" : "honest"}, {"complex", to_json(A.X)}};
  if (A.is_dual()) j["s"] = A.s;
  return j;
}

json to_json(const GDimReport& r) {
  json j = {{"value", to_json(r.value)},
            {"certificate", r.certificate},
            {"window", r.window},
            {"rhom_window", to_json(r.rhom_window)},
            {"rhom_homology", to_json(r.rhom_fingerprint)}};
  if (r.graded)
    j["ab_check"] = {{"depthR", to_json(r.depthR)}, {"depthX", to_json(r.depthX)}, {"ok", r.ab_ok}};
  if (r.certificate == "ab-certified-infinite" || r.certificate == "biduality-failure")
    j["witness_degree"] = r.witness_degree;
  if (r.certificate.rfind("window", 0) == 0) j["biduality_checked"] = {r.check_lo, r.check_hi};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json to_json(const SemidualVerdict& v) {
  const char* code = v.outcome == SemidualVerdict::Outcome::Yes ? "yes" : v.holds() ? "yes-window" : "no";
  json j = {{"verdict", code}, {"outcome", v.to_string()}, {"how", v.how}};
  if (v.outcome == SemidualVerdict::Outcome::YesWindow) j["N"] = v.N;
  if (!v.holds()) {
    j["witness"] = v.witness;
    j["witness_degree"] = v.witness_degree;
  }
  return j;
}

json to_json(const RingMap& phi) {
  json j = {{"source", to_json(phi.R)}};
  if (phi.kind == RingMap::Kind::Surjection) {
    j["target-kind"] = "surjection";
    json k = json::array();
    for (auto& g : phi.kernel) k.push_back(g.to_string());
    j["kernel-gens"] = k;
  } else {
    j["target-kind"] = "module-finite";
    json b = json::array();
    for (auto& g : phi.basis) b.push_back(g.to_string());
    j["presentation"] = {{"module", to_json(phi.presentation)}, {"basis", b}};
  }
  j["target"] = to_json(phi.S);
  json p = json::array();
  for (auto& q : phi.primes) p.push_back(q.to_string());
  j["primes"] = p;
  j["verification"] = phi.verification;
  return j;
}

json to_json(const GradeProfile& g) {
  json grades = json::array();
  for (auto& e : g.grades) grades.push_back({{"prime", e.prime.to_string()}, {"grade", to_json(e.grade)}});
  json ext = json::array();
  for (auto& [i, M] : g.ext) ext.push_back(i);
  return {{"grades", grades},
          {"ext_degrees", ext},
          {"cm", g.cm},
          {"constant_grade", g.constant_grade},
          {"gorenstein", g.gorenstein}};
}

json to_json(const ChangeReport& r) {
  json j = {{"result", to_json(r.result.obj)},
            {"window", to_json(r.result.w)},
            {"fingerprint", to_json(fingerprint(r.result))},
            {"source", to_json(r.source)},
            {"target", to_json(r.target)},
            {"inf_ok", r.inf_ok},
            {"sup_ok", r.sup_ok},
            {"inherited_semidualizing", r.inherited_semidualizing}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json to_json(const DescentReport& r) {
  return {{"theorem", r.theorem == DescentReport::Theorem::BaseChange ? "base-change" : "cobase-change"},
          {"source", to_json(r.source)},
          {"target", to_json(r.target)},
          {"hypothesis", r.hypothesis},
          {"relation", r.relation},
          {"relation_holds", r.relation_holds}};
}

json to_json(const SeriesTransfer& s) {
  return {{"N", s.N},
          {"P_src", to_json(s.P_src)},
          {"P_tgt", to_json(s.P_tgt)},
          {"I_src", to_json(s.I_src)},
          {"I_tgt", to_json(s.I_tgt)},
          {"I_R", to_json(s.IR)},
          {"I_S", to_json(s.IS)},
          {"I_phi", to_json(s.Iphi)},
          {"poincare_ok", s.poincare_ok},
          {"bass_ok", s.bass_ok}};
}

}  // namespace semidual
