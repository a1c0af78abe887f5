#include "semidual/semidual.hpp"

#include <algorithm>
#include <stdexcept>

namespace semidual {

Fingerprint fingerprint(const DObj& A) { return fingerprint(homology_of(A), A.ring()->graded_local()); }

Fingerprint fingerprint(const Derived& A) { return fingerprint(homology_of(A), A.obj.ring()->graded_local()); }

std::string SemidualVerdict::to_string() const {
  switch (outcome) {
    case Outcome::Yes: return "yes (" + how + ")";
    case Outcome::YesWindow: return "yes-window(" + std::to_string(N) + ") (" + how + ")";
    case Outcome::No: return "no (" + witness + ")";
  }
  return "";
}

std::optional<int> free_rank_one_shift(const DObj& A) {
  auto H = homology_of(A);
  if (H.size() != 1) return std::nullopt;
  FPModule M = minimize(H.begin()->second);
  if (M.ngens != 1) return std::nullopt;
  if (!(annihilator(M) == A.ring()->ideal())) return std::nullopt;
  return H.begin()->first;
}

namespace {

// Shift a with C ~ Sigma^a D, when C = D(W) and W ~ Sigma^{-a} R.
std::optional<int> dualizing_shift(const DObj& C) {
  if (!C.is_dual()) return std::nullopt;
  auto a = free_rank_one_shift(DObj::honest(C.X));
  if (!a) return std::nullopt;
  return -*a;
}

int amp_or_zero(const Bounds& b) { return b.amp.finite() ? static_cast<int>(b.amp.value()) : 0; }

// Position of the hom_basis entry (i, a, b) inside Hom(F, Y)_n.
struct HomLookup {
  std::map<int, int> block;  // i -> offset
  std::map<int, int> width;  // i -> rank of Y_{i+n}
  HomLookup(const Complex& F, const Complex& Y, int n) {
    int off = 0;
    for (int i = F.lo; i <= F.hi(); ++i) {
      int j = i + n;
      if (j < Y.lo || j > Y.hi()) continue;
      block[i] = off;
      width[i] = Y.rank(j);
      off += F.rank(i) * Y.rank(j);
    }
  }
  int pos(int i, int a, int b) const { return block.at(i) + a * width.at(i) + b; }
  bool has(int i) const { return block.count(i) > 0; }
};

// The element eps of Hom(F, Z)_0 as a column of hom(F, Z)_0.
Mat augmentation_element(const Complex& F, const Complex& Z, const ChainMap& eps) {
  const QuotientRing& R = *F.ring;
  HomLookup L(F, Z, 0);
  int n = 0;
  for (auto& [i, w] : L.width) n += F.rank(i) * w;
  Mat col = mat_zero(R, n, 1);
  for (auto& [i, off] : L.block) {
    Mat e = eps.at(F, Z, i);
    for (int a = 0; a < F.rank(i); ++a)
      for (int b = 0; b < Z.rank(i); ++b) col.at(L.pos(i, a, b), 0) = e.at(b, a);
  }
  return col;
}

}  // namespace

int default_semidual_window(const DObj& C) { return C.ring()->nvars() + amp_or_zero(bounds_of(C)) + 4; }

SemidualVerdict is_semidualizing(const DObj& C, int N) {
  SemidualVerdict v;
  if (N < 0) N = default_semidual_window(C);
  v.N = N;
  if (free_rank_one_shift(C)) {
    v.outcome = SemidualVerdict::Outcome::Yes;
    v.how = C.is_dual() ? "shift of R" : "C = shift of R";
    return v;
  }
  if (C.is_dual()) {
    if (dualizing_shift(C)) {
      v.outcome = SemidualVerdict::Outcome::Yes;
      v.how = "dualizing complex via the cover";
      return v;
    }
    SemidualVerdict w = is_semidualizing(DObj::honest(C.X), N);
    w.how = "RHom(D(W), D(W)) = RHom(W, W); " + w.how;
    return w;
  }
  const QRPtr& Rp = C.ring();
  Complex Ct = C.X.trimmed();
  if (Ct.empty()) {
    v.witness = "C = 0";
    return v;
  }
  int M = N + Ct.hi() + 2;
  Replacement r = free_replacement(Ct, M);
  Complex E = hom(r.F, Ct);
  Complex Rc = Complex::concentrated(FPModule::free(Rp, 1), 0);
  ChainMap chi{{{0, augmentation_element(r.F, Ct, r.eps)}}};
  Complex K = cone(Rc, E, chi);
  int lo = r.terminated ? K.lo : std::max(K.lo, -N);
  for (int n = lo; n <= K.hi(); ++n) {
    if (homology(K, n).module.ngens == 0) continue;
    v.outcome = SemidualVerdict::Outcome::No;
    v.witness_degree = n;
    if (n == 0 || n == 1) {
      int g = minimize(homology(E, 0).module).ngens;
      v.witness = "homothety not an isomorphism: H_0(RHom(C,C)) has " + std::to_string(g) + " minimal generators";
    } else {
      v.witness = "Ext^" + std::to_string(-n) + "(C,C) != 0";
    }
    return v;
  }
  v.outcome = r.terminated ? SemidualVerdict::Outcome::Yes : SemidualVerdict::Outcome::YesWindow;
  v.how = r.terminated ? "homothety cone exact, finite resolution" : "homothety cone exact in degrees >= " + std::to_string(lo);
  return v;
}

std::optional<int> gorenstein_shift(const QRPtr& R) { return free_rank_one_shift(dualizing_complex(R)); }

DualizingVerdict is_dualizing(const DObj& C, int N) {
  DualizingVerdict d;
  if (dualizing_shift(C)) {
    d.dualizing = d.exact = true;
    d.how = "shift of the dualizing complex of the cover";
    return d;
  }
  if (auto a = gorenstein_shift(C.ring())) {
    SemidualVerdict v = is_semidualizing(C, N);
    d.dualizing = v.holds();
    d.exact = v.outcome == SemidualVerdict::Outcome::Yes;
    d.how = "R Gorenstein (D ~ Sigma^" + std::to_string(*a) + " R exactly); semidualizing " + v.to_string();
    return d;
  }
  d.how = "undetermined: R not Gorenstein and C not a shift of D";
  return d;
}

std::string GDimReport::summary() const {
  std::string s = "gdim = " + value.to_string() + " [" + certificate + "]";
  if (certificate == "ab-certified-infinite" || certificate == "biduality-failure")
    s += " witness degree " + std::to_string(witness_degree);
  if (graded) s += " depthR=" + depthR.to_string() + " depthX=" + depthX.to_string();
  if (!note.empty()) s += " (" + note + ")";
  return s;
}

int ab_window(const DObj& C, const DObj& X) {
  Bounds bc = bounds_of(C), bx = bounds_of(X);
  int ampC = amp_or_zero(bc);
  int spread = bx.amp.finite() ? static_cast<int>(bx.amp.value()) : 0;
  const QRPtr& R = C.ring();
  long d = R->graded_local() ? depth(DObj::module(FPModule::free(R, 1))).value() : R->nvars();
  return static_cast<int>(d) + ampC + spread + 4;
}

namespace {

// delta(x)(g) = (-1)^{|x||g|} eps_G(g)(x), a chain map F -> Hom(G, C).
ChainMap biduality_map(const Complex& F, const Complex& C, const Complex& E, const Complex& G, const ChainMap& epsG) {
  const QuotientRing& R = *F.ring;
  ChainMap d;
  for (int i = F.lo; i <= F.hi(); ++i) {
    HomLookup LB(G, C, i);
    int rows = 0;
    for (auto& [m, w] : LB.width) rows += G.rank(m) * w;
    if (rows == 0 || F.rank(i) == 0) continue;
    Mat M = mat_zero(R, rows, F.rank(i));
    for (auto& [m, off] : LB.block) {
      Mat em = epsG.at(G, E, m);
      HomLookup LE(F, C, m);
      if (!LE.has(i)) continue;
      bool neg = (static_cast<long>(i) * m) % 2 != 0;
      for (int a = 0; a < F.rank(i); ++a)
        for (int g = 0; g < G.rank(m); ++g)
          for (int c = 0; c < C.rank(i + m); ++c) {
            const Poly& p = em.at(LE.pos(i, a, c), g);
            if (!p.is_zero()) M.at(LB.pos(m, g, c), a) = neg ? -p : p;
          }
    }
    d.f[i] = std::move(M);
  }
  return d;
}

std::map<int, FPModule> homology_from(const Complex& E, int lo) {
  std::map<int, FPModule> H;
  for (int d = std::max(E.lo, lo); d <= E.hi(); ++d) {
    Homology h = homology(E, d);
    if (h.module.ngens > 0) H.emplace(d, std::move(h.module));
  }
  return H;
}

}  // namespace

GDimReport gdim(const DObj& C, const DObj& X, int N) {
  GDimReport rep;
  const QRPtr& R = C.ring();
  Bounds bc = bounds_of(C), bx = bounds_of(X);
  rep.graded = R->graded_local() && bx.inf.finite() && X.X.homogeneous() && (C.is_dual() || C.X.homogeneous());
  if (bx.inf.is_pos_inf()) {
    rep.value = ExtInt::neg_inf();
    rep.certificate = "exact";
    rep.note = "X = 0";
    return rep;
  }
  if (rep.graded) {
    rep.depthR = depth(DObj::module(FPModule::free(R, 1)));
    rep.depthX = depth(X);
    rep.expected_inf = bc.inf - rep.depthR + rep.depthX;
  }
  auto finish_exact = [&](const Derived& r, const std::string& note) {
    rep.rhom_window = r.w;
    rep.rhom_homology = homology_of(r);
    rep.rhom_fingerprint = fingerprint(rep.rhom_homology, R->graded_local());
    Bounds b = bounds_of(rep.rhom_homology);
    rep.value = bc.inf - b.inf;
    rep.certificate = "exact";
    rep.note = note;
    if (rep.graded && rep.value.finite()) rep.ab_ok = rep.value == rep.depthR - rep.depthX;
    return rep;
  };
  if (dualizing_shift(C)) {
    Derived r = rhom(X, C, std::max(1, C.X.trimmed().hi() + 2));
    if (r.w.is_exact()) return finish_exact(r, "dualizing: every homologically finite complex is reflexive");
  }
  std::optional<Complex> Xc = as_complex(X), Cc = as_complex(C);
  if (!Xc || !Cc) throw std::domain_error("gdim needs complexes representable over R");
  Complex Ct = Cc->trimmed(), Xt = Xc->trimmed();
  int ampC = amp_or_zero(bc);
  int Nab = N >= 0 ? N : ab_window(C, X);
  rep.window = Nab;
  int M = Nab;
  if (rep.graded) M = std::max(M, Ct.hi() - static_cast<int>(rep.expected_inf.value()) + 3);
  M = std::max(M, static_cast<int>(bx.sup.value()) + ampC + 4);
  Replacement F = free_replacement(Xt, M);
  Complex E = hom(F.F, Ct);
  int eLo = F.terminated ? INT_MIN : Ct.hi() - M + 1;
  rep.rhom_window = F.terminated ? Window::exact() : Window{Window::Tag::AbWindow, M, eLo, INT_MAX};
  rep.rhom_homology = homology_from(E, eLo);
  rep.rhom_fingerprint = fingerprint(rep.rhom_homology, R->graded_local());
  Bounds bE = bounds_of(rep.rhom_homology);
  if (rep.graded) {
    long e = rep.expected_inf.value();
    for (auto& [d, H] : rep.rhom_homology)
      if (d < e) rep.witness_degree = d;
    if (bE.inf < rep.expected_inf) {
      rep.value = ExtInt::pos_inf();
      rep.certificate = "ab-certified-infinite";
      rep.note = "Ext^" + std::to_string(-rep.witness_degree) + "(X,C) != 0 below the AB degree " + std::to_string(e);
      return rep;
    }
    if (!rep.rhom_homology.count(static_cast<int>(e))) {
      rep.value = ExtInt::pos_inf();
      rep.certificate = "ab-certified-infinite";
      rep.witness_degree = static_cast<int>(e);
      rep.note = "Ext^" + std::to_string(-e) + "(X,C) = 0 at the AB degree";
      return rep;
    }
  }
  if (bE.inf.is_pos_inf()) throw std::logic_error("RHom(X, C) vanishes in the window");
  // Biduality F -> Hom(G, C) with G a free replacement of RHom(X, C).
  int M2 = Ct.hi() - static_cast<int>(bx.inf.value()) + 6;
  Replacement G = free_replacement(E, M2);
  Complex B = hom(G.F, Ct);
  ChainMap delta = biduality_map(F.F, Ct, E.trimmed(), G.F, G.eps);
  Complex K = cone(F.F, B, delta);
  int lo = static_cast<int>(bx.inf.value()) - 2, hi = static_cast<int>(bx.sup.value()) + 2;
  if (!G.terminated) lo = std::max(lo, Ct.hi() - M2 + 2);
  if (!F.terminated) hi = std::min(hi, M - ampC - 2);
  rep.check_lo = lo;
  rep.check_hi = hi;
  for (int n = lo; n <= hi; ++n) {
    if (homology(K, n).module.ngens == 0) continue;
    rep.value = ExtInt::pos_inf();
    rep.certificate = "biduality-failure";
    rep.witness_degree = n;
    rep.note = "biduality cone not exact";
    return rep;
  }
  rep.value = bc.inf - bE.inf;
  rep.certificate = F.terminated ? "exact" : "window(" + std::to_string(M) + ")";
  if (F.terminated) rep.note = "finite projective dimension";
  if (rep.graded) rep.ab_ok = rep.value == rep.depthR - rep.depthX;
  return rep;
}

bool is_totally_reflexive(const FPModule& M, const FPModule& C) {
  DObj Cd = DObj::module(C);
  if (!is_semidualizing(Cd).holds()) throw std::domain_error("C is not semidualizing");
  if (M.is_zero()) return true;
  GDimReport r = gdim(Cd, DObj::module(M));
  return r.value == ExtInt(0);
}

DualInto dual_into(const DObj& C, const DObj& Cp, int N) {
  DualInto d;
  if (N < 0) N = ab_window(C, Cp);
  d.rhom = rhom(Cp, C, N, Window::Tag::AbWindow);
  d.report = gdim(C, d.rhom.obj);
  d.expected = bounds_of(C).inf - bounds_of(Cp).inf;
  d.ok = d.report.value == d.expected;
  return d;
}

namespace {

bool same_in_window(const Derived& A, const DObj& B) {
  std::map<int, FPModule> hb;
  for (auto& [i, M] : homology_of(B))
    if (A.w.covers(i)) hb.emplace(i, M);
  bool graded = B.ring()->graded_local();
  return fingerprint(homology_of(A), graded) == fingerprint(hb, graded);
}

}  // namespace

EvaluationReport evaluation_checks(const DObj& C, const DObj& Cp, int N) {
  EvaluationReport e;
  if (N < 0) N = default_semidual_window(C) + default_semidual_window(Cp);
  Derived h = rhom(Cp, C, N);
  Derived t = derived_tensor(Cp, h.obj, N);
  t.w = t.w.meet(h.w);
  e.tensor_eval = same_in_window(t, C);
  e.detail = "C' (x) RHom(C',C) vs C: " + std::string(e.tensor_eval ? "agree" : "differ") + " [" + t.w.to_string() + "]";
  try {
    Derived u = derived_tensor(C, Cp, N);
    if (u.w.is_exact() && is_semidualizing(u.obj).holds()) {
      e.hom_checked = true;
      Derived v = rhom(Cp, u.obj, N);
      e.hom_eval = same_in_window(v, C);
      e.detail += "; RHom(C', C (x) C') vs C: " + std::string(e.hom_eval ? "agree" : "differ");
    }
  } catch (const std::domain_error& err) {
    e.detail += "; C (x) C' not computed: " + std::string(err.what());
  }
  return e;
}

}  // namespace semidual
