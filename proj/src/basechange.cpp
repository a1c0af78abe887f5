#include "semidual/basechange.hpp"

#include <stdexcept>

namespace semidual {

namespace {

// Same coefficients with variable i of P sent to variable i of Q.
Poly embed(const Poly& f, const PolyRing* Q) {
  if (f.ring() == Q) return f;
  std::vector<Term> t(f.terms().begin(), f.terms().end());
  return Poly::from_terms(Q, std::move(t));
}

LaurentPoly hilbert_numerator(const FPModule& M) {
  QRPtr P = M.ring->cover_ring();
  FPModule Mc = to_cover(M);
  Replacement r = free_resolution(Mc, P->nvars() + 1);
  if (!r.terminated) throw std::logic_error("resolution over the cover did not terminate");
  LaurentPoly k;
  for (int i = r.F.lo; i <= r.F.hi(); ++i)
    for (int t : r.F.twists(i)) k.c[t] += (i % 2 ? -1 : 1);
  return k.truncated(INT_MAX);
}

// Rank of the k-span of the given polynomials.
int span_rank(std::vector<Poly> ps) {
  std::vector<Poly> piv;
  int rank = 0;
  for (Poly p : ps) {
    bool changed = true;
    while (!p.is_zero() && changed) {
      changed = false;
      for (auto& q : piv)
        if (q.lm() == p.lm()) {
          p = p - q.scale(p.lc() / q.lc());
          changed = true;
          break;
        }
    }
    if (!p.is_zero()) {
      piv.push_back(p);
      ++rank;
    }
  }
  return rank;
}

bool homogeneous_positive(const std::vector<Poly>& J) {
  for (auto& g : J)
    if (!g.is_zero() && (!g.homogeneous() || g.degree() <= 0)) return false;
  return true;
}

FPModule s_over_r(const RingMap& phi) {
  if (phi.kind == RingMap::Kind::Surjection) return FPModule::cyclic(phi.R, phi.kernel);
  return phi.presentation;
}

}  // namespace

RingMap RingMap::surjection(const QRPtr& R, std::vector<Poly> J, std::vector<Ideal> primes) {
  RingMap m;
  m.kind = Kind::Surjection;
  m.R = R;
  for (auto& g : J) g = R->reduce(g);
  m.kernel = J;
  m.S = R->quotient(J);
  m.primes = std::move(primes);
  m.verification = "surjection";
  return m;
}

RingMap RingMap::identity(const QRPtr& R) { return surjection(R, {}); }

RingMap RingMap::module_finite(const QRPtr& R, const QRPtr& S, FPModule pres, std::vector<Poly> basis,
                               std::vector<Ideal> primes) {
  const PolyRing* P = R->cover();
  const PolyRing* Q = S->cover();
  if (!(P->field() == Q->field())) throw std::invalid_argument("map: fields differ");
  if (Q->nvars() < P->nvars()) throw std::invalid_argument("map: target cover has fewer variables");
  for (int i = 0; i < P->nvars(); ++i)
    if (P->vars()[i] != Q->vars()[i] || P->weights()[i] != Q->weights()[i])
      throw std::invalid_argument("map: target cover must extend the source cover");
  if (pres.ring.get() != R.get() && !pres.ring->same(*R)) throw std::invalid_argument("map: presentation is not over the source");
  if (static_cast<int>(basis.size()) != pres.ngens) throw std::invalid_argument("map: basis size differs from the presentation");
  RingMap m;
  m.kind = Kind::ModuleFinite;
  m.R = R;
  m.S = S;
  m.presentation = pres;
  for (auto& b : basis) b = S->reduce(b);
  m.basis = basis;
  m.primes = std::move(primes);
  for (auto& g : R->ideal().gens())
    if (!m.map(g).is_zero()) throw std::invalid_argument("map: the ideal of the source does not map to zero");
  for (auto& rel : pres.rels) {
    Poly s = S->zero();
    for (int j = 0; j < pres.ngens; ++j) s += m.map(rel[j]) * basis[j];
    if (!S->reduce(s).is_zero()) throw std::invalid_argument("map: a presentation relation fails in the target");
  }
  bool graded = R->graded_local() && S->graded_local() && pres.homogeneous();
  for (int j = 0; graded && j < pres.ngens; ++j)
    graded = basis[j].is_zero() || (basis[j].homogeneous() && basis[j].degree() == pres.twists[j]);
  if (!graded) {
    m.verification = "relations verified; generation and completeness not checked (non-graded)";
    return m;
  }
  // Generation: the basis spans S / (variables of R) S over k.
  std::vector<Poly> xs;
  for (int i = 0; i < P->nvars(); ++i) xs.push_back(Poly::variable(Q, i));
  QRPtr T = S->quotient(xs);
  long dimT = vector_space_dim(FPModule::free(T, 1));
  if (dimT < 0) throw std::invalid_argument("map: target is not module-finite over the source");
  std::vector<Poly> nb;
  for (auto& b : basis) nb.push_back(T->reduce(b));
  if (span_rank(nb) != dimT) throw std::invalid_argument("map: basis does not generate the target");
  // Completeness: equal Hilbert series once generation holds.
  LaurentPoly lhs = hilbert_numerator(pres);
  for (int i = P->nvars(); i < Q->nvars(); ++i) lhs = lhs * LaurentPoly{{{0, 1}, {Q->weights()[i], -1}}};
  if (!(lhs == hilbert_numerator(FPModule::free(S, 1)))) throw std::invalid_argument("map: presentation misses relations");
  m.verification = "verified (relations, generation, Hilbert series)";
  return m;
}

Poly RingMap::map(const Poly& f) const { return S->reduce(embed(f, S->cover())); }

std::string RingMap::describe() const {
  if (kind == Kind::Surjection) return R->describe() + " -> " + S->describe();
  return R->describe() + " -> " + S->describe() + " (module-finite, " + std::to_string(presentation.ngens) + " generators)";
}

PdReport pd_complex(const Complex& X, int cutoff) {
  PdReport rep = pd_bounded(X, cutoff);
  if (rep.terminated && !rep.resolution.empty()) {
    // The resolution need not be minimal; pd = -inf RHom(X, R).
    Complex E = hom(rep.resolution, Complex::concentrated(FPModule::free(X.ring, 1), 0));
    rep.value = -inf_sup_amp(E).inf;
  }
  return rep;
}

PdReport map_pd(const RingMap& phi) {
  FPModule M = s_over_r(phi);
  if (phi.R->graded_local() && M.homogeneous()) return pd(M);
  return pd_complex(Complex::concentrated(M, 0), phi.R->nvars() + 1);
}

std::string mspec_hypothesis(const RingMap& phi) {
  const QRPtr& R = phi.R;
  if (phi.kind == RingMap::Kind::Surjection) {
    bool trivial = true;
    for (auto& g : phi.kernel) trivial = trivial && g.is_zero();
    if (trivial) return "certified";
    if (R->graded_local()) {
      if (homogeneous_positive(phi.kernel)) return "certified";
      Ideal m = R->irrelevant();
      if ((m + Ideal(R->cover(), phi.kernel)).is_unit()) return "m-Spec not covered";
    }
    return "hypothesis-unverified";
  }
  if (R->graded_local() && phi.S->graded_local() && phi.verification.rfind("verified", 0) == 0) return "certified";
  return "hypothesis-unverified";
}

std::string GradeProfile::summary() const {
  std::string s = std::string(cm ? "CM" : "not CM") + (constant_grade ? ", constant grade" : ", nonconstant grade") +
                  (gorenstein ? ", Gorenstein" : "");
  for (auto& g : grades) s += "; grade " + g.grade.to_string() + " at " + g.prime.to_string();
  return s;
}

GradeProfile grade_profile(const RingMap& phi) {
  if (phi.kind != RingMap::Kind::Surjection) throw std::invalid_argument("grade profile needs a surjection");
  PdReport p = map_pd(phi);
  if (!p.terminated) throw std::domain_error("infinite projective dimension");
  const QRPtr& R = phi.R;
  Derived E = rhom(DObj::module(s_over_r(phi)), DObj::module(FPModule::free(R, 1)), R->nvars() + 2);
  if (!E.w.is_exact()) throw std::logic_error("RHom(S, R) not exact despite finite pd");
  GradeProfile g;
  g.ext = homology_of(E);
  g.cm = true;
  std::vector<Ideal> anns;
  for (auto& [i, M] : g.ext) anns.push_back(annihilator(M));
  for (size_t a = 0; a < anns.size(); ++a)
    for (size_t b = a + 1; b < anns.size(); ++b) g.cm = g.cm && (anns[a] + anns[b]).is_unit();
  g.constant_grade = g.cm && g.ext.size() == 1;
  g.gorenstein = g.cm;
  for (auto& [i, M] : g.ext) g.gorenstein = g.gorenstein && fitting_ideal(M, 1).is_unit();
  for (auto& q : phi.primes) g.grades.push_back({q, -localized_bounds(g.ext, q).sup});
  return g;
}

Complex along(const RingMap& phi, const Complex& X) {
  const QRPtr& S = phi.S;
  std::vector<FPModule> mods;
  std::vector<Mat> diffs;
  for (int i = X.lo; i <= X.hi(); ++i) {
    FPModule M = X.at(i);
    FPModule N = FPModule::free(S, M.ngens, M.twists);
    for (auto& r : M.rels) {
      Vec v;
      for (auto& f : r) v.push_back(phi.map(f));
      N.rels.push_back(std::move(v));
    }
    mods.push_back(std::move(N));
    if (i > X.lo) {
      Mat d = X.diff(i);
      Mat e(d.rows, d.ncols(), S->cover());
      for (int c = 0; c < d.ncols(); ++c)
        for (int r = 0; r < d.rows; ++r) e.at(r, c) = phi.map(d.at(r, c));
      diffs.push_back(std::move(e));
    }
  }
  if (mods.empty()) return Complex::zero(S);
  return Complex::make(S, X.lo, std::move(mods), std::move(diffs));
}

FPModule as_s_module(const RingMap& phi, const FPModule& M) {
  if (phi.kind != RingMap::Kind::Surjection) throw std::domain_error("unsupported: module structure along a module-finite map");
  Ideal ann = annihilator(M);
  for (auto& g : phi.kernel)
    if (!ann.contains(g)) throw std::logic_error("module is not annihilated by the kernel");
  return change_ring(M, phi.S);
}

namespace {

Bounds derived_bounds(const Derived& d) { return bounds_of(homology_of(d)); }

// F (x) S for a free replacement F of X, exact when pd_R(S) or pd_R(X) is finite.
Derived honest_base_change(const Complex& X, const RingMap& phi, const PdReport& pdS, int N) {
  Complex Xt = X.trimmed();
  if (Xt.empty()) return {DObj::honest(Complex::zero(phi.S)), Window::exact()};
  Bounds b = inf_sup_amp(Xt);
  if (b.sup.is_neg_inf()) return {DObj::honest(Complex::zero(phi.S)), Window::exact()};
  if (pdS.terminated) {
    // Tor vanishes above sup X + pd S, so the truncation with a cokernel on top is exact.
    int M = std::max(static_cast<int>(b.sup.value() + pdS.value.value()) + 1, Xt.lo + 1);
    Replacement r = free_replacement(Xt, M);
    if (r.terminated) return {DObj::honest(along(phi, r.F)), Window::exact()};
    Complex F = r.F;
    int top = M - 1;
    Complex T;
    T.ring = F.ring;
    T.lo = F.lo;
    for (int i = F.lo; i <= top; ++i) {
      T.mods.push_back(F.at(i));
      T.d.push_back(i == F.lo ? Mat(0, F.rank(i), F.ring->cover()) : F.diff(i));
    }
    for (auto& c : F.diff(M).cols) T.mods.back().rels.push_back(c);
    return {DObj::honest(along(phi, T)), Window::exact()};
  }
  int Nw = N >= 0 ? N : phi.R->nvars() + 6;
  Nw = std::max(Nw, Xt.hi() + 1);
  Replacement r = free_replacement(Xt, Nw);
  if (r.terminated) return {DObj::honest(along(phi, r.F)), Window::exact()};
  return {DObj::honest(along(phi, r.F)), Window{Window::Tag::AbWindow, Nw, INT_MIN, Nw - 1}};
}

int normalized_shift(const QRPtr& R) { return dualizing_complex(R).s; }

}  // namespace

ChangeReport base_change(const DObj& C, const RingMap& phi, int N) {
  ChangeReport rep;
  PdReport pdS = map_pd(phi);
  rep.source = bounds_of(C);
  bool done = false;
  if (C.is_dual() && phi.kind == RingMap::Kind::Surjection && pdS.terminated) {
    // D(W) (x) S = D_S(RHom_R(S, W)).
    Derived h = rhom(DObj::module(s_over_r(phi)), DObj::honest(C.X), phi.R->nvars() + 2);
    auto H = homology_of(h);
    if (h.w.is_exact() && H.size() <= 1) {
      Complex W = H.empty() ? Complex::zero(phi.S)
                            : Complex::concentrated(as_s_module(phi, H.begin()->second), H.begin()->first);
      rep.result = {DObj::dual(W, C.s), Window::exact()};
      rep.note = "dual of RHom(S, W)";
      done = true;
    }
  }
  if (!done) {
    std::optional<Complex> X = as_complex(C);
    if (!X) throw std::domain_error("unsupported: base change of a dual object of positive amplitude");
    rep.result = honest_base_change(*X, phi, pdS, N);
    rep.note = pdS.terminated ? "finite pd of S" : (rep.result.w.is_exact() ? "finite pd of C" : "window");
  }
  rep.target = derived_bounds(rep.result);
  rep.inf_ok = rep.target.inf >= rep.source.inf;
  if (pdS.terminated) rep.sup_ok = rep.target.sup <= rep.source.sup + pdS.value;
  rep.inherited_semidualizing = pdS.terminated && rep.result.w.is_exact() && is_semidualizing(C).holds();
  return rep;
}

ChangeReport cobase_change(const DObj& C, const RingMap& phi, int N) {
  ChangeReport rep;
  PdReport pdS = map_pd(phi);
  if (!pdS.terminated) throw std::domain_error("infinite projective dimension");
  rep.source = bounds_of(C);
  int e = phi.extra_vars();
  auto from_dual = [&](const Complex& W, int s) {
    // RHom_R(S, D(W)) = D_S(S (x) W).
    ChangeReport b = base_change(DObj::honest(W), phi, N);
    if (!b.result.w.is_exact()) throw std::domain_error("unsupported: S (x) W not exact");
    rep.result = {DObj::dual(b.result.obj.X, s + e), Window::exact()};
    rep.note = "dual of S (x) W";
  };
  if (C.is_dual()) {
    from_dual(C.X, C.s);
  } else {
    bool done = false;
    if (phi.kind == RingMap::Kind::Surjection) {
      Derived h = rhom(DObj::module(s_over_r(phi)), C, phi.R->nvars() + 2);
      auto H = homology_of(h);
      if (h.w.is_exact() && H.size() <= 1) {
        Complex W = H.empty() ? Complex::zero(phi.S)
                              : Complex::concentrated(as_s_module(phi, H.begin()->second), H.begin()->first);
        rep.result = {DObj::honest(W), Window::exact()};
        rep.note = "single Ext module";
        done = true;
      }
    }
    if (!done) {
      int s = normalized_shift(phi.R);
      std::optional<Complex> W = as_complex(dagger(C, s));
      if (!W) throw std::domain_error("unsupported: RHom(S, C) needs C or D(C) of amplitude zero");
      from_dual(*W, s);
    }
  }
  rep.target = derived_bounds(rep.result);
  rep.inf_ok = rep.source.inf - pdS.value <= rep.target.inf;
  rep.sup_ok = rep.target.inf <= rep.source.sup;
  rep.inherited_semidualizing = is_semidualizing(C).holds();
  return rep;
}

DescentReport descent_gdim(const DObj& C, const DObj& X, const RingMap& phi, DescentReport::Theorem t) {
  DescentReport d;
  d.theorem = t;
  d.hypothesis = mspec_hypothesis(phi);
  d.source = gdim(C, X);
  ChangeReport xs = base_change(X, phi);
  ChangeReport cs = t == DescentReport::Theorem::BaseChange ? base_change(C, phi) : cobase_change(C, phi);
  if (!xs.result.w.is_exact() || !cs.result.w.is_exact()) throw std::domain_error("unsupported: base change not exact");
  d.target = gdim(cs.result.obj, xs.result.obj);
  const ExtInt& a = d.source.value;
  const ExtInt& b = d.target.value;
  if (t == DescentReport::Theorem::BaseChange) {
    d.relation = "gdim_C(X) = gdim_{C(x)S}(X(x)S): " + a.to_string() + " vs " + b.to_string();
    d.relation_holds = a == b;
  } else {
    ExtInt p = map_pd(phi).value;
    bool eq_case = phi.R->graded_local();
    if (!eq_case) {
      Bounds bc = bounds_of(C);
      GradeProfile g = grade_profile(phi);
      eq_case = bc.amp == ExtInt(0) && g.ext.size() <= 1;
    }
    if (a.finite() != b.finite()) {
      d.relation_holds = false;
    } else if (!a.finite()) {
      d.relation_holds = a == b;
    } else {
      d.relation_holds = eq_case ? a == b : (a - p <= b && b <= a + p);
    }
    d.relation = std::string(eq_case ? "gdim_C(X) = " : "gdim_C(X) -+ pd bounds ") + "gdim_{RHom(S,C)}(X(x)S): " +
                 a.to_string() + " vs " + b.to_string();
  }
  if (d.hypothesis == "certified" && !d.relation_holds) throw std::logic_error("descent relation violated: " + d.relation);
  return d;
}

SeriesTransfer series_transfer(const DObj& C, const RingMap& phi, int N) {
  if (!phi.R->graded_local() || !phi.S->graded_local()) throw std::domain_error("series need graded-local rings");
  PdReport pdS = map_pd(phi);
  if (!pdS.terminated) throw std::domain_error("infinite projective dimension");
  ChangeReport b = base_change(C, phi);
  if (!b.result.w.is_exact()) throw std::logic_error("base change not exact");
  const DObj& T = b.result.obj;
  SeriesTransfer st;
  st.N = N;
  st.P_src = poincare_series(C, N);
  st.P_tgt = poincare_series(T, N);
  st.poincare_ok = st.P_src.truncated(N) == st.P_tgt.truncated(N);
  DObj Rr = DObj::module(FPModule::free(phi.R, 1));
  DObj Ss = DObj::module(FPModule::free(phi.S, 1));
  long dR = depth(Rr).value(), dS = depth(Ss).value();
  long e = dS - dR;
  ExtInt dC = depth(C);
  long mC = dC.finite() ? dC.value() : 0;
  int K = static_cast<int>(N - mC);  // I_phi needed up to K
  int span = static_cast<int>(std::labs(e));
  st.IR = bass_series(Rr, K + static_cast<int>(dR) + span + 1);
  st.IS = bass_series(Ss, K + static_cast<int>(dR) + 1);
  long lead = st.IR.at(static_cast<int>(dR));
  if (lead <= 0) throw std::logic_error("Bass number at the depth vanishes");
  for (int k = static_cast<int>(e); k <= K; ++k) {
    long v = st.IS.at(k + static_cast<int>(dR));
    for (auto& [i, mu] : st.IR.c)
      if (i > dR) v -= mu * st.Iphi.at(k + static_cast<int>(dR) - i);
    if (v % lead) throw std::logic_error("Bass series quotient is not integral");
    if (v) st.Iphi.c[k] = v / lead;
  }
  st.I_src = bass_series(C, static_cast<int>(N - e));
  st.I_tgt = bass_series(T, N);
  st.bass_ok = (st.I_src * st.Iphi).truncated(N) == st.I_tgt.truncated(N);
  return st;
}

namespace {

Poly derivative(const Poly& f) {
  std::vector<Term> t;
  for (auto& term : f.terms()) {
    int e = term.m.e[0];
    if (e == 0) continue;
    Monomial m = term.m;
    m.e[0] = static_cast<uint16_t>(e - 1);
    t.push_back({m, term.c * FieldElem(term.c.field(), e)});
  }
  return Poly::from_terms(f.ring(), std::move(t));
}

bool trivial_picard(const QRPtr& R) {
  if (R->graded_local()) return true;
  if (R->nvars() != 1) return false;
  const auto& g = R->ideal().gb();
  if (g.empty()) return true;
  // k[T]/(f) with f squarefree is a product of fields.
  const Poly& f = g.front();
  return Ideal(R->cover(), {f, derivative(f)}).is_unit();
}

}  // namespace

UniquenessReport transfer_uniqueness(const DObj& C, const DObj& Cp, const RingMap& phi) {
  if (!trivial_picard(phi.R)) throw std::domain_error("unsupported Picard class");
  UniquenessReport u;
  ChangeReport a = base_change(C, phi), b = base_change(Cp, phi);
  u.targets_agree = fingerprint(a.result) == fingerprint(b.result);
  u.sources_agree = fingerprint(C) == fingerprint(Cp);
  u.both_semidualizing = is_semidualizing(C).holds() && is_semidualizing(Cp).holds();
  u.hypothesis = mspec_hypothesis(phi);
  if (u.targets_agree && u.both_semidualizing && u.hypothesis == "certified" && !u.sources_agree)
    throw std::logic_error("uniqueness violated for semidualizing complexes");
  u.failure_demonstrated = u.targets_agree && !u.sources_agree && !u.both_semidualizing;
  u.note = u.targets_agree ? (u.sources_agree ? "sources and targets agree" : "targets agree, sources differ")
                           : "targets differ";
  return u;
}

}  // namespace semidual
