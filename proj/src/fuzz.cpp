#include "semidual/fuzz.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "semidual/basechange.hpp"
#include "semidual/pool.hpp"

namespace semidual {

namespace {

const char* kVars[] = {"X", "Y", "Z"};

std::string kind_name(ObjSpec::Kind k) {
  switch (k) {
    case ObjSpec::Kind::Cyclic: return "cyclic";
    case ObjSpec::Kind::Koszul: return "koszul";
    case ObjSpec::Kind::Free: return "free";
    case ObjSpec::Kind::Dualizing: return "dualizing";
  }
  return "";
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

}  // namespace

std::string FuzzCase::describe() const {
  std::vector<std::string> vars(kVars, kVars + nvars);
  std::string s = "k[" + join(vars) + "]";
  if (!ring.empty()) s += "/(" + join(ring) + ")";
  for (size_t i = 0; i < objs.size(); ++i) {
    s += "; obj" + std::to_string(i) + " = " + kind_name(objs[i].kind) + "(" + join(objs[i].gens) + ")";
    if (objs[i].shift) s += "[" + std::to_string(objs[i].shift) + "]";
  }
  if (!f.empty()) s += "; f = " + f;
  return s;
}

namespace {

enum class Status { Pass, Fail, Skip };
struct Verdict {
  Status status = Status::Pass;
  std::string msg;
};
Verdict pass() { return {}; }
Verdict fail(std::string m) { return {Status::Fail, std::move(m)}; }
Verdict skip(std::string m = "") { return {Status::Skip, std::move(m)}; }

class Rng {
 public:
  explicit Rng(uint64_t seed) : g_(seed) {}
  int below(int n) { return static_cast<int>(g_() % static_cast<uint64_t>(n)); }
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }

 private:
  std::mt19937_64 g_;
};

std::string monomial(Rng& r, int nvars, int deg) {
  std::vector<int> e(nvars, 0);
  for (int k = 0; k < deg; ++k) ++e[r.below(nvars)];
  std::string s;
  for (int i = 0; i < nvars; ++i) {
    if (!e[i]) continue;
    if (!s.empty()) s += "*";
    s += kVars[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

std::string linear_form(Rng& r, int nvars) {
  std::string s;
  for (int i = 0; i < nvars; ++i) {
    int c = r.between(1, 7);
    s += (s.empty() ? "" : "+") + std::to_string(c) + "*" + kVars[i];
  }
  return s;
}

std::vector<std::string> monomials(Rng& r, int nvars, int lo, int hi, int mindeg, int maxdeg) {
  std::vector<std::string> out;
  int n = r.between(lo, hi);
  for (int k = 0; k < n; ++k) {
    std::string m = monomial(r, nvars, r.between(mindeg, maxdeg));
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  return out;
}

FuzzCase random_ring(Rng& r) {
  FuzzCase c;
  c.nvars = r.between(1, 3);
  c.ring = monomials(r, c.nvars, 0, 3, 2, 3);
  return c;
}

ObjSpec random_module(Rng& r, int nvars) {
  return {ObjSpec::Kind::Cyclic, r.between(-1, 1), monomials(r, nvars, 1, 2, 1, 2)};
}

// Bounded free complexes: Koszul complexes on monomials or linear forms.
ObjSpec random_free(Rng& r, int nvars) {
  if (r.below(4) == 0) return {ObjSpec::Kind::Free, r.between(-1, 1), {}};
  std::vector<std::string> g;
  int n = r.between(1, 2);
  for (int k = 0; k < n; ++k) g.push_back(r.below(2) ? linear_form(r, nvars) : monomial(r, nvars, r.between(1, 2)));
  return {ObjSpec::Kind::Koszul, r.between(-1, 1), g};
}

ObjSpec random_object(Rng& r, int nvars) { return r.below(2) ? random_module(r, nvars) : random_free(r, nvars); }

ObjSpec random_semidualizing(Rng& r) {
  return {r.below(2) ? ObjSpec::Kind::Free : ObjSpec::Kind::Dualizing, r.between(-1, 1), {}};
}

struct Built {
  QRPtr R;
  std::vector<DObj> objs;
  std::optional<Poly> f;  // a verified nonzerodivisor
};

std::vector<Poly> parse_all(const QRPtr& R, const std::vector<std::string>& v) {
  std::vector<Poly> out;
  for (auto& s : v) out.push_back(R->parse(s));
  return out;
}

Built build(const FuzzCase& c, Field fld) {
  Built b;
  std::vector<std::string> vars(kVars, kVars + c.nvars);
  const PolyRing* P = PolyRing::make(vars, fld);
  std::vector<Poly> g;
  for (auto& s : c.ring) g.push_back(parse_poly(P, s));
  b.R = QuotientRing::make(P, g);
  for (auto& o : c.objs) {
    DObj A;
    switch (o.kind) {
      case ObjSpec::Kind::Cyclic: A = DObj::module(FPModule::cyclic(b.R, parse_all(b.R, o.gens))); break;
      case ObjSpec::Kind::Koszul: A = DObj::honest(koszul(b.R, parse_all(b.R, o.gens))); break;
      case ObjSpec::Kind::Free: A = DObj::module(FPModule::free(b.R, 1)); break;
      case ObjSpec::Kind::Dualizing: A = dualizing_complex(b.R); break;
    }
    b.objs.push_back(shift(A, o.shift));
  }
  if (!c.f.empty()) {
    Poly f = b.R->parse(c.f);
    if (!f.is_zero() && colon(b.R->ideal(), f) == b.R->ideal()) b.f = f;
  }
  return b;
}

std::string bstr(const Bounds& b) {
  return "inf " + b.inf.to_string() + ", sup " + b.sup.to_string() + ", amp " + b.amp.to_string();
}

bool agree(const Derived& a, const Derived& b) {
  Window w = a.w.meet(b.w);
  return fingerprint(Derived{a.obj, w}) == fingerprint(Derived{b.obj, w});
}

const int kN = 6;

struct Tag {
  std::string name;
  bool mutation = false;
  std::function<FuzzCase(Rng&)> generate;
  std::function<Verdict(const Built&)> check;
};

FuzzCase with_nzd(Rng& r, FuzzCase c) {
  c.f = linear_form(r, c.nvars);
  return c;
}

// X (x) P with P = Sigma^a S (+ Sigma^b S), S = R/(f).
Verdict check_thm4_2(const Built& b, bool part_c) {
  if (!b.f) return skip("no nonzerodivisor");
  const DObj& X = b.objs[0];
  DObj P = b.objs[1];
  if (b.objs.size() > 2) P = DObj::honest(direct_sum(P.X, b.objs[2].X));
  Bounds bx = bounds_of(X), bp = bounds_of(P);
  Derived T = derived_tensor(X, P, kN);
  if (!T.w.is_exact()) return fail("tensor with P not exact");
  Bounds bt = bounds_of(homology_of(T));
  std::string data = "X: " + bstr(bx) + "; P: " + bstr(bp) + "; X (x) P: " + bstr(bt);
  if (part_c) {
    if (bp.amp != ExtInt(0) && !homology_of(P).empty()) return skip();
    if (bt.inf != bx.inf + bp.inf) return fail("inf(X (x) P) != inf X + inf P; " + data);
    return pass();
  }
  if (!(bt.inf <= bx.inf + bp.sup)) return fail("inf(X (x) P) > inf X + sup P; " + data);
  if (!(bt.sup >= bx.sup + bp.inf)) return fail("sup(X (x) P) < sup X + inf P; " + data);
  if (!(bt.amp >= bx.amp - bp.amp)) return fail("amp(X (x) P) < amp X - amp P; " + data);
  return pass();
}

FuzzCase gen_thm4_2(Rng& r, bool part_c) {
  FuzzCase c = with_nzd(r, random_ring(r));
  c.objs.push_back(random_object(r, c.nvars));
  c.objs.push_back({ObjSpec::Kind::Cyclic, r.between(0, 2), {c.f}});
  if (!part_c && r.below(2)) c.objs.push_back({ObjSpec::Kind::Cyclic, r.between(0, 3), {c.f}});
  return c;
}

FuzzCase gen_c_x(Rng& r) {
  FuzzCase c = random_ring(r);
  c.objs.push_back(random_semidualizing(r));
  c.objs.push_back(random_object(r, c.nvars));
  return c;
}

Verdict check_lem2_2(const Built& b, bool broken) {
  const DObj &C = b.objs[0], &X = b.objs[1];
  GDimReport g = gdim(C, X);
  ExtInt supX = bounds_of(X).sup, ampC = bounds_of(C).amp;
  std::string data = "sup X = " + supX.to_string() + ", amp C = " + ampC.to_string() + ", " + g.summary();
  if (broken) {
    if (!(supX <= g.value - ExtInt(1))) return fail("sup X > gdim - 1; " + data);
    return pass();
  }
  if (!(supX - ampC <= g.value)) return fail("sup X - amp C > gdim; " + data);
  return pass();
}

Verdict check_prop3_8(const Built& b) {
  const DObj &C = b.objs[0], &X = b.objs[1];
  GDimReport g = gdim(C, X);
  PdReport p = pd_complex(X.X, X.X.hi() + b.R->nvars() + 1);
  std::string data = g.summary() + ", pd = " + p.value.to_string();
  if (!(g.value <= p.value)) return fail("gdim > pd; " + data);
  if (p.value.finite() && g.value != p.value) return fail("pd finite but gdim != pd; " + data);
  return pass();
}

FuzzCase gen_prop3_8(Rng& r) {
  FuzzCase c = random_ring(r);
  c.objs.push_back(random_semidualizing(r));
  c.objs.push_back(r.below(3) ? random_free(r, c.nvars) : random_module(r, c.nvars));
  if (r.below(3) == 0) {
    c = with_nzd(r, c);
    c.objs[1] = {ObjSpec::Kind::Cyclic, r.between(-1, 1), {c.f}};
  }
  return c;
}

Verdict check_ab(const Built& b) {
  const DObj &C = b.objs[0], &X = b.objs[1];
  GDimReport g = gdim(C, X);
  if (!g.value.finite()) return pass();
  ExtInt dR = depth(DObj::module(FPModule::free(b.R, 1))), dX = depth(X);
  if (!g.ab_ok || g.value != dR - dX)
    return fail("gdim != depth R - depth X; " + g.summary() + ", depth R = " + dR.to_string() +
                ", depth X = " + dX.to_string());
  return pass();
}

// P_C(t) I_C(t) = I_R(t) through degree 4.
Verdict check_pi(const Built& b) {
  const int N = 4;
  DObj C = b.objs[0];
  if (b.f && b.objs.size() > 1) {
    RingMap phi = RingMap::surjection(b.R, {*b.f});
    C = base_change(C, phi).result.obj;
  }
  SemidualVerdict v = is_semidualizing(C);
  if (!v.holds()) return fail("generated C not semidualizing: " + v.to_string());
  const QRPtr& R = C.ring();
  ExtInt dC = depth(C), iC = bounds_of(C).inf;
  LaurentPoly P = poincare_series(C, N - static_cast<int>(dC.value()));
  LaurentPoly I = bass_series(C, N - static_cast<int>(iC.value()));
  LaurentPoly IR = bass_series(DObj::module(FPModule::free(R, 1)), N);
  LaurentPoly lhs = (P * I).truncated(N);
  if (!(lhs == IR.truncated(N)))
    return fail("P*I = " + lhs.to_string() + " but I_R = " + IR.truncated(N).to_string());
  return pass();
}

FuzzCase gen_pi(Rng& r) {
  FuzzCase c = random_ring(r);
  c.objs.push_back(random_semidualizing(r));
  if (r.below(2)) {
    c = with_nzd(r, c);
    c.objs.push_back({ObjSpec::Kind::Cyclic, 0, {c.f}});
  }
  return c;
}

// F, G bounded free; Y, Z modules.
Verdict check_stdmorph(const Built& b) {
  const DObj &F = b.objs[0], &G = b.objs[1], &Y = b.objs[2], &Z = b.objs[3];
  auto T = [](const DObj& a, const DObj& c) { return derived_tensor(a, c, kN); };
  auto H = [](const DObj& a, const DObj& c) { return rhom(a, c, kN); };
  if (!agree(T(Y, Z), T(Z, Y))) return fail("commutativity: Y (x) Z vs Z (x) Y");
  Derived fg = T(F, G);
  if (!agree(T(fg.obj, Y), T(F, T(G, Y).obj))) return fail("associativity: (F (x) G) (x) Y vs F (x) (G (x) Y)");
  if (!agree(H(fg.obj, Y), H(F, H(G, Y).obj))) return fail("adjunction: RHom(F (x) G, Y) vs RHom(F, RHom(G, Y))");
  if (!agree(T(H(F, Y).obj, G), H(F, T(Y, G).obj)))
    return fail("tensor evaluation: RHom(F, Y) (x) G vs RHom(F, Y (x) G)");
  DObj D = dualizing_complex(b.R);
  if (!agree(T(F, H(Y, D).obj), H(H(F, Y).obj, D)))
    return fail("Hom evaluation: F (x) RHom(Y, D) vs RHom(RHom(F, Y), D)");
  return pass();
}

FuzzCase gen_stdmorph(Rng& r) {
  FuzzCase c = random_ring(r);
  c.objs.push_back(random_free(r, c.nvars));
  c.objs.push_back(random_free(r, c.nvars));
  c.objs.push_back(random_module(r, c.nvars));
  c.objs.push_back(random_module(r, c.nvars));
  return c;
}

const std::vector<Tag>& tags() {
  static const std::vector<Tag> t{
      {"thm4_2", false, [](Rng& r) { return gen_thm4_2(r, false); },
       [](const Built& b) { return check_thm4_2(b, false); }},
      {"thm4_2c", false, [](Rng& r) { return gen_thm4_2(r, true); },
       [](const Built& b) { return check_thm4_2(b, true); }},
      {"lem2_2", false, gen_c_x, [](const Built& b) { return check_lem2_2(b, false); }},
      {"prop3_8", false, gen_prop3_8, check_prop3_8},
      {"ab", false, gen_c_x, check_ab},
      {"pi", false, gen_pi, check_pi},
      {"stdmorph", false, gen_stdmorph, check_stdmorph},
      {"broken_lem2_2", true, gen_c_x, [](const Built& b) { return check_lem2_2(b, true); }},
  };
  return t;
}

Verdict run_check(const Tag& t, const FuzzCase& c, Field fld) {
  try {
    return t.check(build(c, fld));
  } catch (const std::domain_error& e) {
    return skip(e.what());
  } catch (const std::exception& e) {
    return fail(std::string("exception: ") + e.what());
  }
}

struct Instance {
  FuzzCase c;
  Verdict v;
  int skipped = 0;
};

uint64_t mix(uint64_t seed, const std::string& tag, int i) {
  uint64_t h = 1469598103934665603ull;
  for (char ch : tag) h = (h ^ static_cast<unsigned char>(ch)) * 1099511628211ull;
  return (seed * 0x9E3779B97F4A7C15ull) ^ h ^ (static_cast<uint64_t>(i) << 32);
}

// Shrinks by dropping a generator (of the ring or of an object) or zeroing a shift.
FuzzCase shrink(const Tag& t, FuzzCase c, Field fld, std::string& msg) {
  for (bool progress = true; progress;) {
    progress = false;
    std::vector<FuzzCase> cands;
    for (size_t k = 0; k < c.ring.size(); ++k) {
      FuzzCase d = c;
      d.ring.erase(d.ring.begin() + k);
      cands.push_back(d);
    }
    for (size_t o = 0; o < c.objs.size(); ++o) {
      for (size_t k = 0; k < c.objs[o].gens.size(); ++k) {
        FuzzCase d = c;
        d.objs[o].gens.erase(d.objs[o].gens.begin() + k);
        cands.push_back(d);
      }
      if (c.objs[o].shift) {
        FuzzCase d = c;
        d.objs[o].shift = 0;
        cands.push_back(d);
      }
    }
    for (auto& d : cands) {
      Verdict v = run_check(t, d, fld);
      if (v.status == Status::Fail) {
        c = d;
        msg = v.msg;
        progress = true;
        break;
      }
    }
  }
  return c;
}

}  // namespace

const std::vector<std::string>& fuzz_tags() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (auto& t : tags()) v.push_back(t.name);
    return v;
  }();
  return names;
}

FuzzResult fuzz(const std::string& tag, int count, uint64_t seed, Field fld) {
  const Tag* t = nullptr;
  for (auto& x : tags())
    if (x.name == tag) t = &x;
  if (!t) throw std::invalid_argument("unknown fuzz tag: " + tag);
  const int kAttempts = 200;
  auto inst = parallel_map<Instance>(count, [&](int i) {
    Rng r(mix(seed, tag, i));
    for (int a = 0; a < kAttempts; ++a) {
      FuzzCase c = t->generate(r);
      Verdict v = run_check(*t, c, fld);
      if (v.status != Status::Skip) return Instance{c, v, a};
    }
    return Instance{FuzzCase{}, fail("no applicable instance generated"), kAttempts};
  });
  FuzzResult res;
  res.tag = tag;
  res.count = count;
  res.seed = seed;
  res.mutation = t->mutation;
  for (auto& x : inst) {
    res.skipped += x.skipped;
    res.cases.push_back(x.c);
    if (x.v.status == Status::Pass) {
      ++res.passed;
      continue;
    }
    ++res.failed;
    if (!res.counterexample) {
      res.message = x.v.msg;
      res.counterexample = shrink(*t, x.c, fld, res.message);
    }
  }
  return res;
}

}  // namespace semidual
