#include "doctest.h"
#include "helpers.hpp"
#include "semidual/derived.hpp"

using namespace th;

namespace {

LaurentPoly series(std::map<int, long> c) { return LaurentPoly{c}; }

}  // namespace

TEST_CASE("Koszul depth") {
  auto P = qring({"Y", "Z"});
  CHECK(depth(FPModule::free(P, 1)) == ExtInt(2));
  auto R = qring({"Y", "Z"}, {"Y^2", "Y*Z"});
  CHECK(depth(FPModule::free(R, 1)) == ExtInt(0));
  CHECK(depth(cyclic(R, {"Y"})) == ExtInt(1));
  CHECK(depth(FPModule::zero(R)).is_pos_inf());
  Complex X = Complex::concentrated(cyclic(R, {"Y"}), 0);
  for (int n : {-2, 1, 3}) CHECK(depth(DObj::honest(shift(X, n))) == ExtInt(1 - n));
  CHECK(koszul(P, {P->parse("Y"), P->parse("Z")}).summary() == "[0]1 <- [1]2 <- [2]1");
}

TEST_CASE("dualizing complexes over the cover") {
  auto P = qring({"Y", "Z"});
  Bounds b = bounds_of(dualizing_complex(P));
  CHECK(b.inf == ExtInt(2));
  CHECK(b.amp == ExtInt(0));
  auto R = qring({"Y", "Z"}, {"Y^2", "Y*Z"});
  DObj D = dualizing_complex(R);
  Bounds bd = bounds_of(D);
  CHECK(bd.inf == ExtInt(0));
  CHECK(bd.sup == ExtInt(1));
  CHECK(bd.amp == ExtInt(1));
  CHECK(depth(D) == ExtInt(0));
  CHECK(dualized_residue_shift(R, D.s) == 0);
  auto C = qring({"Y", "Z"}, {"Y^2"});
  CHECK(bounds_of(dualizing_complex(C)).amp == ExtInt(0));
  CHECK(bounds_of(dualizing_complex(C)).inf == ExtInt(1));
  // Localized at n = (Y, Z) both homology modules survive.
  Bounds ln = localized_bounds(homology_of(D), cover_ideal(R, {"Y", "Z"}));
  CHECK(ln.amp == ExtInt(1));
}

TEST_CASE("rhom and Ext") {
  auto R = qring({"Y", "Z"}, {"Y^2", "Y*Z"});
  DObj Rr = DObj::module(FPModule::free(R, 1));
  DObj X = DObj::module(cyclic(R, {"Y"}));
  Derived h = rhom(Rr, X, 4);
  CHECK(h.w.is_exact());
  CHECK(fingerprint(homology_of(h), true) == fingerprint(homology_of(X), true));
  DObj k = DObj::module(residue_field(R));
  Derived e = rhom(k, Rr, 5);
  CHECK(!e.w.is_exact());
  auto H = homology_of(e);
  CHECK(H.count(-1) == 1);
  // RHom(S, R) for S = R/((Y, Z) meet (Y - 1)) over the plane.
  auto P = qring({"Y", "Z"});
  DObj S = DObj::module(cyclic(P, {"Y^2-Y", "Y*Z-Z"}));
  Derived rs = rhom(S, DObj::module(FPModule::free(P, 1)), 4);
  CHECK(rs.w.is_exact());
  CHECK(indices(homology_of(rs)) == std::vector<int>{-2, -1});
  auto HS = homology_of(rs);
  CHECK(localized_bounds(HS, cover_ideal(P, {"Y", "Z"})).inf == ExtInt(-2));
  CHECK(localized_bounds(HS, cover_ideal(P, {"Y-1", "Z"})).inf == ExtInt(-1));
}

TEST_CASE("duality calculus agrees with direct computation") {
  auto R = qring({"Y", "Z"}, {"Y^2"});
  DObj D = dualizing_complex(R);
  Complex w = *as_complex(D);
  REQUIRE(w.lo == 1);
  DObj Dh = DObj::honest(w);
  DObj X = DObj::module(cyclic(R, {"Y", "Z"}));
  DObj M = DObj::module(cyclic(R, {"Z"}));
  // RHom(X, D) computed through the cover and directly.
  auto a = homology_of(rhom(X, D, 6));
  auto b = homology_of(rhom(X, Dh, 8));
  CHECK(fingerprint(a, true) == fingerprint(b, true));
  auto c = homology_of(rhom(M, D, 6));
  auto d = homology_of(rhom(M, Dh, 8));
  CHECK(fingerprint(c, true) == fingerprint(d, true));
  // Betti numbers of D two ways.
  CHECK(poincare_series(D, 4) == poincare_series(Dh, 4));
  CHECK(bass_series(D, 4) == bass_series(Dh, 4));
}

TEST_CASE("derived tensor") {
  auto P = qring({"Y"});
  DObj Rr = DObj::module(FPModule::free(P, 1));
  DObj X = DObj::module(cyclic(P, {"Y"}));
  CHECK(fingerprint(homology_of(derived_tensor(X, Rr, 3)), true) == fingerprint(homology_of(X), true));
  Complex src = Complex::concentrated(FPModule::free(P, 1), 0);
  Complex tgt = Complex::concentrated(direct_sum(cyclic(P, {"Y"}), FPModule::free(P, 1)), 0);
  Complex X2 = cone(src, tgt, ChainMap{{{0, mat(P, {{"1"}, {"1"}})}}});
  CHECK(!all_homology(X2).empty());
  Derived t = derived_tensor(DObj::honest(X2), DObj::module(cyclic(P, {"Y-1"})), 4);
  CHECK(t.w.is_exact());
  CHECK(homology_of(t).empty());
  auto A = qring({"X", "Y", "Z"}, {"Y^2", "Y*Z"});
  // Semilocal at m = (X, Y), n = (Y, Z), where D is normalized with s = 2.
  DObj D2 = DObj::dual(Complex::concentrated(FPModule::free(A, 1), 0), 2);
  Derived ds = derived_tensor(D2, DObj::module(cyclic(A, {"X"})), 4);
  std::vector<Ideal> maxes{cover_ideal(A, {"X", "Y"}), cover_ideal(A, {"Y", "Z"})};
  CHECK(semilocal_bounds(homology_of(D2), maxes).amp == ExtInt(1));
  CHECK(semilocal_bounds(homology_of(D2), maxes).inf == ExtInt(0));
  Bounds b = semilocal_bounds(homology_of(ds), maxes);
  CHECK(b.inf == ExtInt(1));
  CHECK(b.amp == ExtInt(0));
}

TEST_CASE("Poincare and Bass series") {
  auto P = qring({"Y", "Z"});
  CHECK(poincare_series(DObj::module(residue_field(P)), 4) == series({{0, 1}, {1, 2}, {2, 1}}));
  CHECK(bass_series(DObj::module(FPModule::free(P, 1)), 4) == series({{2, 1}}));
  auto H = qring({"Y"}, {"Y^2"});
  CHECK(bass_series(DObj::module(FPModule::free(H, 1)), 4) == series({{0, 1}}));
  CHECK(series({{0, 1}, {2, 3}}).to_string() == "1*t^0 + 3*t^2");
  auto R = qring({"Y", "Z"}, {"Y^2", "Y*Z"});
  DObj D = dualizing_complex(R);
  LaurentPoly IR = bass_series(DObj::module(FPModule::free(R, 1)), 4);
  CHECK((poincare_series(D, 4) * bass_series(D, 4)).truncated(4) == IR);
}
