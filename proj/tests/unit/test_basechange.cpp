#include "doctest.h"
#include "helpers.hpp"
#include "semidual/basechange.hpp"

using namespace th;

namespace {

DObj free1(const QRPtr& R) { return DObj::module(FPModule::free(R, 1)); }

std::vector<Poly> polys(const QRPtr& R, std::vector<std::string> v) {
  std::vector<Poly> out;
  for (auto& s : v) out.push_back(R->parse(s));
  return out;
}

RingMap ex212() {
  auto P = qring({"Y", "Z"});
  return RingMap::surjection(P, polys(P, {"Y^2-Y", "Y*Z-Z"}), {cover_ideal(P, {"Y", "Z"}), cover_ideal(P, {"Y-1", "Z"})});
}

}  // namespace

TEST_CASE("projective dimension of maps") {
  CHECK(map_pd(ex212()).value == ExtInt(2));
  auto R = qring({"Y", "Z"}, {"Y^2", "Y*Z"});
  CHECK(map_pd(RingMap::identity(R)).value == ExtInt(0));
  auto A = qring({"X", "Y", "Z"}, {"Y^2", "Y*Z"});
  CHECK(map_pd(RingMap::surjection(A, polys(A, {"X"}))).value == ExtInt(1));
  CHECK(map_pd(RingMap::surjection(R, polys(R, {"Y"}))).value.is_pos_inf());
}

TEST_CASE("grade profiles") {
  GradeProfile g = grade_profile(ex212());
  REQUIRE(g.grades.size() == 2);
  CHECK(g.grades[0].grade == ExtInt(2));
  CHECK(g.grades[1].grade == ExtInt(1));
  CHECK(g.cm);
  CHECK(!g.constant_grade);
  auto A = qring({"X", "Y", "Z"}, {"Y^2", "Y*Z"});
  GradeProfile h = grade_profile(RingMap::surjection(A, polys(A, {"X"})));
  CHECK(h.cm);
  CHECK(h.constant_grade);
  CHECK(h.gorenstein);
  CHECK(indices(h.ext) == std::vector<int>{-1});
  GradeProfile id = grade_profile(RingMap::identity(A));
  CHECK(indices(id.ext) == std::vector<int>{0});
  CHECK(id.gorenstein);
  auto R = qring({"Y", "Z"}, {"Y^2", "Y*Z"});
  CHECK_THROWS_AS(grade_profile(RingMap::surjection(R, polys(R, {"Y"}))), std::domain_error);
  // Non-Gorenstein CM quotient: Ext^2 of k[Y,Z]/(Y,Z)^2 needs two generators.
  auto P = qring({"Y", "Z"});
  GradeProfile q = grade_profile(RingMap::surjection(P, polys(P, {"Y^2", "Y*Z", "Z^2"})));
  CHECK(q.cm);
  CHECK(!q.gorenstein);
}

TEST_CASE("mSpec hypothesis") {
  auto R = qring({"A", "B", "W"}, {"A^2", "A*B", "B^2"});
  CHECK(mspec_hypothesis(RingMap::surjection(R, polys(R, {"W-1"}))) == "m-Spec not covered");
  CHECK(mspec_hypothesis(RingMap::surjection(R, polys(R, {"W"}))) == "certified");
  CHECK(mspec_hypothesis(ex212()) == "hypothesis-unverified");
  CHECK(mspec_hypothesis(RingMap::identity(R)) == "certified");
}

TEST_CASE("base change") {
  auto R = qring({"Y", "Z"}, {"Y^2", "Y*Z"});
  auto A = qring({"X", "Y", "Z"}, {"Y^2", "Y*Z"});
  RingMap phi = RingMap::surjection(A, polys(A, {"X"}));
  ChangeReport r = base_change(free1(A), phi);
  CHECK(r.result.w.is_exact());
  CHECK(fingerprint(r.result) == fingerprint(free1(phi.S)));
  CHECK(r.inherited_semidualizing);
  ChangeReport d = base_change(dualizing_complex(A), phi);
  CHECK(d.result.obj.is_dual());
  CHECK(d.target.inf == ExtInt(1));
  CHECK(d.source.inf == ExtInt(1));
  CHECK(d.inf_ok);
  CHECK(d.sup_ok);
  // Sigma D_S: same fingerprint up to the shift.
  CHECK(fingerprint(d.result.obj) == fingerprint(shift(dualizing_complex(phi.S), 1)));
  auto L = qring({"Y"});
  RingMap toS = RingMap::surjection(L, polys(L, {"Y"}));
  DObj P3 = DObj::module(direct_sum(FPModule::free(L, 1), cyclic(L, {"Y-1"})));
  CHECK(!is_semidualizing(P3).holds());
  ChangeReport p = base_change(P3, toS);
  CHECK(fingerprint(p.result) == fingerprint(free1(toS.S)));
  CHECK(is_semidualizing(p.result.obj).holds());
  // Neither pd finite: window-tagged.
  ChangeReport w = base_change(DObj::module(residue_field(R)), RingMap::surjection(R, polys(R, {"Y"})), 4);
  CHECK(!w.result.w.is_exact());
  CHECK(w.result.w.valid_hi == 3);
}

TEST_CASE("cobase change") {
  auto A = qring({"X", "Y", "Z"}, {"Y^2", "Y*Z"});
  DObj X = DObj::module(cyclic(A, {"Y"}));
  ChangeReport id = cobase_change(X, RingMap::identity(A));
  CHECK(fingerprint(id.result) == fingerprint(X));
  RingMap phi = RingMap::surjection(A, polys(A, {"X"}));
  ChangeReport d = cobase_change(dualizing_complex(A), phi);
  CHECK(d.target.inf == ExtInt(0));
  CHECK(d.inf_ok);
  CHECK(d.sup_ok);
  CHECK(fingerprint(d.result) == fingerprint(dualizing_complex(phi.S)));
  RingMap e = ex212();
  ChangeReport h = cobase_change(free1(e.R), e);
  CHECK(h.target.inf == ExtInt(-2));
  CHECK(h.target.sup == ExtInt(-1));
  CHECK_THROWS_AS(cobase_change(X, RingMap::surjection(A, polys(A, {"Y"}))), std::domain_error);
}

TEST_CASE("descent of G-dimension") {
  auto A = qring({"X", "Y", "Z"}, {"Y^2", "Y*Z"});
  RingMap phi = RingMap::surjection(A, polys(A, {"X"}));
  DObj K = DObj::honest(koszul2(A, "Y", "Z"));
  DescentReport f = descent_gdim(free1(A), K, phi);
  CHECK(f.relation_holds);
  CHECK(f.hypothesis == "certified");
  DescentReport t = descent_gdim(dualizing_complex(A), DObj::module(cyclic(A, {"Y"})), phi,
                                 DescentReport::Theorem::CobaseChange);
  CHECK(t.source.value == ExtInt(-1));
  CHECK(t.target.value == ExtInt(-1));
  CHECK(t.relation_holds);
  auto R = qring({"A", "B", "W"}, {"A^2", "A*B", "B^2"});
  DObj X = DObj::module(direct_sum(residue_field(R), FPModule::free(R, 1)));
  DescentReport e = descent_gdim(free1(R), X, RingMap::surjection(R, polys(R, {"W-1"})));
  CHECK(e.hypothesis == "m-Spec not covered");
  CHECK(e.source.value.is_pos_inf());
  CHECK(e.source.certificate == "ab-certified-infinite");
  CHECK(e.source.witness_degree == -2);
  CHECK(e.target.value == ExtInt(0));
  CHECK(!e.relation_holds);
}

TEST_CASE("series transfer") {
  auto A = qring({"X", "Y", "Z"}, {"Y^2", "Y*Z"});
  SeriesTransfer id = series_transfer(free1(A), RingMap::identity(A), 4);
  CHECK(id.Iphi == LaurentPoly{{{0, 1}}});
  CHECK(id.poincare_ok);
  CHECK(id.bass_ok);
  RingMap phi = RingMap::surjection(A, polys(A, {"X"}));
  SeriesTransfer d = series_transfer(dualizing_complex(A), phi, 4);
  CHECK(d.poincare_ok);
  CHECK(d.bass_ok);
  CHECK(d.Iphi == LaurentPoly{{{-1, 1}}});
  SeriesTransfer r = series_transfer(free1(A), phi, 4);
  CHECK(r.bass_ok);
  CHECK(r.poincare_ok);
}

TEST_CASE("uniqueness of base change") {
  auto P = qring({"Y", "Z"});
  RingMap phi = RingMap::surjection(P, polys(P, {"Y", "Z"}));
  DObj C = DObj::module(cyclic(P, {"Y"})), Cp = DObj::module(cyclic(P, {"Z"}));
  UniquenessReport u = transfer_uniqueness(C, Cp, phi);
  CHECK(u.targets_agree);
  CHECK(!u.sources_agree);
  CHECK(u.failure_demonstrated);
  UniquenessReport same = transfer_uniqueness(C, C, phi);
  CHECK(same.targets_agree);
  CHECK(same.sources_agree);
  auto R = qring({"Y", "Z"}, {"Y^2", "Y*Z"});
  RingMap id = RingMap::identity(R);
  UniquenessReport rd = transfer_uniqueness(free1(R), dualizing_complex(R), id);
  CHECK(!rd.targets_agree);
  auto T2 = qring({"Y", "Z"}, {"Y^2-Y"});
  CHECK_THROWS_AS(transfer_uniqueness(free1(T2), free1(T2), RingMap::identity(T2)), std::domain_error);
  auto F = qring({"T"}, {"T^2-T"});
  CHECK(transfer_uniqueness(free1(F), free1(F), RingMap::identity(F)).sources_agree);
}

TEST_CASE("module-finite maps") {
  Field f{32003};
  const PolyRing* P = PolyRing::make({"X"}, f, {2});
  const PolyRing* Q = PolyRing::make({"X", "Y"}, f, {2, 1});
  QRPtr R = QuotientRing::make(P, std::vector<Poly>{});
  QRPtr S = QuotientRing::make(Q, {parse_poly(Q, "Y^2-X")});
  std::vector<Poly> basis{parse_poly(Q, "1"), parse_poly(Q, "Y")};
  RingMap phi = RingMap::module_finite(R, S, FPModule::free(R, 2, {0, 1}), basis);
  CHECK(phi.verification.rfind("verified", 0) == 0);
  CHECK(map_pd(phi).value == ExtInt(0));
  CHECK(mspec_hypothesis(phi) == "certified");
  CHECK_THROWS_AS(RingMap::module_finite(R, S, FPModule::free(R, 1, {0}), {basis[0]}), std::invalid_argument);
  FPModule bad = FPModule::free(R, 2, {0, 1});
  bad.rels.push_back({R->zero(), R->parse("X")});
  CHECK_THROWS_AS(RingMap::module_finite(R, S, bad, basis), std::invalid_argument);
  // R/(X) base changes to S/(X) = k[Y]/(Y^2).
  ChangeReport b = base_change(DObj::module(cyclic(R, {"X"})), phi);
  auto H = homology_of(b.result);
  REQUIRE(H.size() == 1);
  CHECK(vector_space_dim(H.at(0)) == 2);
  // The cobase change of D_R is dualizing for S.
  ChangeReport c = cobase_change(dualizing_complex(R), phi);
  CHECK(bounds_of(c.result.obj).amp == ExtInt(0));
  CHECK(bounds_of(c.result.obj).inf == ExtInt(1));
}
