#include "doctest.h"
#include "helpers.hpp"
#include "semidual/semidual.hpp"

using namespace th;

namespace {

DObj free1(const QRPtr& R) { return DObj::module(FPModule::free(R, 1)); }

}  // namespace

TEST_CASE("semidualizing verdicts") {
  auto R = qring({"Y", "Z"}, {"Y^2", "Y*Z"});
  CHECK(is_semidualizing(free1(R)).outcome == SemidualVerdict::Outcome::Yes);
  CHECK(is_semidualizing(shift(free1(R), 3)).outcome == SemidualVerdict::Outcome::Yes);
  DObj D = dualizing_complex(R);
  SemidualVerdict vd = is_semidualizing(D);
  CHECK(vd.outcome == SemidualVerdict::Outcome::Yes);
  CHECK(vd.how == "dualizing complex via the cover");
  SemidualVerdict v2 = is_semidualizing(DObj::module(FPModule::free(R, 2)));
  CHECK(v2.outcome == SemidualVerdict::Outcome::No);
  CHECK(v2.witness.find("4 minimal generators") != std::string::npos);
  SemidualVerdict vk = is_semidualizing(DObj::module(residue_field(R)));
  CHECK(!vk.holds());
  // R + R/(Y - 1) over the line: Ext^1 obstructs.
  auto L = qring({"Y"});
  SemidualVerdict v3 = is_semidualizing(DObj::module(direct_sum(FPModule::free(L, 1), cyclic(L, {"Y-1"}))));
  CHECK(!v3.holds());
  CHECK(v3.witness_degree == -1);
}

TEST_CASE("honest semidualizing complex over a Gorenstein ring") {
  auto G = qring({"Y"}, {"Y^2"});
  DObj D = dualizing_complex(G);
  REQUIRE(gorenstein_shift(G).has_value());
  CHECK(*gorenstein_shift(G) == 0);
  auto Dc = as_complex(D);
  REQUIRE(Dc.has_value());
  SemidualVerdict v = is_semidualizing(DObj::honest(*Dc));
  CHECK(v.holds());
  DualizingVerdict dz = is_dualizing(free1(G));
  CHECK(dz.dualizing);
  auto R = qring({"Y", "Z"}, {"Y^2", "Y*Z"});
  CHECK(!gorenstein_shift(R).has_value());
  CHECK(is_dualizing(dualizing_complex(R)).dualizing);
  CHECK(is_dualizing(dualizing_complex(R)).exact);
  CHECK(!is_dualizing(free1(R)).dualizing);
}

TEST_CASE("G-dimension oracles") {
  auto R = qring({"Y", "Z"}, {"Y^2", "Y*Z"});
  DObj D = dualizing_complex(R);
  DObj S = DObj::module(cyclic(R, {"Y"}));
  GDimReport a = gdim(D, S);
  CHECK(a.value == ExtInt(-1));
  CHECK(a.certificate == "exact");
  CHECK(a.ab_ok);
  CHECK(gdim(D, D).value == ExtInt(0));
  GDimReport b = gdim(free1(R), free1(R));
  CHECK(b.value == ExtInt(0));
  CHECK(b.certificate == "exact");
  GDimReport c = gdim(free1(R), DObj::module(residue_field(R)));
  CHECK(c.value.is_pos_inf());
  CHECK(c.certificate == "ab-certified-infinite");
  CHECK(c.witness_degree == -1);
  GDimReport s = gdim(free1(R), S);
  CHECK(s.value.is_pos_inf());
  CHECK(s.certificate == "ab-certified-infinite");
  CHECK(gdim(free1(R), DObj::module(FPModule::zero(R))).value.is_neg_inf());
  // Finite free complexes are reflexive.
  Complex K = koszul2(R, "Y", "Z");
  GDimReport k = gdim(free1(R), DObj::honest(K));
  CHECK(k.certificate == "exact");
  CHECK(k.value == ExtInt(2));
  CHECK(k.ab_ok);
  auto L = qring({"Y"});
  CHECK(gdim(free1(L), DObj::module(cyclic(L, {"Y"}))).value == ExtInt(1));
}

TEST_CASE("biduality over a Gorenstein ring") {
  auto G = qring({"Y"}, {"Y^2"});
  GDimReport r = gdim(free1(G), DObj::module(residue_field(G)));
  CHECK(r.value == ExtInt(0));
  CHECK(r.certificate.rfind("window(", 0) == 0);
  CHECK(r.check_lo <= -2);
  CHECK(r.check_hi >= 2);
  CHECK(is_totally_reflexive(residue_field(G), FPModule::free(G, 1)));
  auto R = qring({"Y", "Z"}, {"Y^2", "Y*Z"});
  CHECK(!is_totally_reflexive(residue_field(R), FPModule::free(R, 1)));
  CHECK(is_totally_reflexive(FPModule::free(R, 2), FPModule::free(R, 1)));
  CHECK_THROWS_AS(is_totally_reflexive(residue_field(R), FPModule::free(R, 2)), std::domain_error);
}

TEST_CASE("dual_into and evaluation") {
  auto R = qring({"Y", "Z"}, {"Y^2", "Y*Z"});
  DObj D = dualizing_complex(R);
  DObj S = DObj::module(cyclic(R, {"Y"}));
  DualInto d = dual_into(D, S);
  CHECK(bounds_of(d.rhom.obj).inf == ExtInt(1));
  CHECK(d.ok);
  DualInto r = dual_into(D, free1(R));
  CHECK(r.ok);
  CHECK(fingerprint(r.rhom) == fingerprint(D));
  EvaluationReport e = evaluation_checks(D, free1(R));
  CHECK(e.tensor_eval);
  CHECK(e.hom_checked);
  CHECK(e.hom_eval);
  EvaluationReport f = evaluation_checks(D, D);
  CHECK(f.tensor_eval);
}
