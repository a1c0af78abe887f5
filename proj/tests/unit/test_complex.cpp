#include "doctest.h"
#include "helpers.hpp"

using namespace th;

TEST_CASE("syzygies") {
  auto R = qring({"Y", "Z"}, {"Y^2", "Y*Z"});
  auto K = syzygies(*R, mat(R, {{"Y"}}), {0}, {1});
  REQUIRE(K.size() == 2);
  CHECK(K[0][0].to_string() == "Z");
  CHECK(K[1][0].to_string() == "Y");
  CHECK(syzygies(*R, mat_identity(*R, 2), {0, 0}, {0, 0}).empty());
  auto P = qring({"Y", "Z"});
  auto S = syzygies(*P, mat(P, {{"Y", "Z"}}), {0}, {1, 1});
  REQUIRE(S.size() == 1);
  CHECK(vec_string(S[0]) == vec_string(vec_scale(*P, Vec{P->parse("Z"), P->parse("-Y")}, S[0][0].lc() == P->cover()->scalar(1) ? P->one() : P->parse("-1"))));
}

TEST_CASE("finitely presented modules") {
  auto R = qring({"Y", "Z"}, {"Y^2", "Y*Z"});
  FPModule k = cyclic(R, {"Y", "Z"});
  CHECK(annihilator(k) == cover_ideal(R, {"Y", "Z"}));
  CHECK(vector_space_dim(k) == 1);
  CHECK(krull_dim(FPModule::free(R, 1)) == 1);
  CHECK(vector_space_dim(FPModule::free(R, 1)) == -1);
  // (Y) = R / Ann(Y) is one-dimensional.
  FPModule M = FPModule::free(R, 2, {0, 0});
  M.rels.push_back(Vec{R->one(), R->parse("-1")});
  CHECK(minimize(M).ngens == 1);
  CHECK(hilbert_function(FPModule::free(R, 1), 0, 4) == std::vector<long>{1, 2, 1, 1});
  CHECK(local_num_gens(direct_sum(k, k), cover_ideal(R, {"Y", "Z"})) == 2);
  CHECK(local_num_gens(k, cover_ideal(R, {"Y", "Z-1"})) == 0);
}

TEST_CASE("Koszul homology") {
  auto P = qring({"Y", "Z"});
  Complex K = koszul2(P, "Y", "Z");
  K.validate();
  auto H = all_homology(K);
  CHECK(indices(H) == std::vector<int>{0});
  CHECK(annihilator(H.at(0)) == cover_ideal(P, {"Y", "Z"}));
  auto R = qring({"Y", "Z"}, {"Y^2", "Y*Z"});
  Complex KR = koszul2(R, "Y", "Z");
  KR.validate();
  Homology h2 = homology(KR, 2);
  CHECK(minimize(h2.module).ngens == 1);
  CHECK(vector_space_dim(h2.module) == 1);
  CHECK(h2.cycles[0][0].to_string() == "Y");
}

TEST_CASE("bounds and shifts") {
  auto P = qring({"Y", "Z"});
  Bounds z = inf_sup_amp(Complex::zero(P));
  CHECK(z.inf.is_pos_inf());
  CHECK(z.sup.is_neg_inf());
  CHECK(z.amp.is_neg_inf());
  Complex K = koszul2(P, "Y", "Z");
  for (int n : {-3, 0, 2}) {
    Complex S = shift(K, n);
    S.validate();
    Bounds b = inf_sup_amp(S);
    CHECK(b.inf == ExtInt(n));
    CHECK(b.sup == ExtInt(n));
    CHECK(fingerprint(shift(S, -n)) == fingerprint(K));
  }
}

TEST_CASE("hom and tensor complexes") {
  auto P = qring({"Y", "Z"});
  Complex K = koszul2(P, "Y", "Z");
  Complex Rc = Complex::concentrated(FPModule::free(P, 1), 0);
  Complex HK = hom(Rc, K);
  HK.validate();
  CHECK(fingerprint(HK) == fingerprint(K));
  Complex T = tensor(K, Rc);
  T.validate();
  CHECK(fingerprint(T) == fingerprint(K));
  Complex D = hom(K, Rc);
  D.validate();
  auto H = all_homology(D);
  CHECK(indices(H) == std::vector<int>{-2});
  CHECK(annihilator(H.at(-2)) == cover_ideal(P, {"Y", "Z"}));

  auto A = qring({"Y"});
  FPModule k = cyclic(A, {"Y"});
  Complex F = free_resolution(k, 3).F;
  Complex Tor = tensor(F, Complex::concentrated(k, 0));
  Tor.validate();
  auto HT = all_homology(Tor);
  CHECK(indices(HT) == std::vector<int>{0, 1});
  for (auto& [i, M] : HT) CHECK(vector_space_dim(M) == 1);
}

TEST_CASE("mapping cones") {
  auto P = qring({"Y"});
  Complex Rc = Complex::concentrated(FPModule::free(P, 1), 0);
  ChainMap id{{{0, mat_identity(*P, 1)}}};
  validate_chain_map(Rc, Rc, id);
  CHECK(is_exact(cone(Rc, Rc, id)));
  ChainMap zero{};
  Complex C = cone(Rc, Rc, zero);
  C.validate();
  auto H = all_homology(C);
  CHECK(indices(H) == std::vector<int>{0, 1});
  FPModule k = cyclic(P, {"Y"});
  Replacement r = free_resolution(k, 3);
  Complex kc = Complex::concentrated(k, 0);
  validate_chain_map(r.F, kc, r.eps);
  CHECK(is_exact(cone(r.F, kc, r.eps)));
  ChainMap bad{{{0, mat(P, {{"Y"}})}}};
  CHECK_THROWS(validate_chain_map(Complex::concentrated(k, 0), Complex::concentrated(FPModule::free(P, 1), 0), bad));
}

TEST_CASE("fingerprints separate R/(Y) and R/(Z)") {
  auto R = qring({"Y", "Z"});
  Complex C = Complex::concentrated(cyclic(R, {"Y"}), 0);
  Complex C2 = Complex::concentrated(cyclic(R, {"Z"}), 0);
  Fingerprint a = fingerprint(C), b = fingerprint(C2);
  CHECK(a[0].hilbert == b[0].hilbert);
  CHECK(a[0].ann != b[0].ann);
  CHECK(a != b);
}

TEST_CASE("localized bounds via supports") {
  auto R = qring({"Y", "Z"}, {"Y^2-Y", "Y*Z-Z"});
  Complex X = direct_sum(Complex::concentrated(cyclic(R, {"Y", "Z"}), 0),
                         Complex::concentrated(cyclic(R, {"Y-1"}), 1));
  Bounds b1 = localized_bounds(X, cover_ideal(R, {"Y", "Z"}));
  Bounds b2 = localized_bounds(X, cover_ideal(R, {"Y-1", "Z"}));
  CHECK(b1.inf == ExtInt(0));
  CHECK(b1.sup == ExtInt(0));
  CHECK(b2.inf == ExtInt(1));
  CHECK(inf_sup_amp(X).amp == ExtInt(1));
  auto H = all_homology(X);
  auto m = cover_ideal(R, {"Y", "Z"});
  CHECK(local_fingerprints_equal(local_fingerprint(H, m), local_fingerprint(H, m), m));
}
