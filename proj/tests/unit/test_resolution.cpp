#include "doctest.h"
#include "helpers.hpp"

using namespace th;

namespace {

void check_resolution(const FPModule& M, int n) {
  Replacement r = free_resolution(M, n);
  r.F.validate();
  Complex Mc = Complex::concentrated(M, 0);
  validate_chain_map(r.F, Mc, r.eps);
  Complex C = cone(r.F, Mc, r.eps);
  for (int i = C.lo; i < n; ++i) CHECK(homology(C, i).module.ngens == 0);
  if (M.ring->graded_local())
    for (int i = r.F.lo + 1; i <= r.F.hi(); ++i)
      for (auto& col : r.F.diff(i).cols)
        for (auto& p : col) CHECK((p.is_zero() || p.min_degree() > 0));
}

int binom(int n, int k) { return k < 0 || k > n ? 0 : (k == 0 ? 1 : binom(n - 1, k - 1) * n / k); }

}  // namespace

TEST_CASE("minimal resolutions") {
  auto P = qring({"Y", "Z"});
  CHECK(ranks(minimal_free_resolution(cyclic(P, {"Y", "Z"}), 3), 0, 3) == std::vector<int>{1, 2, 1, 0});
  auto Rr = qring({"Y", "Z"}, {"Y^2", "Y*Z"});
  FPModule Rp = cyclic(P, {"Y^2", "Y*Z"});
  CHECK(ranks(minimal_free_resolution(Rp, 3), 0, 3) == std::vector<int>{1, 2, 1, 0});
  auto A = qring({"X", "Y", "Z"}, {"Y^2", "Y*Z"});
  FPModule S = cyclic(A, {"X"});
  CHECK(ranks(minimal_free_resolution(S, 2), 0, 2) == std::vector<int>{1, 1, 0});
  CHECK(betti_numbers(cyclic(Rr, {"Y"}), 2) == std::vector<int>{1, 1, 2});
  auto H = qring({"Y"}, {"Y^2"});
  CHECK(betti_numbers(cyclic(H, {"Y"}), 5) == std::vector<int>{1, 1, 1, 1, 1, 1});
  CHECK(betti_numbers(cyclic(Rr, {"Y", "Z"}), 5) == std::vector<int>{1, 2, 3, 5, 8, 13});
  check_resolution(cyclic(Rr, {"Y"}), 4);
  check_resolution(cyclic(Rr, {"Y", "Z"}), 4);
  check_resolution(S, 3);
  check_resolution(direct_sum(cyclic(Rr, {"Z"}, 1), FPModule::free(Rr, 1, {0})), 3);
}

TEST_CASE("free modules resolve to themselves") {
  auto P = qring({"Y", "Z"});
  Replacement r = free_resolution(FPModule::free(P, 2, {0, 3}), 4);
  CHECK(r.terminated);
  CHECK(ranks(r.F, 0, 1) == std::vector<int>{2, 0});
  CHECK(r.F.twists(0) == std::vector<int>{0, 3});
}

TEST_CASE("projective dimension") {
  auto P = qring({"Y"});
  PdReport a = pd(cyclic(P, {"Y"}));
  CHECK(a.value == ExtInt(1));
  CHECK(a.certificate == "terminated");
  auto R = qring({"Y", "Z"}, {"Y^2", "Y*Z"});
  PdReport b = pd(cyclic(R, {"Y", "Z"}));
  CHECK(b.value.is_pos_inf());
  CHECK(b.certificate == "infinite");
  CHECK(b.cutoff_rank > 0);
  auto A = qring({"X", "Y", "Z"}, {"Y^2", "Y*Z"});
  CHECK(pd(cyclic(A, {"X"})).value == ExtInt(1));
  auto T = qring({"T"}, {"T^2-T"});
  CHECK_THROWS(pd(cyclic(T, {"T"})));
}

TEST_CASE("Betti numbers of the residue field of a polynomial ring are binomial") {
  std::vector<std::string> all{"A", "B", "C", "D"};
  for (int v = 1; v <= 4; ++v) {
    std::vector<std::string> vars(all.begin(), all.begin() + v);
    auto P = qring(vars);
    auto b = betti_numbers(cyclic(P, vars), v + 1);
    for (int i = 0; i <= v + 1; ++i) CHECK(b[i] == binom(v, i));
  }
}

TEST_CASE("replacement of a complex with nonfree terms") {
  auto R = qring({"Y", "Z"}, {"Y^2", "Y*Z"});
  auto P = qring({"Y"});
  // cone of R -> R/(Y) + R has homology R/(Y) in degree 0
  Complex src = Complex::concentrated(FPModule::free(P, 1), 0);
  Complex tgt = Complex::concentrated(direct_sum(cyclic(P, {"Y"}), FPModule::free(P, 1)), 0);
  ChainMap a{{{0, mat(P, {{"1"}, {"1"}})}}};
  validate_chain_map(src, tgt, a);
  Complex X = cone(src, tgt, a);
  Replacement r = free_replacement(X, 4);
  CHECK(r.terminated);
  CHECK(is_exact(cone(r.F, X, r.eps)));
  CHECK(fingerprint(r.F) == fingerprint(X));
  Complex Xc = to_cover(Complex::concentrated(cyclic(R, {"Y"}), 0));
  // R/(Y) over the cover is P/(Y).
  CHECK(pd_bounded(Xc, 4).value == ExtInt(1));
  CHECK(pd_bounded(to_cover(Complex::concentrated(FPModule::free(R, 1), 0)), 4).value == ExtInt(2));
}
