#pragma once

#include <string>
#include <vector>

#include "semidual/linalg.hpp"

namespace semidual {

// R^ngens / span(rels); generator i sits in degree twists[i].
struct FPModule {
  QRPtr ring;
  int ngens = 0;
  std::vector<int> twists;
  std::vector<Vec> rels;

  static FPModule free(const QRPtr& R, int n, std::vector<int> twists = {});
  // R / (gens), the generator in degree `twist`.
  static FPModule cyclic(const QRPtr& R, const std::vector<Poly>& gens, int twist = 0);
  static FPModule zero(const QRPtr& R) { return free(R, 0); }

  bool is_free() const { return rels.empty(); }
  bool homogeneous() const;
  bool is_zero() const;
  std::string to_string() const;
};

FPModule direct_sum(const FPModule& a, const FPModule& b);
FPModule twist_module(const FPModule& M, int t);
// Same module read over another ring with the same cover (relations reduced).
FPModule change_ring(const FPModule& M, const QRPtr& S);
// Annihilator as an ideal of the cover containing I.
Ideal annihilator(const FPModule& M);
// Presentation on a pruned generating set with a pruned relation set.
FPModule minimize(const FPModule& M);
// dim_k M_d for d in [d0, d1) in the graded case.
std::vector<long> hilbert_function(const FPModule& M, int d0, int d1);
// k-dimension when finite, otherwise -1.
long vector_space_dim(const FPModule& M);
int krull_dim(const FPModule& M);
// Fitting ideal Fitt_j(M) in the cover (contains I).
Ideal fitting_ideal(const FPModule& M, int j);
// Minimal number of generators of M at the prime q.
int local_num_gens(const FPModule& M, const Ideal& q);

}  // namespace semidual
