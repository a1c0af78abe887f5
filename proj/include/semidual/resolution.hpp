#pragma once

#include "semidual/complex.hpp"

namespace semidual {

// Generators of the kernel of A: R^m -> R^r, pruned.
std::vector<Vec> syzygies(const QuotientRing& R, const Mat& A, const std::vector<int>& target_twists,
                          const std::vector<int>& source_twists);

// A free complex F with a chain map eps: F -> Z. eps is a quasi-isomorphism in
// degrees < cutoff, and in all degrees when terminated.
struct Replacement {
  Complex F;
  ChainMap eps;
  bool terminated = false;
  int cutoff = 0;
};

// Killing cycles through degree N, followed by unit-pivot minimization.
Replacement free_replacement(const Complex& Z, int N);
Replacement free_resolution(const FPModule& M, int N);
// Resolution F_0 <- ... <- F_n of M.
Complex minimal_free_resolution(const FPModule& M, int n);

// Cancels unit entries of the differentials; eps (if given) is composed with the inclusion.
void minimize_units(Complex& F, ChainMap* eps = nullptr);

// The same complex viewed over the cover P (relations gain I * e_c).
Complex to_cover(const Complex& Z);
FPModule to_cover(const FPModule& M);

struct PdReport {
  ExtInt value;
  bool terminated = false;     // otherwise `infinite`
  Complex resolution;          // full resolution when terminated, truncation otherwise
  int cutoff = 0;
  int cutoff_rank = 0;         // minimal generators of the syzygy at the cutoff
  std::string certificate;     // terminated | infinite | unterminated
};

// Over a graded-local ring; cutoff = number of cover variables + 1.
PdReport pd(const FPModule& M);
// Projective dimension through explicit termination only; any ring.
PdReport pd_bounded(const Complex& X, int cutoff);
std::vector<int> betti_numbers(const FPModule& M, int n);

}  // namespace semidual
