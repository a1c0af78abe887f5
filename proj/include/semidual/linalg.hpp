#pragma once

#include <optional>
#include <vector>

#include "semidual/ideal.hpp"

namespace semidual {

// Element of R^n; entries are kept as normal forms modulo I.
using Vec = std::vector<Poly>;

// Matrix stored by columns: a map R^cols -> R^rows.
struct Mat {
  int rows = 0;
  std::vector<Vec> cols;

  Mat() = default;
  Mat(int r, int c, const PolyRing* P) : rows(r), cols(c, Vec(r, Poly(P))) {}
  int ncols() const { return static_cast<int>(cols.size()); }
  Poly& at(int r, int c) { return cols[c][r]; }
  const Poly& at(int r, int c) const { return cols[c][r]; }
  bool is_zero() const;
};

Vec vec_zero(const QuotientRing& R, int n);
Vec unit_vec(const QuotientRing& R, int n, int i);
bool vec_is_zero(const Vec& v);
Vec vec_add(const QuotientRing& R, const Vec& a, const Vec& b);
Vec vec_sub(const QuotientRing& R, const Vec& a, const Vec& b);
Vec vec_scale(const QuotientRing& R, const Vec& a, const Poly& f);
Vec vec_neg(const Vec& a);
Vec mat_vec(const QuotientRing& R, const Mat& A, const Vec& v);
Mat mat_mul(const QuotientRing& R, const Mat& A, const Mat& B);
Mat mat_zero(const QuotientRing& R, int rows, int cols);
Mat mat_identity(const QuotientRing& R, int n);
Mat mat_neg(const Mat& A);
Mat mat_reduce(const QuotientRing& R, Mat A);
// Weighted degree of the leading term of v with generator twists; INT_MIN for zero.
int vec_degree(const Vec& v, const std::vector<int>& twists);
bool vec_homogeneous(const Vec& v, const std::vector<int>& twists);
std::string vec_string(const Vec& v);

// Groebner data of span(gens) + I * R^n inside the cover, for membership tests.
class Submodule {
 public:
  Submodule(const QuotientRing& R, int n, std::vector<int> twists, const std::vector<Vec>& gens);
  bool contains(const Vec& v) const;
  Vec reduce(const Vec& v) const;
  // Adds a generator and recompletes.
  void add(const Vec& v);
  // True when the quotient R^n / span is zero.
  bool is_everything() const;
  const ModuleGB& gb() const { return gb_; }
  int rank() const { return n_; }

 private:
  const QuotientRing* R_;
  int n_;
  ModuleGB gb_;
};

// Generators of { v in R^m : A v in span(B) } where A: R^m -> R^r.
std::vector<Vec> kernel_mod(const QuotientRing& R, const Mat& A, const std::vector<Vec>& B,
                            const std::vector<int>& target_twists, const std::vector<int>& source_twists);
// Some c with A c = b modulo span(B), if one exists.
std::optional<Vec> solve_mod(const QuotientRing& R, const Mat& A, const Vec& b, const std::vector<Vec>& B,
                             const std::vector<int>& target_twists, const std::vector<int>& source_twists);
// Greedy choice of generators of span(cands) modulo span(base): candidates are
// scanned by increasing degree and kept when not already in the span. Minimal
// in the graded case. Returns indices into cands.
std::vector<int> prune_generators(const QuotientRing& R, int n, const std::vector<int>& twists,
                                  const std::vector<Vec>& cands, const std::vector<Vec>& base);

}  // namespace semidual
