#pragma once

#include <climits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semidual/resolution.hpp"

namespace semidual {

// Which homological degrees of a derived result are claimed.
struct Window {
  enum class Tag { FinitePd, AbWindow, User };
  Tag tag = Tag::FinitePd;
  int N = 0;
  int valid_lo = INT_MIN;  // degrees in [valid_lo, valid_hi] are correct
  int valid_hi = INT_MAX;

  static Window exact() { return {}; }
  bool is_exact() const { return valid_lo == INT_MIN && valid_hi == INT_MAX; }
  bool covers(int i) const { return i >= valid_lo && i <= valid_hi; }
  std::string tag_name() const;
  std::string to_string() const;
  Window meet(const Window& o) const;
};

// An object of the derived category of R. Either an actual complex over R, or
// D(W) = RHom_R(W, D) for the dualizing complex D = Sigma^s Hom_P(F, P), where
// F resolves R over the cover P. D(W) is modelled over P as Sigma^s Hom_P(Q, P)
// with Q a P-free resolution of W.
struct DObj {
  enum class Kind { Honest, Dual };
  Kind kind = Kind::Honest;
  Complex X;  // the complex, or W
  int s = 0;

  static DObj honest(Complex X) { return {Kind::Honest, std::move(X), 0}; }
  static DObj dual(Complex W, int s) { return {Kind::Dual, std::move(W), s}; }
  static DObj module(const FPModule& M, int i = 0) { return honest(Complex::concentrated(M, i)); }
  const QRPtr& ring() const { return X.ring; }
  bool is_dual() const { return kind == Kind::Dual; }
  std::string describe() const;
};

struct Derived {
  DObj obj;
  Window w;
};

// Sigma^s Hom_P(Q, P) over the cover.
Complex p_model(const DObj& A);
// Homology as R-modules (exact for both kinds).
std::map<int, FPModule> homology_of(const DObj& A);
// Homology restricted to the claimed window.
std::map<int, FPModule> homology_of(const Derived& A);
Bounds bounds_of(const DObj& A);

// The dualizing complex Sigma^s Hom_P(F, P); s = number of variables normalizes
// it in the graded case (inf D = depth R).
DObj dualizing_complex(const QRPtr& R, bool normalize = true);
// Bounds of Sigma^s Hom_P(F, P) (cached).
Bounds dualizing_bounds(const QRPtr& R, int s);
// D(A): swaps the two kinds with the same s.
DObj dagger(const DObj& A, int s);
// A as an actual complex when it is one, or when D(W) has amplitude zero.
std::optional<Complex> as_complex(const DObj& A);

Derived rhom(const DObj& A, const DObj& B, int N, Window::Tag tag = Window::Tag::User);
Derived derived_tensor(const DObj& A, const DObj& B, int N, Window::Tag tag = Window::Tag::User);
DObj shift(const DObj& A, int n);

// Koszul complex on the given elements.
Complex koszul(const QRPtr& R, const std::vector<Poly>& xs);
// v - sup(K(x) (x) A) on the cover variables. Graded-local rings only.
ExtInt depth(const DObj& A);
ExtInt depth(const FPModule& M);

// Finite Laurent polynomial with integer coefficients.
struct LaurentPoly {
  std::map<int, long> c;
  long at(int e) const {
    auto it = c.find(e);
    return it == c.end() ? 0 : it->second;
  }
  LaurentPoly truncated(int hi) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const;
  std::string to_string() const;
};

// Betti numbers beta_i for i <= N (exact there). Graded-local rings.
LaurentPoly poincare_series(const DObj& A, int N);
// Bass numbers mu^i for i <= N (exact there). Graded-local rings.
LaurentPoly bass_series(const DObj& A, int N);
// a with D(k) = Sigma^a k for D shifted by s; 0 for the normalized D.
int dualized_residue_shift(const QRPtr& R, int s);

// Residue field R / (variables).
FPModule residue_field(const QRPtr& R);

}  // namespace semidual
