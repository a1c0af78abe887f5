#pragma once

#include <string>
#include <vector>

#include "semidual/semidual.hpp"

namespace semidual {

// phi: R -> S. A surjection S = R/J shares the cover of R. A module-finite map
// has S's cover extending R's cover by extra variables, with S presented as an
// R-module on basis elements of S.
struct RingMap {
  enum class Kind { Surjection, ModuleFinite };
  Kind kind = Kind::Surjection;
  QRPtr R, S;
  std::vector<Poly> kernel;   // J, in the cover of R
  FPModule presentation;      // S as an R-module
  std::vector<Poly> basis;    // generator images in the cover of S
  std::vector<Ideal> primes;  // declared primes of S, in the cover of S
  std::string verification;   // how the presentation was checked

  static RingMap surjection(const QRPtr& R, std::vector<Poly> J, std::vector<Ideal> primes = {});
  static RingMap identity(const QRPtr& R);
  // Checks the presentation; throws std::invalid_argument when it is wrong.
  static RingMap module_finite(const QRPtr& R, const QRPtr& S, FPModule presentation, std::vector<Poly> basis,
                               std::vector<Ideal> primes = {});

  // Image of an element of R's cover in S.
  Poly map(const Poly& f) const;
  int extra_vars() const { return S->nvars() - R->nvars(); }
  std::string describe() const;
};

// pd of a complex over any ring, read off Ext into R once a resolution terminates.
PdReport pd_complex(const Complex& X, int cutoff);

// pd_R(S) (= fd of phi).
PdReport map_pd(const RingMap& phi);

// m-Spec(R) inside the image of phi*: certified | m-Spec not covered | hypothesis-unverified.
std::string mspec_hypothesis(const RingMap& phi);

struct GradeEntry {
  Ideal prime;
  ExtInt grade;
};
struct GradeProfile {
  std::vector<GradeEntry> grades;
  std::map<int, FPModule> ext;  // homology of RHom_R(S, R)
  bool cm = false;
  bool constant_grade = false;
  bool gorenstein = false;
  std::string summary() const;
};
GradeProfile grade_profile(const RingMap& phi);

// A complex of R-modules read over S along phi. Free terms map to free terms.
Complex along(const RingMap& phi, const Complex& X);
// An R-module annihilated by J read as an S-module (surjections).
FPModule as_s_module(const RingMap& phi, const FPModule& M);

struct ChangeReport {
  Derived result;  // over S
  Bounds source, target;
  bool inf_ok = true;   // the inf inequality of the construction
  bool sup_ok = true;
  bool inherited_semidualizing = false;
  std::string note;
};
// C (x)^L S.
ChangeReport base_change(const DObj& C, const RingMap& phi, int N = -1);
// RHom_R(S, C).
ChangeReport cobase_change(const DObj& C, const RingMap& phi, int N = -1);

struct DescentReport {
  enum class Theorem { BaseChange, CobaseChange };
  Theorem theorem = Theorem::BaseChange;
  GDimReport source, target;
  std::string hypothesis;
  std::string relation;  // the (in)equality evaluated
  bool relation_holds = false;
};
// BaseChange: gdim_C(X) against gdim_{C (x) S}(X (x) S).
// CobaseChange: gdim_C(X) against gdim_{RHom(S,C)}(X (x) S).
// Throws std::logic_error when a certified hypothesis meets a violated relation.
DescentReport descent_gdim(const DObj& C, const DObj& X, const RingMap& phi,
                           DescentReport::Theorem t = DescentReport::Theorem::BaseChange);

struct SeriesTransfer {
  int N = 0;
  LaurentPoly P_src, P_tgt;    // P^R_C, P^S_{C (x) S}
  LaurentPoly I_src, I_tgt;    // I_R^C, I_S^{C (x) S}
  LaurentPoly IR, IS, Iphi;    // I_R^R, I_S^S and the quotient I_S / I_R
  bool poincare_ok = false;
  bool bass_ok = false;
};
SeriesTransfer series_transfer(const DObj& C, const RingMap& phi, int N);

struct UniquenessReport {
  bool targets_agree = false;
  bool sources_agree = false;
  bool both_semidualizing = false;
  std::string hypothesis;
  bool failure_demonstrated = false;  // targets agree, sources differ, precondition fails
  std::string note;
};
// Throws std::domain_error unless R is graded-local, a PID or a product of fields.
UniquenessReport transfer_uniqueness(const DObj& C, const DObj& Cp, const RingMap& phi);

}  // namespace semidual
