#pragma once

#include <string>

#include "semidual/derived.hpp"

namespace semidual {

Fingerprint fingerprint(const DObj& A);
Fingerprint fingerprint(const Derived& A);

struct SemidualVerdict {
  enum class Outcome { Yes, No, YesWindow };
  Outcome outcome = Outcome::No;
  int N = 0;
  std::string how;      // which construction or check backs the verdict
  std::string witness;  // for No
  int witness_degree = 0;
  bool holds() const { return outcome != Outcome::No; }
  std::string to_string() const;
};

// Default window: number of cover variables + amp(C) + 4.
int default_semidual_window(const DObj& C);
// N < 0 selects the default window.
SemidualVerdict is_semidualizing(const DObj& C, int N = -1);

struct DualizingVerdict {
  bool dualizing = false;
  bool exact = false;
  std::string how;
};
// Dualizing complexes recognised: shifts of D, or semidualizing complexes over
// a ring whose D is a shift of R (Gorenstein).
DualizingVerdict is_dualizing(const DObj& C, int N = -1);
// D ~ Sigma^a R with the shift a, when R is Gorenstein.
std::optional<int> gorenstein_shift(const QRPtr& R);

struct GDimReport {
  ExtInt value;
  std::string certificate;  // exact | ab-certified-infinite | window(N) | biduality-failure
  int window = 0;
  Window rhom_window;
  std::map<int, FPModule> rhom_homology;
  Fingerprint rhom_fingerprint;
  bool graded = false;
  ExtInt depthR, depthX, expected_inf;  // AB data when graded
  bool ab_ok = true;
  int witness_degree = 0;               // homological degree of the obstruction
  int check_lo = 0, check_hi = 0;       // biduality verified in cone degrees [lo, hi]
  std::string note;
  std::string summary() const;
};

// AB window N = depth R + amp C + sup X - inf X + 4.
int ab_window(const DObj& C, const DObj& X);
GDimReport gdim(const DObj& C, const DObj& X, int N = -1);
bool is_totally_reflexive(const FPModule& M, const FPModule& C);

struct DualInto {
  Derived rhom;
  GDimReport report;
  ExtInt expected;  // inf C - inf C'
  bool ok = false;
};
// RHom(C', C) with its G_C-dimension bookkeeping.
DualInto dual_into(const DObj& C, const DObj& Cp, int N = -1);

struct EvaluationReport {
  bool tensor_eval = false;  // C' (x) RHom(C', C) ~ C
  bool hom_checked = false;  // C (x) C' semidualizing
  bool hom_eval = false;     // C ~ RHom(C', C (x) C')
  std::string detail;
};
EvaluationReport evaluation_checks(const DObj& C, const DObj& Cp, int N = -1);

// Sigma^a of the free module R when A is one.
std::optional<int> free_rank_one_shift(const DObj& A);

}  // namespace semidual
