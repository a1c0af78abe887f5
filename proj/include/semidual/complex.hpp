#pragma once

#include <map>
#include <string>
#include <vector>

#include "semidual/extint.hpp"
#include "semidual/module.hpp"

namespace semidual {

// Bounded complex of finitely presented modules, homological indexing.
// d[k] is the differential out of index lo + k.
class Complex {
 public:
  QRPtr ring;
  int lo = 0;
  std::vector<FPModule> mods;
  std::vector<Mat> d;

  static Complex zero(const QRPtr& R);
  // M placed in homological degree i.
  static Complex concentrated(const FPModule& M, int i = 0);
  // Builds from terms and differentials d_i: X_i -> X_{i-1}, i = lo+1..hi (lo's map is zero).
  static Complex make(const QRPtr& R, int lo, std::vector<FPModule> mods, std::vector<Mat> diffs_from_lo_plus_1);

  bool empty() const { return mods.empty(); }
  int hi() const { return lo + static_cast<int>(mods.size()) - 1; }
  // Zero module outside [lo, hi].
  FPModule at(int i) const;
  int rank(int i) const;
  std::vector<int> twists(int i) const;
  // Matrix of d_i: X_i -> X_{i-1}, zero outside the range.
  Mat diff(int i) const;
  void set_diff(int i, Mat m);
  bool is_free() const;
  bool homogeneous() const;
  // d^2 = 0 and relations map into relations; throws on failure.
  void validate() const;
  // Drops zero-rank terms at both ends.
  Complex trimmed() const;
  std::string summary() const;
};

// Degree-0 chain map X -> Y; f[i] is the matrix X_i -> Y_i.
struct ChainMap {
  std::map<int, Mat> f;
  Mat at(const Complex& X, const Complex& Y, int i) const;
};

void validate_chain_map(const Complex& X, const Complex& Y, const ChainMap& a);

Complex shift(const Complex& X, int n);
Complex direct_sum(const Complex& X, const Complex& Y);
// cone_n = X_{n-1} + Y_n, d(x, y) = (-dx, a x + dy).
Complex cone(const Complex& X, const Complex& Y, const ChainMap& a);
// Total tensor product with d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy.
Complex tensor(const Complex& X, const Complex& Y);
// Hom(F, Y)_n = prod_i Hom(F_i, Y_{i+n}) with d f = d f - (-1)^n f d; F must be free.
Complex hom(const Complex& F, const Complex& Y);
// Generator bookkeeping of hom(F, Y)_n: (i, a, b) meaning e_a of F_i -> gen b of Y_{i+n}.
struct HomIndex {
  int i, a, b;
};
std::vector<HomIndex> hom_basis(const Complex& F, const Complex& Y, int n);

struct Homology {
  FPModule module;
  std::vector<Vec> cycles;  // representatives in X_i of the generators
};
Homology homology(const Complex& X, int i);

struct Bounds {
  ExtInt inf, sup, amp;
};
// Homology modules for every index of X (indices with zero homology omitted).
std::map<int, FPModule> all_homology(const Complex& X);
Bounds bounds_of(const std::map<int, FPModule>& H);
Bounds inf_sup_amp(const Complex& X);
bool is_exact(const Complex& X);

struct FingerprintEntry {
  int index;
  int min_gens;               // -1 when not graded
  std::vector<long> hilbert;  // graded: dim_k H_d for six degrees from the lowest generator degree
  int dim;                    // non-graded: Krull dimension of H
  long length;                // non-graded: k-dimension, -1 if infinite
  std::string ann;
  bool operator==(const FingerprintEntry&) const = default;
};
using Fingerprint = std::vector<FingerprintEntry>;
Fingerprint fingerprint(const std::map<int, FPModule>& H, bool graded);
Fingerprint fingerprint(const Complex& X);
std::string fingerprint_string(const Fingerprint& f);

// Support-based localization at a prime of the ring, given in the cover.
Bounds localized_bounds(const std::map<int, FPModule>& H, const Ideal& p);
Bounds localized_bounds(const Complex& X, const Ideal& p);
// Semilocal bounds over the localization at the complement of a union of maximal ideals.
Bounds semilocal_bounds(const std::map<int, FPModule>& H, const std::vector<Ideal>& maxes);

// Local comparison data of homology at a prime: number of generators and annihilator.
struct LocalEntry {
  int index;
  int num_gens;
  Ideal ann;
};
std::vector<LocalEntry> local_fingerprint(const std::map<int, FPModule>& H, const Ideal& p);
bool local_fingerprints_equal(const std::vector<LocalEntry>& a, const std::vector<LocalEntry>& b, const Ideal& p);

}  // namespace semidual
