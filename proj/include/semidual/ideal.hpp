#pragma once

#include <memory>
#include <string>
#include <vector>

#include "semidual/groebner.hpp"
#include "semidual/poly.hpp"

namespace semidual {

SVec poly_to_svec(const Poly& f, int comp);
Poly svec_to_poly(const PolyRing* r, const SVec& v);

// Ideal of a polynomial ring; the reduced Groebner basis is computed eagerly.
class Ideal {
 public:
  Ideal() = default;
  Ideal(const PolyRing* r, std::vector<Poly> gens);

  const PolyRing* ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }
  const std::vector<Poly>& gb() const { return gb_; }
  Poly normal_form(const Poly& f) const;
  bool contains(const Poly& f) const { return normal_form(f).is_zero(); }
  // J is contained in this ideal.
  bool contains(const Ideal& J) const;
  bool is_unit() const { return gb_.size() == 1 && gb_[0].is_unit_constant(); }
  bool is_zero() const { return gb_.empty(); }
  bool homogeneous() const;
  // Krull dimension of P / this ideal; -1 for the unit ideal.
  int krull_dim() const;
  bool operator==(const Ideal& o) const;
  std::string to_string() const;

 private:
  const PolyRing* ring_ = nullptr;
  std::vector<Poly> gens_;
  std::vector<Poly> gb_;
  std::shared_ptr<const ModuleGB> engine_;
};

Ideal operator+(const Ideal& a, const Ideal& b);
Ideal intersect(const Ideal& a, const Ideal& b);
// (a : f)
Ideal colon(const Ideal& a, const Poly& f);
// a and b agree after localizing at the prime q.
bool locally_equal(const Ideal& a, const Ideal& b, const Ideal& q);
// b is contained in a after localizing at q.
bool locally_contains(const Ideal& a, const Ideal& b, const Ideal& q);

class QuotientRing;
using QRPtr = std::shared_ptr<const QuotientRing>;

// R = P / I.
class QuotientRing {
 public:
  static QRPtr make(const PolyRing* P, std::vector<Poly> gens);
  static QRPtr make(const PolyRing* P, const Ideal& I) { return make(P, I.gens()); }

  const PolyRing* cover() const { return P_; }
  const Ideal& ideal() const { return I_; }
  const Field& field() const { return P_->field(); }
  int nvars() const { return P_->nvars(); }
  // I homogeneous and proper, so the irrelevant ideal is the unique graded maximal ideal.
  bool graded_local() const { return graded_local_; }
  bool is_polynomial() const { return I_.is_zero(); }
  Poly reduce(const Poly& f) const { return I_.normal_form(f); }
  Poly parse(const std::string& s) const { return reduce(parse_poly(P_, s)); }
  Poly zero() const { return Poly(P_); }
  Poly one() const { return Poly::constant(P_, 1); }
  // The cover P as a ring in its own right.
  QRPtr cover_ring() const;
  // R / (extra).
  QRPtr quotient(const std::vector<Poly>& extra) const;
  Ideal irrelevant() const;
  bool same(const QuotientRing& o) const { return P_ == o.P_ && I_ == o.I_; }
  std::string describe() const;

 private:
  QuotientRing() = default;
  const PolyRing* P_ = nullptr;
  Ideal I_;
  bool graded_local_ = false;
};

// A prime of R given by its preimage in the cover. Primality is asserted, not checked.
struct PrimeIdeal {
  QRPtr ring;
  Ideal ideal;
  std::string name;

  // Ideal generated in the cover by gens together with the defining ideal.
  static PrimeIdeal generated(const QRPtr& R, const std::vector<Poly>& gens, std::string name = "");
  // Cover ideal given verbatim; rejects ideals missing I or equal to (1).
  static PrimeIdeal in_cover(const QRPtr& R, const Ideal& p, std::string name = "");
};

}  // namespace semidual
