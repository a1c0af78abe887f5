#include "semidual/ideal.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace semidual {

SVec poly_to_svec(const Poly& f, int comp) {
  SVec v;
  v.reserve(f.size());
  for (auto& t : f.terms()) v.push_back({t.m, comp, t.c});
  return v;
}

Poly svec_to_poly(const PolyRing* r, const SVec& v) {
  std::vector<Term> ts;
  ts.reserve(v.size());
  for (auto& t : v) ts.push_back({t.m, t.c});
  return Poly::from_terms(r, std::move(ts));
}

Ideal::Ideal(const PolyRing* r, std::vector<Poly> gens) : ring_(r) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.ring() != r) throw std::invalid_argument("ideal generators lie in different rings");
    gens_.push_back(std::move(g));
  }
  auto e = std::make_shared<ModuleGB>(ModuleOrder(r, {0}));
  for (auto& g : gens_) e->add(poly_to_svec(g, 0));
  e->complete();
  for (auto& v : e->reduced_basis()) gb_.push_back(svec_to_poly(r, v));
  engine_ = e;
}

Poly Ideal::normal_form(const Poly& f) const {
  if (f.is_zero()) return Poly(ring_);
  if (f.ring() != ring_) throw std::invalid_argument("ring mismatch in normal form");
  if (gb_.empty()) return f;
  return svec_to_poly(ring_, engine_->reduce(poly_to_svec(f, 0)));
}

bool Ideal::contains(const Ideal& J) const {
  if (J.ring_ != ring_ && !J.gens_.empty()) throw std::invalid_argument("ring mismatch in ideal containment");
  for (auto& g : J.gens_)
    if (!contains(g)) return false;
  return true;
}

bool Ideal::homogeneous() const {
  for (auto& g : gb_)
    if (!g.homogeneous()) return false;
  return true;
}

int Ideal::krull_dim() const {
  if (is_unit()) return -1;
  int n = ring_->nvars();
  std::vector<uint32_t> supp;
  for (auto& g : gb_) supp.push_back(g.lm().mask());
  int best = 0;
  for (uint32_t s = 0; s < (1u << n); ++s) {
    int c = std::popcount(s);
    if (c <= best) continue;
    bool ok = true;
    for (uint32_t m : supp)
      if ((m & ~s) == 0) {
        ok = false;
        break;
      }
    if (ok) best = c;
  }
  return best;
}

bool Ideal::operator==(const Ideal& o) const {
  if (gb_.size() != o.gb_.size()) return false;
  for (size_t i = 0; i < gb_.size(); ++i)
    if (gb_[i] != o.gb_[i]) return false;
  return true;
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < gb_.size(); ++i) s += (i ? ", " : "") + gb_[i].to_string();
  return s + ")";
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  std::vector<Poly> g = a.gens();
  g.insert(g.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.ring() ? a.ring() : b.ring(), g);
}

namespace {

// Generators of {x in P : x*col[c] in rel_c for every c}, one column entry per component.
Ideal poly_kernel(const PolyRing* r, const std::vector<Poly>& col, const std::vector<const Ideal*>& rels) {
  int k = static_cast<int>(col.size());
  std::vector<int> tw(k + 1, 0), bl(k + 1, 0);
  bl[k] = 1;
  ModuleOrder ord(r, tw, bl);
  ModuleGB gb(ord);
  SVec g;
  for (int c = 0; c < k; ++c)
    for (auto& t : col[c].terms()) g.push_back({t.m, c, t.c});
  g.push_back({Monomial{}, k, r->scalar(1)});
  gb.add(svec_normalize(ord, g));
  for (int c = 0; c < k; ++c)
    for (auto& h : rels[c]->gb()) gb.add(poly_to_svec(h, c));
  gb.complete();
  std::vector<Poly> out;
  for (auto& v : gb.reduced_basis())
    if (v[0].comp == k) out.push_back(svec_to_poly(r, v));
  return Ideal(r, out);
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  const PolyRing* r = a.ring() ? a.ring() : b.ring();
  return poly_kernel(r, {Poly::constant(r, 1), Poly::constant(r, 1)}, {&a, &b});
}

Ideal colon(const Ideal& a, const Poly& f) { return poly_kernel(a.ring(), {f}, {&a}); }

bool locally_contains(const Ideal& a, const Ideal& b, const Ideal& q) {
  for (auto& g : b.gens()) {
    if (a.contains(g)) continue;
    if (q.contains(colon(a, g))) return false;
  }
  return true;
}

bool locally_equal(const Ideal& a, const Ideal& b, const Ideal& q) {
  return locally_contains(a, b, q) && locally_contains(b, a, q);
}

QRPtr QuotientRing::make(const PolyRing* P, std::vector<Poly> gens) {
  auto R = std::shared_ptr<QuotientRing>(new QuotientRing());
  R->P_ = P;
  R->I_ = Ideal(P, std::move(gens));
  R->graded_local_ = !R->I_.is_unit() && R->I_.homogeneous();
  return R;
}

QRPtr QuotientRing::cover_ring() const { return make(P_, std::vector<Poly>{}); }

QRPtr QuotientRing::quotient(const std::vector<Poly>& extra) const {
  std::vector<Poly> g = I_.gens();
  g.insert(g.end(), extra.begin(), extra.end());
  return make(P_, g);
}

Ideal QuotientRing::irrelevant() const {
  std::vector<Poly> v;
  for (int i = 0; i < P_->nvars(); ++i) v.push_back(Poly::variable(P_, i));
  return Ideal(P_, v) + I_;
}

std::string QuotientRing::describe() const {
  std::string s = P_->describe();
  if (!I_.is_zero()) s += "/" + I_.to_string();
  return s;
}

PrimeIdeal PrimeIdeal::generated(const QRPtr& R, const std::vector<Poly>& gens, std::string name) {
  return in_cover(R, Ideal(R->cover(), gens) + R->ideal(), std::move(name));
}

PrimeIdeal PrimeIdeal::in_cover(const QRPtr& R, const Ideal& p, std::string name) {
  if (!p.contains(R->ideal())) throw std::invalid_argument("prime does not contain the defining ideal");
  if (p.is_unit()) throw std::invalid_argument("prime ideal must be proper");
  return PrimeIdeal{R, p, std::move(name)};
}

}  // namespace semidual
