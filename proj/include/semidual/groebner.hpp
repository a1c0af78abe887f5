#pragma once

#include <set>
#include <vector>

#include "semidual/poly.hpp"

namespace semidual {

struct MTerm {
  Monomial m;
  int comp;
  FieldElem c;
};

// Sparse element of a free module P^r, terms sorted descending in a ModuleOrder.
using SVec = std::vector<MTerm>;

// Block order on P^r: block id (smaller wins), then weighted degree including the
// component twist, then the ring order, then component index (smaller wins).
struct ModuleOrder {
  const PolyRing* ring = nullptr;
  std::vector<int> twist;
  std::vector<int> block;

  ModuleOrder() = default;
  ModuleOrder(const PolyRing* r, std::vector<int> tw, std::vector<int> bl = {})
      : ring(r), twist(std::move(tw)), block(std::move(bl)) {}

  int ncomps() const { return static_cast<int>(twist.size()); }
  int tw(int c) const { return c < static_cast<int>(twist.size()) ? twist[c] : 0; }
  int bl(int c) const { return c < static_cast<int>(block.size()) ? block[c] : 0; }
  int wdeg(const Monomial& m, int c) const { return ring->deg(m) + tw(c); }
  int cmp(const Monomial& a, int ca, const Monomial& b, int cb) const {
    int ba = bl(ca), bb = bl(cb);
    if (ba != bb) return ba < bb ? 1 : -1;
    int da = wdeg(a, ca), db = wdeg(b, cb);
    if (da != db) return da > db ? 1 : -1;
    int c = ring->cmp(a, b);
    if (c) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }
  void sort(SVec& v) const;
};

// f - c * m * g, both sorted in ord.
SVec svec_axpy(const ModuleOrder& ord, const SVec& f, const FieldElem& c, const Monomial& m, const SVec& g);
SVec svec_add(const ModuleOrder& ord, const SVec& f, const SVec& g);
SVec svec_scale(const SVec& f, const FieldElem& c);
// Combines like terms and sorts.
SVec svec_normalize(const ModuleOrder& ord, SVec v);

// Buchberger completion for submodules of P^r with Gebauer-Moeller pair
// pruning; the product criterion is used only for rank one.
class ModuleGB {
 public:
  explicit ModuleGB(ModuleOrder ord);

  const ModuleOrder& order() const { return ord_; }
  void add(SVec v);
  void complete();
  // Adds one element and restores the basis property.
  void insert_complete(SVec v) {
    add(std::move(v));
    complete();
  }
  // Full normal form modulo the current basis; assumes complete().
  SVec reduce(SVec v) const;
  bool contains(const SVec& v) const { return reduce(v).empty(); }
  // Minimal, tail-reduced, monic basis sorted ascending by leading term.
  std::vector<SVec> reduced_basis() const;
  // Leading terms of the minimal basis.
  std::vector<std::pair<Monomial, int>> leading_terms() const;
  size_t active_size() const;

 private:
  struct Elem {
    SVec v;
    uint32_t mask;
    int sugar;
    bool active;
  };
  struct Pair {
    int sugar;
    Monomial lcm;
    int comp;
    int i, j;  // j < 0 marks a queued generator with index i into gens_
  };
  struct PairLess {
    const ModuleOrder* ord;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      int c = ord->cmp(a.lcm, a.comp, b.lcm, b.comp);
      if (c) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };

  ModuleOrder ord_;
  std::vector<Elem> elems_;
  std::vector<std::vector<int>> by_comp_;
  std::vector<SVec> gens_;
  std::vector<int> gen_sugar_;
  std::set<Pair, PairLess> pairs_;

  const Elem* find_reducer(const Monomial& m, int comp) const;
  void insert(SVec h, int sugar);
  SVec spoly(const Pair& p) const;
  int sugar_of(const SVec& v) const;
};

}  // namespace semidual
