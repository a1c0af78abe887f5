#include "semidual/groebner.hpp"

#include <algorithm>

namespace semidual {

void ModuleOrder::sort(SVec& v) const {
  std::sort(v.begin(), v.end(), [this](const MTerm& a, const MTerm& b) { return cmp(a.m, a.comp, b.m, b.comp) > 0; });
}

SVec svec_normalize(const ModuleOrder& ord, SVec v) {
  ord.sort(v);
  SVec out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m) {
      out.back().c += t.c;
      if (out.back().c.is_zero()) out.pop_back();
    } else if (!t.c.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

SVec svec_axpy(const ModuleOrder& ord, const SVec& f, const FieldElem& c, const Monomial& m, const SVec& g) {
  SVec out;
  out.reserve(f.size() + g.size());
  FieldElem mc = -c;
  size_t i = 0, j = 0;
  MTerm t{};
  while (i < f.size() || j < g.size()) {
    if (j < g.size()) {
      t.m = g[j].m * m;
      t.comp = g[j].comp;
    }
    int cmpv;
    if (i >= f.size())
      cmpv = -1;
    else if (j >= g.size())
      cmpv = 1;
    else
      cmpv = ord.cmp(f[i].m, f[i].comp, t.m, t.comp);
    if (cmpv > 0) {
      out.push_back(f[i++]);
    } else if (cmpv < 0) {
      t.c = g[j].c * mc;
      out.push_back(t);
      ++j;
    } else {
      FieldElem s = f[i].c + g[j].c * mc;
      if (!s.is_zero()) out.push_back({f[i].m, f[i].comp, s});
      ++i;
      ++j;
    }
  }
  return out;
}

SVec svec_add(const ModuleOrder& ord, const SVec& f, const SVec& g) {
  if (g.empty()) return f;
  if (f.empty()) return g;
  return svec_axpy(ord, f, -FieldElem(ord.ring->field(), 1), Monomial{}, g);
}

SVec svec_scale(const SVec& f, const FieldElem& c) {
  SVec out;
  if (c.is_zero()) return out;
  out.reserve(f.size());
  for (auto& t : f) out.push_back({t.m, t.comp, t.c * c});
  return out;
}

ModuleGB::ModuleGB(ModuleOrder ord) : ord_(std::move(ord)), pairs_(PairLess{&ord_}) {}

int ModuleGB::sugar_of(const SVec& v) const {
  int s = 0;
  bool first = true;
  for (auto& t : v) {
    int d = ord_.wdeg(t.m, t.comp);
    if (first || d > s) s = d;
    first = false;
  }
  return s;
}

void ModuleGB::add(SVec v) {
  if (v.empty()) return;
  int s = sugar_of(v);
  gens_.push_back(std::move(v));
  gen_sugar_.push_back(s);
  const SVec& g = gens_.back();
  pairs_.insert(Pair{s, g[0].m, g[0].comp, static_cast<int>(gens_.size()) - 1, -1});
}

const ModuleGB::Elem* ModuleGB::find_reducer(const Monomial& m, int comp) const {
  if (comp >= static_cast<int>(by_comp_.size())) return nullptr;
  uint32_t mk = m.mask();
  const Elem* best = nullptr;
  for (int idx : by_comp_[comp]) {
    const Elem& e = elems_[idx];
    if (!e.active || (e.mask & ~mk)) continue;
    if (e.v[0].m.divides(m)) {
      if (!best || e.v.size() < best->v.size()) best = &e;
    }
  }
  return best;
}

SVec ModuleGB::reduce(SVec f) const {
  SVec result;
  while (!f.empty()) {
    // Skip over a run of irreducible leading terms before rebuilding f.
    size_t k = 0;
    const Elem* r = nullptr;
    while (k < f.size()) {
      r = find_reducer(f[k].m, f[k].comp);
      if (r) break;
      ++k;
    }
    for (size_t i = 0; i < k; ++i) result.push_back(std::move(f[i]));
    if (k == f.size()) break;
    SVec rest(std::make_move_iterator(f.begin() + k), std::make_move_iterator(f.end()));
    const MTerm& lead = rest[0];
    FieldElem c = lead.c / r->v[0].c;
    Monomial q = lead.m / r->v[0].m;
    f = svec_axpy(ord_, rest, c, q, r->v);
  }
  return result;
}

SVec ModuleGB::spoly(const Pair& p) const {
  const SVec& a = elems_[p.i].v;
  const SVec& b = elems_[p.j].v;
  // Both are monic.
  SVec sa = svec_axpy(ord_, SVec{}, -FieldElem(ord_.ring->field(), 1), p.lcm / a[0].m, a);
  return svec_axpy(ord_, sa, FieldElem(ord_.ring->field(), 1), p.lcm / b[0].m, b);
}

void ModuleGB::insert(SVec h, int sugar) {
  FieldElem inv = h[0].c.inv();
  if (!h[0].c.is_one()) h = svec_scale(h, inv);
  const Monomial lm = h[0].m;
  const int comp = h[0].comp;
  const bool rank_one = ord_.ncomps() <= 1;
  const int hid = static_cast<int>(elems_.size());

  struct Cand {
    int g;
    Monomial lcm;
    bool coprime;
  };
  std::vector<Cand> C, D;
  if (comp < static_cast<int>(by_comp_.size())) {
    for (int g : by_comp_[comp]) {
      if (!elems_[g].active) continue;
      const Monomial& gm = elems_[g].v[0].m;
      C.push_back({g, Monomial::lcm(lm, gm), rank_one && Monomial::coprime(lm, gm)});
    }
  }
  for (size_t a = 0; a < C.size(); ++a) {
    const Cand& c1 = C[a];
    bool keep = c1.coprime;
    if (!keep) {
      keep = true;
      for (size_t b = a + 1; b < C.size() && keep; ++b)
        if (C[b].lcm.divides(c1.lcm)) keep = false;
      for (size_t b = 0; b < D.size() && keep; ++b)
        if (D[b].lcm.divides(c1.lcm)) keep = false;
    }
    if (keep) D.push_back(c1);
  }

  // Prune old pairs made redundant by h.
  for (auto it = pairs_.begin(); it != pairs_.end();) {
    const Pair& p = *it;
    if (p.j >= 0 && p.comp == comp && lm.divides(p.lcm)) {
      Monomial l1 = Monomial::lcm(elems_[p.i].v[0].m, lm);
      Monomial l2 = Monomial::lcm(elems_[p.j].v[0].m, lm);
      if (!(l1 == p.lcm) && !(l2 == p.lcm)) {
        it = pairs_.erase(it);
        continue;
      }
    }
    ++it;
  }

  for (auto& c : D) {
    if (c.coprime) continue;
    const Elem& g = elems_[c.g];
    int s1 = sugar + ord_.ring->deg(c.lcm) - ord_.ring->deg(lm);
    int s2 = g.sugar + ord_.ring->deg(c.lcm) - ord_.ring->deg(g.v[0].m);
    pairs_.insert(Pair{std::max(s1, s2), c.lcm, comp, c.g, hid});
  }

  if (comp < static_cast<int>(by_comp_.size())) {
    for (int g : by_comp_[comp])
      if (elems_[g].active && lm.divides(elems_[g].v[0].m)) elems_[g].active = false;
  }
  if (comp >= static_cast<int>(by_comp_.size())) by_comp_.resize(comp + 1);
  elems_.push_back(Elem{std::move(h), lm.mask(), sugar, true});
  by_comp_[comp].push_back(hid);
}

void ModuleGB::complete() {
  while (!pairs_.empty()) {
    Pair p = *pairs_.begin();
    pairs_.erase(pairs_.begin());
    SVec s;
    if (p.j < 0) {
      s = std::move(gens_[p.i]);
    } else {
      s = spoly(p);
    }
    s = reduce(std::move(s));
    if (!s.empty()) insert(std::move(s), p.sugar);
  }
  gens_.clear();
  gen_sugar_.clear();
}

size_t ModuleGB::active_size() const {
  size_t n = 0;
  for (auto& e : elems_) n += e.active;
  return n;
}

std::vector<SVec> ModuleGB::reduced_basis() const {
  std::vector<SVec> out;
  for (auto& e : elems_) {
    if (!e.active) continue;
    SVec tail(e.v.begin() + 1, e.v.end());
    SVec r = reduce(std::move(tail));
    SVec v;
    v.reserve(r.size() + 1);
    v.push_back(e.v[0]);
    for (auto& t : r) v.push_back(std::move(t));
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [this](const SVec& a, const SVec& b) {
    return ord_.cmp(a[0].m, a[0].comp, b[0].m, b[0].comp) < 0;
  });
  return out;
}

std::vector<std::pair<Monomial, int>> ModuleGB::leading_terms() const {
  std::vector<std::pair<Monomial, int>> out;
  for (auto& e : elems_)
    if (e.active) out.push_back({e.v[0].m, e.v[0].comp});
  return out;
}

}  // namespace semidual
