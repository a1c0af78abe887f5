#include "semidual/module.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace semidual {

FPModule FPModule::free(const QRPtr& R, int n, std::vector<int> twists) {
  if (twists.empty()) twists.assign(n, 0);
  if (static_cast<int>(twists.size()) != n) throw std::invalid_argument("twist count differs from rank");
  return FPModule{R, n, std::move(twists), {}};
}

FPModule FPModule::cyclic(const QRPtr& R, const std::vector<Poly>& gens, int twist) {
  FPModule M = free(R, 1, {twist});
  for (auto& g : gens) {
    Poly r = R->reduce(g);
    if (!r.is_zero()) M.rels.push_back(Vec{r});
  }
  return M;
}

bool FPModule::homogeneous() const {
  if (!ring->graded_local()) return false;
  for (auto& r : rels)
    if (!vec_homogeneous(r, twists)) return false;
  return true;
}

bool FPModule::is_zero() const {
  if (ngens == 0) return true;
  if (rels.empty() && !ring->ideal().is_unit()) return false;
  return Submodule(*ring, ngens, twists, rels).is_everything();
}

std::string FPModule::to_string() const {
  std::string s = "coker(" + std::to_string(ngens) + " gens; twists";
  for (int t : twists) s += " " + std::to_string(t);
  s += "; rels";
  for (auto& r : rels) s += " " + vec_string(r);
  return s + ")";
}

FPModule direct_sum(const FPModule& a, const FPModule& b) {
  FPModule M = FPModule::free(a.ring, a.ngens + b.ngens, [&] {
    std::vector<int> t = a.twists;
    t.insert(t.end(), b.twists.begin(), b.twists.end());
    return t;
  }());
  Poly z(a.ring->cover());
  for (auto& r : a.rels) {
    Vec v = r;
    v.resize(M.ngens, z);
    M.rels.push_back(std::move(v));
  }
  for (auto& r : b.rels) {
    Vec v(a.ngens, z);
    v.insert(v.end(), r.begin(), r.end());
    M.rels.push_back(std::move(v));
  }
  return M;
}

FPModule twist_module(const FPModule& M, int t) {
  FPModule N = M;
  for (auto& x : N.twists) x += t;
  return N;
}

FPModule change_ring(const FPModule& M, const QRPtr& S) {
  if (S->cover() != M.ring->cover()) throw std::invalid_argument("change of ring needs a common cover");
  FPModule N = FPModule::free(S, M.ngens, M.twists);
  for (auto& r : M.rels) {
    Vec v;
    for (auto& p : r) v.push_back(S->reduce(p));
    if (!vec_is_zero(v)) N.rels.push_back(std::move(v));
  }
  return N;
}

Ideal annihilator(const FPModule& M0) {
  const QuotientRing& R = *M0.ring;
  if (M0.ngens == 0) return Ideal(R.cover(), {R.one()});
  FPModule M = minimize(M0);
  if (M.ngens == 0) return Ideal(R.cover(), {R.one()});
  Ideal acc;
  bool first = true;
  for (int j = 0; j < M.ngens; ++j) {
    Mat A;
    A.rows = M.ngens;
    A.cols.push_back(unit_vec(R, M.ngens, j));
    std::vector<Poly> g = R.ideal().gens();
    for (auto& v : kernel_mod(R, A, M.rels, M.twists, {M.twists[j]})) g.push_back(v[0]);
    Ideal a(R.cover(), g);
    acc = first ? a : intersect(acc, a);
    first = false;
  }
  return acc;
}

FPModule minimize(const FPModule& M) {
  const QuotientRing& R = *M.ring;
  if (M.ngens == 0) return M;
  std::vector<Vec> units;
  for (int j = 0; j < M.ngens; ++j) units.push_back(unit_vec(R, M.ngens, j));
  std::vector<int> keep = prune_generators(R, M.ngens, M.twists, units, M.rels);
  FPModule N;
  N.ring = M.ring;
  std::vector<Vec> rels;
  if (static_cast<int>(keep.size()) == M.ngens) {
    N.ngens = M.ngens;
    N.twists = M.twists;
    rels = M.rels;
  } else {
    N.ngens = static_cast<int>(keep.size());
    Mat E;
    E.rows = M.ngens;
    for (int k : keep) {
      E.cols.push_back(units[k]);
      N.twists.push_back(M.twists[k]);
    }
    rels = kernel_mod(R, E, M.rels, M.twists, N.twists);
  }
  for (int i : prune_generators(R, N.ngens, N.twists, rels, {})) N.rels.push_back(rels[i]);
  return N;
}

namespace {

// Calls f on every exponent vector of weighted degree d.
void for_each_monomial(const PolyRing* P, int d, const std::function<void(const Monomial&)>& f) {
  Monomial m;
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == P->nvars() - 1) {
      int w = P->weights()[i];
      if (left % w == 0) {
        m.e[i] = static_cast<uint16_t>(left / w);
        f(m);
      }
      m.e[i] = 0;
      return;
    }
    int w = P->weights()[i];
    for (int k = 0; k * w <= left; ++k) {
      m.e[i] = static_cast<uint16_t>(k);
      rec(i + 1, left - k * w);
    }
    m.e[i] = 0;
  };
  if (d >= 0) rec(0, d);
}

long count_standard(const PolyRing* P, const std::vector<std::pair<Monomial, int>>& leads, int comp, int d) {
  long n = 0;
  for_each_monomial(P, d, [&](const Monomial& m) {
    for (auto& [lm, c] : leads)
      if (c == comp && lm.divides(m)) return;
    ++n;
  });
  return n;
}

}  // namespace

std::vector<long> hilbert_function(const FPModule& M, int d0, int d1) {
  std::vector<long> out(std::max(0, d1 - d0), 0);
  if (M.ngens == 0) return out;
  Submodule S(*M.ring, M.ngens, M.twists, M.rels);
  auto leads = S.gb().leading_terms();
  for (int d = d0; d < d1; ++d)
    for (int j = 0; j < M.ngens; ++j) out[d - d0] += count_standard(M.ring->cover(), leads, j, d - M.twists[j]);
  return out;
}

int krull_dim(const FPModule& M) { return annihilator(M).krull_dim(); }

long vector_space_dim(const FPModule& M) {
  if (M.ngens == 0) return 0;
  if (krull_dim(M) > 0) return -1;
  // Plain degree filtration: counts standard monomials, which is exact for finite length.
  std::vector<int> zero(M.ngens, 0);
  Submodule S(*M.ring, M.ngens, zero, M.rels);
  auto leads = S.gb().leading_terms();
  const PolyRing* P = M.ring->cover();
  int wmax = *std::max_element(P->weights().begin(), P->weights().end());
  long total = 0;
  for (int j = 0; j < M.ngens; ++j) {
    int empty_run = 0;
    for (int d = 0; empty_run < wmax; ++d) {
      long c = count_standard(P, leads, j, d);
      total += c;
      empty_run = c ? 0 : empty_run + 1;
    }
  }
  return total;
}

namespace {

Poly determinant(const QuotientRing& R, const std::vector<std::vector<Poly>>& a) {
  int n = static_cast<int>(a.size());
  if (n == 1) return a[0][0];
  if (n == 2) return R.reduce(a[0][0] * a[1][1] - a[0][1] * a[1][0]);
  Poly det(R.cover());
  for (int c = 0; c < n; ++c) {
    if (a[0][c].is_zero()) continue;
    std::vector<std::vector<Poly>> sub;
    for (int r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (int k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      sub.push_back(std::move(row));
    }
    Poly t = R.reduce(a[0][c] * determinant(R, sub));
    det = (c % 2) ? det - t : det + t;
  }
  return det;
}

void subsets(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

Ideal fitting_ideal(const FPModule& M, int j) {
  const QuotientRing& R = *M.ring;
  std::vector<Poly> gens = R.ideal().gens();
  int k = M.ngens - j;
  if (k <= 0) return Ideal(R.cover(), {R.one()});
  int nrel = static_cast<int>(M.rels.size());
  if (nrel < k) return Ideal(R.cover(), gens);
  std::vector<std::vector<int>> rows, cols;
  subsets(M.ngens, k, rows);
  subsets(nrel, k, cols);
  if (rows.size() * cols.size() > 200000) throw std::runtime_error("fitting ideal: presentation too large");
  for (auto& rs : rows)
    for (auto& cs : cols) {
      std::vector<std::vector<Poly>> a(k, std::vector<Poly>(k));
      for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) a[x][y] = M.rels[cs[y]][rs[x]];
      Poly d = determinant(R, a);
      if (!d.is_zero()) gens.push_back(d);
    }
  return Ideal(R.cover(), gens);
}

int local_num_gens(const FPModule& M0, const Ideal& q) {
  FPModule M = minimize(M0);
  for (int j = 0; j <= M.ngens; ++j)
    if (!q.contains(fitting_ideal(M, j))) return j;
  return M.ngens;
}

}  // namespace semidual
