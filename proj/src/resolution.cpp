#include "semidual/resolution.hpp"

#include <stdexcept>

namespace semidual {

std::vector<Vec> syzygies(const QuotientRing& R, const Mat& A, const std::vector<int>& target_twists,
                          const std::vector<int>& source_twists) {
  std::vector<Vec> K;
  if (A.rows == 0) {
    for (int j = 0; j < A.ncols(); ++j) K.push_back(unit_vec(R, A.ncols(), j));
  } else {
    K = kernel_mod(R, A, {}, target_twists, source_twists);
  }
  std::vector<Vec> out;
  for (int k : prune_generators(R, A.ncols(), source_twists, K, {})) out.push_back(K[k]);
  return out;
}

namespace {

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Vec pad(const QuotientRing& R, int before, const Vec& v, int after) {
  Vec out = vec_zero(R, before);
  out.insert(out.end(), v.begin(), v.end());
  for (int k = 0; k < after; ++k) out.push_back(R.zero());
  return out;
}

}  // namespace

Replacement free_replacement(const Complex& Z0, int N) {
  const QRPtr& Rp = Z0.ring;
  const QuotientRing& R = *Rp;
  Complex Z = Z0.trimmed();
  Replacement out;
  out.cutoff = N;
  if (Z.empty() || N < Z.lo) {
    out.F = Complex::zero(Rp);
    out.terminated = Z.empty();
    return out;
  }
  int lo = Z.lo;
  std::vector<std::vector<int>> tw;  // twists of G_n, n = lo..
  std::vector<Mat> dg;                // dg[k]: G_{lo+k} -> G_{lo+k-1}
  std::vector<Mat> eps;               // eps[k]: G_{lo+k} -> Z_{lo+k}
  auto gtw = [&](int n) { return (n < lo || n - lo >= (int)tw.size()) ? std::vector<int>{} : tw[n - lo]; };
  auto grank = [&](int n) { return static_cast<int>(gtw(n).size()); };
  for (int n = lo; n <= N; ++n) {
    int g1 = grank(n - 1), g2 = grank(n - 2), z = Z.rank(n), z1 = Z.rank(n - 1);
    std::vector<int> src_tw = concat(gtw(n - 1), Z.twists(n));
    std::vector<int> tgt_tw = concat(gtw(n - 2), Z.twists(n - 1));
    std::vector<Vec> K;
    if (g1 + z > 0) {
      if (g2 + z1 == 0) {
        for (int j = 0; j < g1 + z; ++j) K.push_back(unit_vec(R, g1 + z, j));
      } else {
        Mat A = mat_zero(R, g2 + z1, g1 + z);
        if (g1 > 0) {
          Mat d = n - 1 > lo ? dg[n - 1 - lo] : Mat(0, g1, R.cover());
          Mat e = eps[n - 1 - lo];
          for (int c = 0; c < g1; ++c) {
            for (int r = 0; r < g2; ++r) A.at(r, c) = -d.at(r, c);
            for (int r = 0; r < z1; ++r) A.at(g2 + r, c) = e.at(r, c);
          }
        }
        Mat dz = Z.diff(n);
        for (int c = 0; c < z; ++c)
          for (int r = 0; r < z1; ++r) A.at(g2 + r, g1 + c) = dz.at(r, c);
        std::vector<Vec> trels;
        for (auto& rel : Z.at(n - 1).rels) trels.push_back(pad(R, g2, rel, 0));
        K = kernel_mod(R, A, trels, tgt_tw, src_tw);
      }
    }
    std::vector<Vec> base;
    for (auto& c : Z.diff(n + 1).cols)
      if (!vec_is_zero(c)) base.push_back(pad(R, g1, c, 0));
    for (auto& rel : Z.at(n).rels) base.push_back(pad(R, g1, rel, 0));
    std::vector<int> keep = K.empty() ? std::vector<int>{} : prune_generators(R, g1 + z, src_tw, K, base);
    if (n > Z.hi() && keep.empty()) {
      out.terminated = true;
      break;
    }
    std::vector<int> t;
    Mat d(g1, 0, R.cover()), e(z, 0, R.cover());
    for (int k : keep) {
      const Vec& v = K[k];
      t.push_back(vec_degree(v, src_tw));
      d.cols.push_back(vec_neg(Vec(v.begin(), v.begin() + g1)));
      e.cols.push_back(Vec(v.begin() + g1, v.end()));
    }
    tw.push_back(std::move(t));
    dg.push_back(std::move(d));
    eps.push_back(std::move(e));
  }
  Complex G;
  G.ring = Rp;
  G.lo = lo;
  for (size_t k = 0; k < tw.size(); ++k) {
    G.mods.push_back(FPModule::free(Rp, static_cast<int>(tw[k].size()), tw[k]));
    G.d.push_back(k == 0 ? Mat(0, static_cast<int>(tw[0].size()), R.cover()) : dg[k]);
  }
  for (size_t k = 0; k < eps.size(); ++k) out.eps.f[lo + static_cast<int>(k)] = eps[k];
  minimize_units(G, &out.eps);
  out.F = G.trimmed();
  return out;
}

Replacement free_resolution(const FPModule& M, int N) { return free_replacement(Complex::concentrated(M, 0), N); }

Complex minimal_free_resolution(const FPModule& M, int n) {
  if (n < 0) throw std::invalid_argument("resolution cutoff must be nonnegative");
  return free_resolution(M, n).F;
}

namespace {

void drop_row(Mat& M, int r) {
  for (auto& c : M.cols) c.erase(c.begin() + r);
  --M.rows;
}

void drop_col(Mat& M, int c) { M.cols.erase(M.cols.begin() + c); }

}  // namespace

void minimize_units(Complex& F, ChainMap* eps) {
  const QuotientRing& R = *F.ring;
  for (;;) {
    bool found = false;
    for (int i = F.lo + 1; i <= F.hi() && !found; ++i) {
      Mat& M = F.d[i - F.lo];
      for (int b = 0; b < M.ncols() && !found; ++b)
        for (int a = 0; a < M.rows && !found; ++a) {
          const Poly& u = M.at(a, b);
          if (u.is_zero() || !u.is_unit_constant()) continue;
          found = true;
          Poly uinv = Poly::constant(R.cover(), 1).scale(u.lc().inv());
          Vec cb = M.cols[b];
          std::vector<Poly> coef(M.ncols(), R.zero());
          for (int j = 0; j < M.ncols(); ++j) coef[j] = R.reduce(M.at(a, j) * uinv);
          for (int j = 0; j < M.ncols(); ++j)
            if (j != b && !coef[j].is_zero()) M.cols[j] = vec_sub(R, M.cols[j], vec_scale(R, cb, coef[j]));
          if (eps && eps->f.count(i)) {
            Mat& E = eps->f[i];
            Vec eb = E.cols[b];
            for (int j = 0; j < E.ncols(); ++j)
              if (j != b && !coef[j].is_zero()) E.cols[j] = vec_sub(R, E.cols[j], vec_scale(R, eb, coef[j]));
            drop_col(E, b);
          }
          if (eps && eps->f.count(i - 1)) drop_col(eps->f[i - 1], a);
          drop_col(M, b);
          drop_row(M, a);
          if (i + 1 <= F.hi()) drop_row(F.d[i + 1 - F.lo], b);
          drop_col(F.d[i - 1 - F.lo], a);
          FPModule& Fi = F.mods[i - F.lo];
          Fi.twists.erase(Fi.twists.begin() + b);
          --Fi.ngens;
          FPModule& Fm = F.mods[i - 1 - F.lo];
          Fm.twists.erase(Fm.twists.begin() + a);
          --Fm.ngens;
        }
    }
    if (!found) break;
  }
  if (eps) {
    for (auto it = eps->f.begin(); it != eps->f.end();)
      it = (F.rank(it->first) == 0 && it->second.ncols() == 0) ? eps->f.erase(it) : std::next(it);
  }
}

FPModule to_cover(const FPModule& M) {
  QRPtr P = M.ring->cover_ring();
  FPModule N = FPModule::free(P, M.ngens, M.twists);
  N.rels = M.rels;
  for (int c = 0; c < M.ngens; ++c)
    for (auto& g : M.ring->ideal().gens()) {
      Vec v = vec_zero(*P, M.ngens);
      v[c] = g;
      N.rels.push_back(std::move(v));
    }
  return N;
}

Complex to_cover(const Complex& Z) {
  Complex X = Z;
  X.ring = Z.ring->cover_ring();
  for (auto& m : X.mods) m = to_cover(m);
  return X;
}

PdReport pd_bounded(const Complex& X, int cutoff) {
  Replacement r = free_replacement(X, cutoff);
  PdReport rep;
  rep.cutoff = cutoff;
  rep.resolution = r.F;
  rep.terminated = r.terminated;
  if (r.terminated) {
    rep.value = r.F.empty() ? ExtInt::neg_inf() : ExtInt(r.F.hi());
    rep.certificate = "terminated";
  } else {
    rep.value = ExtInt::pos_inf();
    rep.cutoff_rank = r.F.rank(cutoff);
    rep.certificate = "unterminated";
  }
  return rep;
}

PdReport pd(const FPModule& M) {
  if (!M.ring->graded_local()) throw std::domain_error("unsupported: use localized invariants");
  PdReport rep = pd_bounded(Complex::concentrated(M, 0), M.ring->nvars() + 1);
  if (!rep.terminated) rep.certificate = "infinite";
  return rep;
}

std::vector<int> betti_numbers(const FPModule& M, int n) {
  if (!M.ring->graded_local()) throw std::domain_error("unsupported: use localized invariants");
  Replacement r = free_resolution(M, n);
  std::vector<int> b;
  for (int i = 0; i <= n; ++i) b.push_back(r.F.rank(i));
  return b;
}

}  // namespace semidual
