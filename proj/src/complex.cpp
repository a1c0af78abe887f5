#include "semidual/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace semidual {

Complex Complex::zero(const QRPtr& R) {
  Complex X;
  X.ring = R;
  return X;
}

Complex Complex::concentrated(const FPModule& M, int i) {
  Complex X;
  X.ring = M.ring;
  X.lo = i;
  X.mods.push_back(M);
  X.d.push_back(Mat(0, M.ngens, M.ring->cover()));
  return X;
}

Complex Complex::make(const QRPtr& R, int lo, std::vector<FPModule> mods, std::vector<Mat> diffs) {
  if (!mods.empty() && diffs.size() + 1 != mods.size())
    throw std::invalid_argument("complex needs one differential between consecutive terms");
  Complex X;
  X.ring = R;
  X.lo = lo;
  X.mods = std::move(mods);
  if (!X.mods.empty()) X.d.push_back(Mat(0, X.mods[0].ngens, R->cover()));
  for (size_t k = 0; k < diffs.size(); ++k) {
    Mat m = mat_reduce(*R, std::move(diffs[k]));
    if (m.rows != X.mods[k].ngens || m.ncols() != X.mods[k + 1].ngens)
      throw std::invalid_argument("differential shape does not match the ranks");
    X.d.push_back(std::move(m));
  }
  return X;
}

FPModule Complex::at(int i) const {
  if (i < lo || i > hi()) return FPModule::zero(ring);
  return mods[i - lo];
}

int Complex::rank(int i) const { return (i < lo || i > hi()) ? 0 : mods[i - lo].ngens; }

std::vector<int> Complex::twists(int i) const {
  return (i < lo || i > hi()) ? std::vector<int>{} : mods[i - lo].twists;
}

Mat Complex::diff(int i) const {
  if (i <= lo || i > hi()) return Mat(rank(i - 1), rank(i), ring->cover());
  return d[i - lo];
}

void Complex::set_diff(int i, Mat m) {
  if (i <= lo || i > hi()) throw std::out_of_range("differential index outside the complex");
  d[i - lo] = std::move(m);
}

bool Complex::is_free() const {
  for (auto& m : mods)
    if (!m.is_free()) return false;
  return true;
}

bool Complex::homogeneous() const {
  if (!ring->graded_local()) return false;
  for (auto& m : mods)
    if (!m.homogeneous()) return false;
  for (int i = lo + 1; i <= hi(); ++i) {
    const Mat& D = d[i - lo];
    auto ts = twists(i), tt = twists(i - 1);
    for (int c = 0; c < D.ncols(); ++c)
      for (int r = 0; r < D.rows; ++r) {
        const Poly& p = D.at(r, c);
        if (p.is_zero()) continue;
        if (!p.homogeneous() || p.degree() != ts[c] - tt[r]) return false;
      }
  }
  return true;
}

void Complex::validate() const {
  const QuotientRing& R = *ring;
  for (int i = lo + 1; i <= hi(); ++i) {
    const Mat& D = d[i - lo];
    if (D.rows != rank(i - 1) || D.ncols() != rank(i)) throw std::logic_error("differential has the wrong shape");
  }
  for (int i = lo; i <= hi(); ++i) {
    FPModule tgt = at(i - 1);
    if (tgt.ngens > 0 && !mods[i - lo].rels.empty()) {
      Submodule S(R, tgt.ngens, tgt.twists, tgt.rels);
      Mat D = diff(i);
      for (auto& r : mods[i - lo].rels)
        if (!S.contains(mat_vec(R, D, r))) throw std::logic_error("differential does not respect relations");
    }
    FPModule tgt2 = at(i - 2);
    if (tgt2.ngens > 0 && rank(i) > 0) {
      Mat DD = mat_mul(R, diff(i - 1), diff(i));
      Submodule S(R, tgt2.ngens, tgt2.twists, tgt2.rels);
      for (auto& c : DD.cols)
        if (!S.contains(c)) throw std::logic_error("d^2 is not zero");
    }
  }
}

Complex Complex::trimmed() const {
  int a = lo, b = hi();
  while (a <= b && rank(a) == 0) ++a;
  while (b >= a && rank(b) == 0) --b;
  if (a > b) return zero(ring);
  Complex X;
  X.ring = ring;
  X.lo = a;
  for (int i = a; i <= b; ++i) {
    X.mods.push_back(mods[i - lo]);
    X.d.push_back(i == a ? Mat(0, rank(i), ring->cover()) : d[i - lo]);
  }
  return X;
}

std::string Complex::summary() const {
  if (empty()) return "0";
  std::string s;
  for (int i = lo; i <= hi(); ++i) {
    if (!s.empty()) s += " <- ";
    s += "[" + std::to_string(i) + "]" + std::to_string(rank(i));
    if (!mods[i - lo].is_free()) s += "/" + std::to_string(mods[i - lo].rels.size());
  }
  return s;
}

Mat ChainMap::at(const Complex& X, const Complex& Y, int i) const {
  auto it = f.find(i);
  if (it == f.end()) return Mat(Y.rank(i), X.rank(i), X.ring->cover());
  return it->second;
}

void validate_chain_map(const Complex& X, const Complex& Y, const ChainMap& a) {
  const QuotientRing& R = *X.ring;
  int lo = std::min(X.lo, Y.lo), hi = std::max(X.hi(), Y.hi());
  for (int i = lo; i <= hi; ++i) {
    Mat ai = a.at(X, Y, i);
    if (ai.rows != Y.rank(i) || ai.ncols() != X.rank(i)) throw std::logic_error("chain map has the wrong shape");
    FPModule yi = Y.at(i), ym = Y.at(i - 1);
    if (yi.ngens > 0 && !X.at(i).rels.empty()) {
      Submodule S(R, yi.ngens, yi.twists, yi.rels);
      for (auto& r : X.at(i).rels)
        if (!S.contains(mat_vec(R, ai, r))) throw std::logic_error("chain map does not respect relations");
    }
    if (ym.ngens > 0 && X.rank(i) > 0) {
      Mat l = mat_mul(R, a.at(X, Y, i - 1), X.diff(i));
      Mat r = mat_mul(R, Y.diff(i), ai);
      Submodule S(R, ym.ngens, ym.twists, ym.rels);
      for (int c = 0; c < l.ncols(); ++c)
        if (!S.contains(vec_sub(R, l.cols[c], r.cols[c]))) throw std::logic_error("map does not commute with d");
    }
  }
}

Complex shift(const Complex& X, int n) {
  Complex Y = X;
  Y.lo = X.lo + n;
  if (n % 2)
    for (auto& m : Y.d) m = mat_neg(m);
  return Y;
}

namespace {

// Places block B (rows x cols) into M at (r0, c0).
void put_block(Mat& M, const Mat& B, int r0, int c0, bool negate = false) {
  for (int c = 0; c < B.ncols(); ++c)
    for (int r = 0; r < B.rows; ++r) {
      const Poly& p = B.at(r, c);
      if (!p.is_zero()) M.at(r0 + r, c0 + c) = negate ? -p : p;
    }
}

Complex assemble(const QRPtr& R, int lo, int hi, const std::vector<FPModule>& mods, std::vector<Mat>& diffs) {
  Complex X;
  X.ring = R;
  X.lo = lo;
  X.mods = mods;
  X.d = std::move(diffs);
  (void)hi;
  return X.trimmed();
}

}  // namespace

Complex direct_sum(const Complex& X, const Complex& Y) {
  if (X.empty()) return Y;
  if (Y.empty()) return X;
  const QRPtr& R = X.ring;
  int lo = std::min(X.lo, Y.lo), hi = std::max(X.hi(), Y.hi());
  std::vector<FPModule> mods;
  std::vector<Mat> diffs;
  for (int i = lo; i <= hi; ++i) {
    mods.push_back(direct_sum(X.at(i), Y.at(i)));
    Mat D = mat_zero(*R, i == lo ? 0 : X.rank(i - 1) + Y.rank(i - 1), X.rank(i) + Y.rank(i));
    if (i > lo) {
      put_block(D, X.diff(i), 0, 0);
      put_block(D, Y.diff(i), X.rank(i - 1), X.rank(i));
    }
    diffs.push_back(std::move(D));
  }
  return assemble(R, lo, hi, mods, diffs);
}

Complex cone(const Complex& X, const Complex& Y, const ChainMap& a) {
  const QRPtr& R = X.ring;
  if (X.empty()) return Y;
  int lo = Y.empty() ? X.lo + 1 : std::min(X.lo + 1, Y.lo);
  int hi = Y.empty() ? X.hi() + 1 : std::max(X.hi() + 1, Y.hi());
  std::vector<FPModule> mods;
  std::vector<Mat> diffs;
  for (int n = lo; n <= hi; ++n) {
    mods.push_back(direct_sum(X.at(n - 1), Y.at(n)));
    int rows = n == lo ? 0 : X.rank(n - 2) + Y.rank(n - 1);
    Mat D = mat_zero(*R, rows, X.rank(n - 1) + Y.rank(n));
    if (n > lo) {
      put_block(D, X.diff(n - 1), 0, 0, true);
      put_block(D, a.at(X, Y, n - 1), X.rank(n - 2), 0);
      put_block(D, Y.diff(n), X.rank(n - 2), X.rank(n - 1));
    }
    diffs.push_back(std::move(D));
  }
  return assemble(R, lo, hi, mods, diffs);
}

namespace {

FPModule tensor_module(const FPModule& A, const FPModule& B) {
  std::vector<int> tw;
  for (int a = 0; a < A.ngens; ++a)
    for (int b = 0; b < B.ngens; ++b) tw.push_back(A.twists[a] + B.twists[b]);
  FPModule M = FPModule::free(A.ring, A.ngens * B.ngens, tw);
  const QuotientRing& R = *A.ring;
  for (auto& r : A.rels)
    for (int b = 0; b < B.ngens; ++b) {
      Vec v = vec_zero(R, M.ngens);
      for (int a = 0; a < A.ngens; ++a) v[a * B.ngens + b] = r[a];
      M.rels.push_back(std::move(v));
    }
  for (int a = 0; a < A.ngens; ++a)
    for (auto& s : B.rels) {
      Vec v = vec_zero(R, M.ngens);
      for (int b = 0; b < B.ngens; ++b) v[a * B.ngens + b] = s[b];
      M.rels.push_back(std::move(v));
    }
  return M;
}

}  // namespace

Complex tensor(const Complex& X, const Complex& Y) {
  const QRPtr& R = X.ring;
  if (X.empty() || Y.empty()) return Complex::zero(R);
  int lo = X.lo + Y.lo, hi = X.hi() + Y.hi();
  std::vector<FPModule> mods;
  std::vector<Mat> diffs;
  // offset[n][i] = position of block X_i (x) Y_{n-i} inside T_n.
  std::map<int, std::map<int, int>> offset;
  for (int n = lo; n <= hi; ++n) {
    FPModule T = FPModule::zero(R);
    int off = 0;
    for (int i = X.lo; i <= X.hi(); ++i) {
      int j = n - i;
      if (j < Y.lo || j > Y.hi()) continue;
      offset[n][i] = off;
      FPModule blk = tensor_module(X.at(i), Y.at(j));
      off += blk.ngens;
      T = direct_sum(T, blk);
    }
    mods.push_back(T);
  }
  for (int n = lo; n <= hi; ++n) {
    int rows = n == lo ? 0 : mods[n - 1 - lo].ngens;
    Mat D = mat_zero(*R, rows, mods[n - lo].ngens);
    if (n > lo) {
      for (auto [i, off] : offset[n]) {
        int j = n - i;
        int gy = Y.rank(j);
        // d x (x) y
        if (offset[n - 1].count(i - 1)) {
          int toff = offset[n - 1][i - 1];
          Mat dx = X.diff(i);
          for (int a = 0; a < X.rank(i); ++a)
            for (int b = 0; b < gy; ++b)
              for (int a2 = 0; a2 < X.rank(i - 1); ++a2) {
                const Poly& p = dx.at(a2, a);
                if (!p.is_zero()) D.at(toff + a2 * gy + b, off + a * gy + b) = p;
              }
        }
        // (-1)^i x (x) d y
        if (offset[n - 1].count(i)) {
          int toff = offset[n - 1][i];
          Mat dy = Y.diff(j);
          int gy2 = Y.rank(j - 1);
          for (int a = 0; a < X.rank(i); ++a)
            for (int b = 0; b < gy; ++b)
              for (int b2 = 0; b2 < gy2; ++b2) {
                const Poly& p = dy.at(b2, b);
                if (!p.is_zero()) D.at(toff + a * gy2 + b2, off + a * gy + b) = (i % 2) ? -p : p;
              }
        }
      }
    }
    diffs.push_back(std::move(D));
  }
  return assemble(R, lo, hi, mods, diffs);
}

std::vector<HomIndex> hom_basis(const Complex& F, const Complex& Y, int n) {
  std::vector<HomIndex> out;
  for (int i = F.lo; i <= F.hi(); ++i) {
    int j = i + n;
    if (j < Y.lo || j > Y.hi()) continue;
    for (int a = 0; a < F.rank(i); ++a)
      for (int b = 0; b < Y.rank(j); ++b) out.push_back({i, a, b});
  }
  return out;
}

Complex hom(const Complex& F, const Complex& Y) {
  const QRPtr& R = F.ring;
  if (!F.is_free()) throw std::invalid_argument("hom needs a free first argument");
  if (F.empty() || Y.empty()) return Complex::zero(R);
  int lo = Y.lo - F.hi(), hi = Y.hi() - F.lo;
  std::vector<FPModule> mods;
  std::vector<Mat> diffs;
  std::map<int, std::map<int, int>> offset;
  for (int n = lo; n <= hi; ++n) {
    std::vector<int> tw;
    std::vector<Vec> rels;
    int total = 0;
    for (int i = F.lo; i <= F.hi(); ++i) {
      int j = i + n;
      if (j < Y.lo || j > Y.hi()) continue;
      offset[n][i] = total;
      total += F.rank(i) * Y.rank(j);
    }
    for (int i = F.lo; i <= F.hi(); ++i) {
      int j = i + n;
      if (!offset[n].count(i)) continue;
      FPModule yj = Y.at(j);
      auto tf = F.twists(i);
      for (int a = 0; a < F.rank(i); ++a) {
        for (int b = 0; b < yj.ngens; ++b) tw.push_back(yj.twists[b] - tf[a]);
        for (auto& s : yj.rels) {
          Vec v = vec_zero(*R, total);
          for (int b = 0; b < yj.ngens; ++b) v[offset[n][i] + a * yj.ngens + b] = s[b];
          rels.push_back(std::move(v));
        }
      }
    }
    FPModule M = FPModule::free(R, total, tw);
    M.rels = std::move(rels);
    mods.push_back(std::move(M));
  }
  for (int n = lo; n <= hi; ++n) {
    int rows = n == lo ? 0 : mods[n - 1 - lo].ngens;
    Mat D = mat_zero(*R, rows, mods[n - lo].ngens);
    if (n > lo) {
      bool odd = n % 2;
      for (auto [i, off] : offset[n]) {
        int j = i + n;
        int gy = Y.rank(j);
        // d_Y o phi lands in Hom(F_i, Y_{j-1}).
        if (offset[n - 1].count(i)) {
          int toff = offset[n - 1][i];
          Mat dy = Y.diff(j);
          int gy2 = Y.rank(j - 1);
          for (int a = 0; a < F.rank(i); ++a)
            for (int b = 0; b < gy; ++b)
              for (int b2 = 0; b2 < gy2; ++b2) {
                const Poly& p = dy.at(b2, b);
                if (!p.is_zero()) D.at(toff + a * gy2 + b2, off + a * gy + b) = p;
              }
        }
        // -(-1)^n phi o d_F lands in Hom(F_{i+1}, Y_j).
        if (offset[n - 1].count(i + 1)) {
          int toff = offset[n - 1][i + 1];
          Mat df = F.diff(i + 1);
          for (int a = 0; a < F.rank(i); ++a)
            for (int b = 0; b < gy; ++b)
              for (int a2 = 0; a2 < F.rank(i + 1); ++a2) {
                const Poly& p = df.at(a, a2);
                if (!p.is_zero()) D.at(toff + a2 * gy + b, off + a * gy + b) = odd ? p : -p;
              }
        }
      }
    }
    diffs.push_back(std::move(D));
  }
  return assemble(R, lo, hi, mods, diffs);
}

Homology homology(const Complex& X, int i) {
  const QuotientRing& R = *X.ring;
  Homology h;
  h.module = FPModule::zero(X.ring);
  int g = X.rank(i);
  if (g == 0) return h;
  auto tw = X.twists(i);
  FPModule below = X.at(i - 1);
  std::vector<Vec> K;
  if (below.ngens == 0)
    for (int j = 0; j < g; ++j) K.push_back(unit_vec(R, g, j));
  else
    K = kernel_mod(R, X.diff(i), below.rels, below.twists, tw);
  if (K.empty()) return h;
  std::vector<Vec> Bd = X.at(i).rels;
  for (auto& c : X.diff(i + 1).cols)
    if (!vec_is_zero(c)) Bd.push_back(c);
  std::vector<int> keep = prune_generators(R, g, tw, K, Bd);
  if (keep.empty()) return h;
  Mat Z;
  Z.rows = g;
  std::vector<int> htw;
  for (int k : keep) {
    Z.cols.push_back(K[k]);
    htw.push_back(vec_degree(K[k], tw));
  }
  std::vector<Vec> rels = kernel_mod(R, Z, Bd, tw, htw);
  FPModule H = FPModule::free(X.ring, Z.ncols(), htw);
  for (int k : prune_generators(R, H.ngens, htw, rels, {})) H.rels.push_back(rels[k]);
  h.module = std::move(H);
  h.cycles = std::move(Z.cols);
  return h;
}

std::map<int, FPModule> all_homology(const Complex& X) {
  std::map<int, FPModule> H;
  for (int i = X.lo; i <= X.hi(); ++i) {
    Homology h = homology(X, i);
    if (h.module.ngens > 0) H.emplace(i, std::move(h.module));
  }
  return H;
}

Bounds bounds_of(const std::map<int, FPModule>& H) {
  if (H.empty()) return {ExtInt::pos_inf(), ExtInt::neg_inf(), ExtInt::neg_inf()};
  ExtInt inf(H.begin()->first), sup(H.rbegin()->first);
  return {inf, sup, sup - inf};
}

Bounds inf_sup_amp(const Complex& X) { return bounds_of(all_homology(X)); }

bool is_exact(const Complex& X) {
  for (int i = X.lo; i <= X.hi(); ++i)
    if (homology(X, i).module.ngens > 0) return false;
  return true;
}

Fingerprint fingerprint(const std::map<int, FPModule>& H, bool graded) {
  Fingerprint f;
  for (auto& [i, M0] : H) {
    FPModule M = minimize(M0);
    FingerprintEntry e{i, -1, {}, 0, 0, ""};
    Ideal ann = annihilator(M);
    e.ann = ann.to_string();
    e.dim = ann.krull_dim();
    e.length = vector_space_dim(M);
    if (graded && M.homogeneous()) {
      e.min_gens = M.ngens;
      int d0 = *std::min_element(M.twists.begin(), M.twists.end());
      e.hilbert = hilbert_function(M, d0, d0 + 6);
    }
    f.push_back(std::move(e));
  }
  return f;
}

Fingerprint fingerprint(const Complex& X) { return fingerprint(all_homology(X), X.homogeneous()); }

std::string fingerprint_string(const Fingerprint& f) {
  if (f.empty()) return "{}";
  std::string s;
  for (auto& e : f) {
    if (!s.empty()) s += "; ";
    s += "H" + std::to_string(e.index) + ":";
    if (e.min_gens >= 0) {
      s += " gens=" + std::to_string(e.min_gens) + " hf=";
      for (size_t k = 0; k < e.hilbert.size(); ++k) s += (k ? "," : "") + std::to_string(e.hilbert[k]);
    }
    s += " dim=" + std::to_string(e.dim);
    if (e.length >= 0) s += " len=" + std::to_string(e.length);
    s += " ann=" + e.ann;
  }
  return s;
}

Bounds localized_bounds(const std::map<int, FPModule>& H, const Ideal& p) {
  std::map<int, FPModule> L;
  for (auto& [i, M] : H)
    if (p.contains(annihilator(M))) L.emplace(i, M);
  return bounds_of(L);
}

Bounds localized_bounds(const Complex& X, const Ideal& p) { return localized_bounds(all_homology(X), p); }

Bounds semilocal_bounds(const std::map<int, FPModule>& H, const std::vector<Ideal>& maxes) {
  std::map<int, FPModule> L;
  for (auto& [i, M] : H) {
    Ideal a = annihilator(M);
    for (auto& q : maxes)
      if (q.contains(a)) {
        L.emplace(i, M);
        break;
      }
  }
  return bounds_of(L);
}

std::vector<LocalEntry> local_fingerprint(const std::map<int, FPModule>& H, const Ideal& p) {
  std::vector<LocalEntry> out;
  for (auto& [i, M] : H) {
    Ideal a = annihilator(M);
    if (!p.contains(a)) continue;
    out.push_back({i, local_num_gens(M, p), a});
  }
  return out;
}

bool local_fingerprints_equal(const std::vector<LocalEntry>& a, const std::vector<LocalEntry>& b, const Ideal& p) {
  if (a.size() != b.size()) return false;
  for (size_t k = 0; k < a.size(); ++k) {
    if (a[k].index != b[k].index || a[k].num_gens != b[k].num_gens) return false;
    if (!locally_equal(a[k].ann, b[k].ann, p)) return false;
  }
  return true;
}

}  // namespace semidual
