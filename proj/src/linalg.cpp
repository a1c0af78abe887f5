#include "semidual/linalg.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace semidual {

namespace {

void append_vec(SVec& out, const Vec& v, int offset) {
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    for (auto& t : v[i].terms()) out.push_back({t.m, offset + i, t.c});
}

Vec svec_to_vec(const PolyRing* P, const SVec& s, int offset, int n) {
  std::vector<std::vector<Term>> parts(n);
  for (auto& t : s) {
    int c = t.comp - offset;
    if (c >= 0 && c < n) parts[c].push_back({t.m, t.c});
  }
  Vec v;
  v.reserve(n);
  for (int i = 0; i < n; ++i) {
    Poly p(P);
    // Terms arrive sorted descending within a component.
    p.mutable_terms() = std::move(parts[i]);
    v.push_back(std::move(p));
  }
  return v;
}

void add_ideal_multiples(ModuleGB& gb, const QuotientRing& R, int from, int to) {
  for (auto& g : R.ideal().gb())
    for (int c = from; c < to; ++c) gb.add(poly_to_svec(g, c));
}

}  // namespace

bool Mat::is_zero() const {
  for (auto& c : cols)
    if (!vec_is_zero(c)) return false;
  return true;
}

Vec vec_zero(const QuotientRing& R, int n) { return Vec(n, Poly(R.cover())); }

Vec unit_vec(const QuotientRing& R, int n, int i) {
  Vec v = vec_zero(R, n);
  v[i] = R.reduce(R.one());
  return v;
}

bool vec_is_zero(const Vec& v) {
  for (auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

Vec vec_add(const QuotientRing&, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const QuotientRing&, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scale(const QuotientRing& R, const Vec& a, const Poly& f) {
  Vec r(a.size(), Poly(R.cover()));
  if (f.is_zero()) return r;
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) r[i] = R.reduce(a[i] * f);
  return r;
}

Vec vec_neg(const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vec mat_vec(const QuotientRing& R, const Mat& A, const Vec& v) {
  Vec r = vec_zero(R, A.rows);
  for (int j = 0; j < A.ncols(); ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < A.rows; ++i)
      if (!A.cols[j][i].is_zero()) r[i] += A.cols[j][i] * v[j];
  }
  for (auto& p : r) p = R.reduce(p);
  return r;
}

Mat mat_mul(const QuotientRing& R, const Mat& A, const Mat& B) {
  Mat C;
  C.rows = A.rows;
  for (auto& col : B.cols) C.cols.push_back(mat_vec(R, A, col));
  return C;
}

Mat mat_zero(const QuotientRing& R, int rows, int cols) { return Mat(rows, cols, R.cover()); }

Mat mat_identity(const QuotientRing& R, int n) {
  Mat M = mat_zero(R, n, n);
  for (int i = 0; i < n; ++i) M.at(i, i) = R.one();
  return M;
}

Mat mat_neg(const Mat& A) {
  Mat M = A;
  for (auto& c : M.cols) c = vec_neg(c);
  return M;
}

Mat mat_reduce(const QuotientRing& R, Mat A) {
  for (auto& c : A.cols)
    for (auto& p : c) p = R.reduce(p);
  return A;
}

int vec_degree(const Vec& v, const std::vector<int>& twists) {
  int d = INT_MIN;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) d = std::max(d, v[i].degree() + (i < twists.size() ? twists[i] : 0));
  return d;
}

bool vec_homogeneous(const Vec& v, const std::vector<int>& twists) {
  int d = INT_MIN;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!v[i].homogeneous()) return false;
    int e = v[i].degree() + (i < twists.size() ? twists[i] : 0);
    if (d != INT_MIN && e != d) return false;
    d = e;
  }
  return true;
}

std::string vec_string(const Vec& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + "]";
}

Submodule::Submodule(const QuotientRing& R, int n, std::vector<int> twists, const std::vector<Vec>& gens)
    : R_(&R), n_(n), gb_(ModuleOrder(R.cover(), std::move(twists))) {
  for (auto& g : gens) {
    SVec s;
    append_vec(s, g, 0);
    gb_.add(svec_normalize(gb_.order(), std::move(s)));
  }
  add_ideal_multiples(gb_, R, 0, n);
  gb_.complete();
}

Vec Submodule::reduce(const Vec& v) const {
  SVec s;
  append_vec(s, v, 0);
  return svec_to_vec(R_->cover(), gb_.reduce(svec_normalize(gb_.order(), std::move(s))), 0, n_);
}

bool Submodule::contains(const Vec& v) const {
  SVec s;
  append_vec(s, v, 0);
  return gb_.reduce(svec_normalize(gb_.order(), std::move(s))).empty();
}

void Submodule::add(const Vec& v) {
  SVec s;
  append_vec(s, v, 0);
  gb_.insert_complete(svec_normalize(gb_.order(), std::move(s)));
}

bool Submodule::is_everything() const {
  std::vector<bool> hit(n_, false);
  for (auto& [m, c] : gb_.leading_terms())
    if (m.is_one()) hit[c] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::vector<Vec> kernel_mod(const QuotientRing& R, const Mat& A, const std::vector<Vec>& B,
                            const std::vector<int>& target_twists, const std::vector<int>& source_twists) {
  const int r = A.rows, m = A.ncols();
  std::vector<Vec> out;
  if (m == 0) return out;
  if (r == 0) {
    for (int j = 0; j < m; ++j) out.push_back(unit_vec(R, m, j));
    return out;
  }
  std::vector<int> tw(r + m), bl(r + m, 0);
  for (int i = 0; i < r; ++i) tw[i] = i < static_cast<int>(target_twists.size()) ? target_twists[i] : 0;
  for (int j = 0; j < m; ++j) {
    tw[r + j] = j < static_cast<int>(source_twists.size()) ? source_twists[j] : 0;
    bl[r + j] = 1;
  }
  ModuleGB gb(ModuleOrder(R.cover(), tw, bl));
  for (int j = 0; j < m; ++j) {
    SVec s;
    append_vec(s, A.cols[j], 0);
    s.push_back({Monomial{}, r + j, R.cover()->scalar(1)});
    gb.add(svec_normalize(gb.order(), std::move(s)));
  }
  for (auto& b : B) {
    SVec s;
    append_vec(s, b, 0);
    gb.add(svec_normalize(gb.order(), std::move(s)));
  }
  add_ideal_multiples(gb, R, 0, r + m);
  gb.complete();
  for (auto& v : gb.reduced_basis()) {
    if (v[0].comp < r) continue;
    Vec k = svec_to_vec(R.cover(), v, r, m);
    for (auto& p : k) p = R.reduce(p);
    if (!vec_is_zero(k)) out.push_back(std::move(k));
  }
  return out;
}

std::optional<Vec> solve_mod(const QuotientRing& R, const Mat& A, const Vec& b, const std::vector<Vec>& B,
                             const std::vector<int>& target_twists, const std::vector<int>& source_twists) {
  const int r = A.rows, m = A.ncols();
  if (vec_is_zero(b)) return vec_zero(R, m);
  std::vector<int> tw(r + m), bl(r + m, 0);
  for (int i = 0; i < r; ++i) tw[i] = i < static_cast<int>(target_twists.size()) ? target_twists[i] : 0;
  for (int j = 0; j < m; ++j) {
    tw[r + j] = j < static_cast<int>(source_twists.size()) ? source_twists[j] : 0;
    bl[r + j] = 1;
  }
  ModuleGB gb(ModuleOrder(R.cover(), tw, bl));
  for (int j = 0; j < m; ++j) {
    SVec s;
    append_vec(s, A.cols[j], 0);
    s.push_back({Monomial{}, r + j, R.cover()->scalar(1)});
    gb.add(svec_normalize(gb.order(), std::move(s)));
  }
  for (auto& x : B) {
    SVec s;
    append_vec(s, x, 0);
    gb.add(svec_normalize(gb.order(), std::move(s)));
  }
  add_ideal_multiples(gb, R, 0, r + m);
  gb.complete();
  SVec s;
  append_vec(s, b, 0);
  SVec red = gb.reduce(svec_normalize(gb.order(), std::move(s)));
  if (!red.empty() && red[0].comp < r) return std::nullopt;
  Vec c = svec_to_vec(R.cover(), red, r, m);
  for (auto& p : c) p = R.reduce(-p);
  return c;
}

std::vector<int> prune_generators(const QuotientRing& R, int n, const std::vector<int>& twists,
                                  const std::vector<Vec>& cands, const std::vector<Vec>& base) {
  std::vector<int> order(cands.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> deg(cands.size());
  for (size_t i = 0; i < cands.size(); ++i) deg[i] = vec_degree(cands[i], twists);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] < deg[b]; });
  Submodule S(R, n, twists, base);
  std::vector<int> kept;
  for (int i : order) {
    if (vec_is_zero(cands[i]) || S.contains(cands[i])) continue;
    kept.push_back(i);
    S.add(cands[i]);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace semidual
