#include "semidual/derived.hpp"

#include <mutex>
#include <stdexcept>

namespace semidual {

std::string Window::tag_name() const {
  switch (tag) {
    case Tag::FinitePd: return "finite-pd";
    case Tag::AbWindow: return "ab-window";
    case Tag::User: return "user";
  }
  return "";
}

std::string Window::to_string() const {
  if (is_exact()) return "finite-pd";
  std::string s = tag_name() + "(" + std::to_string(N) + ") degrees ";
  s += valid_lo == INT_MIN ? "(-inf" : "[" + std::to_string(valid_lo);
  s += ", ";
  s += valid_hi == INT_MAX ? "inf)" : std::to_string(valid_hi) + "]";
  return s;
}

Window Window::meet(const Window& o) const {
  if (is_exact()) return o;
  if (o.is_exact()) return *this;
  Window w = *this;
  w.valid_lo = std::max(valid_lo, o.valid_lo);
  w.valid_hi = std::min(valid_hi, o.valid_hi);
  w.N = std::min(N, o.N);
  return w;
}

std::string DObj::describe() const {
  if (kind == Kind::Honest) return X.summary();
  return "D(" + X.summary() + "), s=" + std::to_string(s);
}

Complex p_model(const DObj& A) {
  if (!A.is_dual()) return to_cover(A.X);
  Complex W = to_cover(A.X.trimmed());
  QRPtr P = W.ring;
  if (W.empty()) return Complex::zero(P);
  int cutoff = W.hi() + P->nvars() + 8;
  Replacement q = free_replacement(W, cutoff);
  if (!q.terminated) throw std::runtime_error("resolution over the cover did not terminate");
  return shift(hom(q.F, Complex::concentrated(FPModule::free(P, 1), 0)), A.s);
}

std::map<int, FPModule> homology_of(const DObj& A) {
  if (!A.is_dual()) return all_homology(A.X);
  std::map<int, FPModule> H;
  for (auto& [i, M] : all_homology(p_model(A))) H.emplace(i, minimize(change_ring(M, A.ring())));
  return H;
}

std::map<int, FPModule> homology_of(const Derived& A) {
  std::map<int, FPModule> H;
  for (auto& [i, M] : homology_of(A.obj))
    if (A.w.covers(i)) H.emplace(i, M);
  return H;
}

Bounds bounds_of(const DObj& A) { return bounds_of(homology_of(A)); }

DObj dualizing_complex(const QRPtr& R, bool normalize) {
  return DObj::dual(Complex::concentrated(FPModule::free(R, 1), 0), normalize ? R->nvars() : 0);
}

Bounds dualizing_bounds(const QRPtr& R, int s) {
  static std::mutex mu;
  static std::map<std::string, Bounds> cache;
  std::string key = R->describe() + "|" + std::to_string(s);
  {
    std::lock_guard<std::mutex> g(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Bounds b = bounds_of(DObj::dual(Complex::concentrated(FPModule::free(R, 1), 0), s));
  std::lock_guard<std::mutex> g(mu);
  cache.emplace(key, b);
  return b;
}

DObj dagger(const DObj& A, int s) {
  if (!A.is_dual()) return DObj::dual(A.X, s);
  if (A.s != s) throw std::invalid_argument("dualizing shifts differ");
  return DObj::honest(A.X);
}

std::optional<Complex> as_complex(const DObj& A) {
  if (!A.is_dual()) return A.X;
  auto H = homology_of(A);
  if (H.empty()) return Complex::zero(A.ring());
  if (H.size() > 1) return std::nullopt;
  return Complex::concentrated(H.begin()->second, H.begin()->first);
}

namespace {

// Window of D(Y) given the window of Y.
Window dual_window(const Window& w, const QRPtr& R, int s) {
  if (w.is_exact()) return w;
  Bounds b = dualizing_bounds(R, s);
  Window o = w;
  o.valid_hi = w.valid_lo == INT_MIN ? INT_MAX : static_cast<int>(b.inf.value()) - w.valid_lo - 1;
  o.valid_lo = w.valid_hi == INT_MAX ? INT_MIN : static_cast<int>(b.sup.value()) - w.valid_hi + 1;
  return o;
}

Window cut(Window::Tag tag, int N, int lo, int hi) {
  Window w;
  w.tag = tag;
  w.N = N;
  w.valid_lo = lo;
  w.valid_hi = hi;
  return w;
}

Derived rhom_complexes(const Complex& A, const Complex& B, int N, Window::Tag tag) {
  Complex Bt = B.trimmed();
  if (Bt.empty()) return {DObj::honest(Complex::zero(A.ring)), Window::exact()};
  Replacement r = free_replacement(A, N);
  Complex E = hom(r.F, Bt);
  if (r.terminated) return {DObj::honest(E), Window::exact()};
  return {DObj::honest(E), cut(tag, N, Bt.hi() - N + 1, INT_MAX)};
}

Derived tensor_complexes(const Complex& A, const Complex& B, int N, Window::Tag tag) {
  Complex At = A.trimmed(), Bt = B.trimmed();
  if (At.empty() || Bt.empty()) return {DObj::honest(Complex::zero(A.ring)), Window::exact()};
  Replacement ra = free_replacement(At, N);
  if (ra.terminated) return {DObj::honest(tensor(ra.F, Bt)), Window::exact()};
  Replacement rb = free_replacement(Bt, N);
  if (rb.terminated) return {DObj::honest(tensor(At, rb.F)), Window::exact()};
  return {DObj::honest(tensor(ra.F, Bt)), cut(tag, N, INT_MIN, N + Bt.lo - 1)};
}

}  // namespace

Derived rhom(const DObj& A, const DObj& B, int N, Window::Tag tag) {
  if (!A.is_dual() && !B.is_dual()) return rhom_complexes(A.X, B.X, N, tag);
  if (!A.is_dual()) {
    // RHom(A, D(W)) = D(A (x) W)
    Derived t = tensor_complexes(A.X, B.X, N, tag);
    return {DObj::dual(t.obj.X, B.s), dual_window(t.w, A.ring(), B.s)};
  }
  if (B.is_dual()) return rhom_complexes(B.X, A.X, N, tag);
  // RHom(D(V), Y) = RHom(D(Y), V)
  auto dy = as_complex(DObj::dual(B.X, A.s));
  if (!dy) throw std::domain_error("RHom out of a dual object needs D(target) of amplitude 0");
  return rhom_complexes(*dy, A.X, N, tag);
}

Derived derived_tensor(const DObj& A, const DObj& B, int N, Window::Tag tag) {
  if (!A.is_dual() && !B.is_dual()) return tensor_complexes(A.X, B.X, N, tag);
  if (A.is_dual() && B.is_dual()) {
    if (auto a = as_complex(A)) return derived_tensor(DObj::honest(*a), B, N, tag);
    if (auto b = as_complex(B)) return derived_tensor(A, DObj::honest(*b), N, tag);
    throw std::domain_error("tensor of two dual objects of positive amplitude");
  }
  const DObj& H = A.is_dual() ? B : A;
  const DObj& Dw = A.is_dual() ? A : B;
  // X (x) D(W) = D(RHom(X, W))
  Derived r = rhom_complexes(H.X, Dw.X, N, tag);
  return {DObj::dual(r.obj.X, Dw.s), dual_window(r.w, H.ring(), Dw.s)};
}

DObj shift(const DObj& A, int n) {
  if (!A.is_dual()) return DObj::honest(shift(A.X, n));
  return DObj::dual(shift(A.X, -n), A.s);
}

Complex koszul(const QRPtr& R, const std::vector<Poly>& xs) {
  int n = static_cast<int>(xs.size());
  std::vector<std::vector<int>> subsets_by_size(n + 1);
  std::map<int, int> pos;  // bitmask -> index within its size
  for (int mask = 0; mask < (1 << n); ++mask) {
    int k = __builtin_popcount(mask);
    pos[mask] = static_cast<int>(subsets_by_size[k].size());
    subsets_by_size[k].push_back(mask);
  }
  std::vector<FPModule> mods;
  std::vector<Mat> diffs;
  for (int k = 0; k <= n; ++k) {
    std::vector<int> tw;
    for (int mask : subsets_by_size[k]) {
      int t = 0;
      for (int j = 0; j < n; ++j)
        if (mask >> j & 1) t += xs[j].degree();
      tw.push_back(t);
    }
    mods.push_back(FPModule::free(R, static_cast<int>(tw.size()), tw));
    if (k == 0) continue;
    Mat D = mat_zero(*R, static_cast<int>(subsets_by_size[k - 1].size()), static_cast<int>(tw.size()));
    for (size_t c = 0; c < subsets_by_size[k].size(); ++c) {
      int mask = subsets_by_size[k][c], sign = 0;
      for (int j = 0; j < n; ++j) {
        if (!(mask >> j & 1)) continue;
        Poly x = R->reduce(xs[j]);
        D.at(pos[mask ^ (1 << j)], static_cast<int>(c)) = (sign % 2) ? -x : x;
        ++sign;
      }
    }
    diffs.push_back(std::move(D));
  }
  return Complex::make(R, 0, mods, diffs);
}

namespace {

std::vector<Poly> variables(const PolyRing* P) {
  std::vector<Poly> v;
  for (int i = 0; i < P->nvars(); ++i) v.push_back(Poly::variable(P, i));
  return v;
}

}  // namespace

ExtInt depth(const DObj& A) {
  const QRPtr& R = A.ring();
  if (!R->graded_local()) throw std::domain_error("depth needs a graded-local ring");
  Complex X = A.is_dual() ? p_model(A) : A.X;
  Complex K = koszul(X.ring, variables(R->cover()));
  Bounds b = inf_sup_amp(tensor(K, X));
  if (b.sup.is_neg_inf()) return ExtInt::pos_inf();
  return ExtInt(R->nvars()) - b.sup;
}

ExtInt depth(const FPModule& M) { return depth(DObj::module(M)); }

LaurentPoly LaurentPoly::truncated(int hi) const {
  LaurentPoly o;
  for (auto [e, v] : c)
    if (e <= hi && v != 0) o.c[e] = v;
  return o;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (auto [e, v] : c)
    for (auto [f, w] : o.c) r.c[e + f] += v * w;
  return r.truncated(INT_MAX);
}

bool LaurentPoly::operator==(const LaurentPoly& o) const { return truncated(INT_MAX).c == o.truncated(INT_MAX).c; }

std::string LaurentPoly::to_string() const {
  std::string s;
  for (auto [e, v] : c) {
    if (v == 0) continue;
    if (!s.empty()) s += " + ";
    s += std::to_string(v) + "*t^" + std::to_string(e);
  }
  return s.empty() ? "0" : s;
}

FPModule residue_field(const QRPtr& R) { return FPModule::cyclic(R, variables(R->cover())); }

int dualized_residue_shift(const QRPtr& R, int s) {
  static std::mutex mu;
  static std::map<std::string, int> cache;
  std::string key = R->describe() + "|" + std::to_string(s);
  {
    std::lock_guard<std::mutex> g(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto H = homology_of(DObj::dual(Complex::concentrated(residue_field(R), 0), s));
  if (H.size() != 1 || vector_space_dim(H.begin()->second) != 1)
    throw std::logic_error("D(k) is not a shift of k");
  int a = H.begin()->first;
  std::lock_guard<std::mutex> g(mu);
  cache.emplace(key, a);
  return a;
}

LaurentPoly poincare_series(const DObj& A, int N) {
  const QRPtr& R = A.ring();
  if (!R->graded_local()) throw std::domain_error("Betti numbers need a graded-local ring");
  LaurentPoly p;
  if (A.is_dual()) {
    int a = dualized_residue_shift(R, A.s);
    for (auto [e, v] : bass_series(DObj::honest(A.X), N - a).c) p.c[e + a] = v;
    return p;
  }
  Replacement r = free_replacement(A.X, N + 1);
  for (int i = r.F.lo; i <= std::min(N, r.F.hi()); ++i)
    if (r.F.rank(i)) p.c[i] = r.F.rank(i);
  return p;
}

LaurentPoly bass_series(const DObj& A, int N) {
  const QRPtr& R = A.ring();
  if (!R->graded_local()) throw std::domain_error("Bass numbers need a graded-local ring");
  LaurentPoly p;
  if (A.is_dual()) {
    int a = dualized_residue_shift(R, A.s);
    for (auto [e, v] : poincare_series(DObj::honest(A.X), N + a).c) p.c[e - a] = v;
    return p;
  }
  Complex X = A.X.trimmed();
  if (X.empty()) return p;
  int M = N + X.hi() + 1;
  Complex E = hom(free_resolution(residue_field(R), M).F, X);
  for (int d = std::max(E.lo, -N); d <= E.hi(); ++d) {
    Homology h = homology(E, d);
    if (h.module.ngens == 0) continue;
    long dim = vector_space_dim(h.module);
    if (dim < 0) throw std::logic_error("Ext(k, X) is not of finite length");
    if (dim) p.c[-d] = dim;
  }
  return p;
}

}  // namespace semidual
