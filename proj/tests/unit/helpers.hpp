#pragma once

#include <string>
#include <vector>

#include "semidual/resolution.hpp"

namespace th {

using namespace semidual;

inline const PolyRing* poly_ring(std::vector<std::string> v, Field f = Field{32003}) { return PolyRing::make(v, f); }

inline QRPtr qring(std::vector<std::string> vars, std::vector<std::string> gens = {}) {
  const PolyRing* P = poly_ring(vars);
  std::vector<Poly> g;
  for (auto& s : gens) g.push_back(parse_poly(P, s));
  return QuotientRing::make(P, g);
}

inline Ideal cover_ideal(const QRPtr& R, std::vector<std::string> gens) {
  std::vector<Poly> g = R->ideal().gens();
  for (auto& s : gens) g.push_back(R->parse(s));
  return Ideal(R->cover(), g);
}

// Rows of entries; returned by columns.
inline Mat mat(const QRPtr& R, std::vector<std::vector<std::string>> rows) {
  int r = static_cast<int>(rows.size()), c = r ? static_cast<int>(rows[0].size()) : 0;
  Mat M(r, c, R->cover());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) M.at(i, j) = R->parse(rows[i][j]);
  return M;
}

inline FPModule cyclic(const QRPtr& R, std::vector<std::string> gens, int twist = 0) {
  std::vector<Poly> g;
  for (auto& s : gens) g.push_back(R->parse(s));
  return FPModule::cyclic(R, g, twist);
}

inline Complex koszul2(const QRPtr& R, const std::string& a, const std::string& b) {
  std::vector<FPModule> m{FPModule::free(R, 1, {0}), FPModule::free(R, 2, {1, 1}), FPModule::free(R, 1, {2})};
  return Complex::make(R, 0, m, {mat(R, {{a, b}}), mat(R, {{"-(" + b + ")"}, {a}})});
}

inline std::vector<int> ranks(const Complex& X, int lo, int hi) {
  std::vector<int> r;
  for (int i = lo; i <= hi; ++i) r.push_back(X.rank(i));
  return r;
}

inline std::vector<int> indices(const std::map<int, FPModule>& H) {
  std::vector<int> v;
  for (auto& [i, m] : H) v.push_back(i);
  return v;
}

}  // namespace th
