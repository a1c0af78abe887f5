#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "semidual/field.hpp"

namespace semidual {

constexpr int kMaxVars = 8;

struct Monomial {
  std::array<uint16_t, kMaxVars> e{};

  bool operator==(const Monomial&) const = default;
  bool is_one() const;
  bool divides(const Monomial& o) const;
  uint32_t mask() const;
  Monomial operator*(const Monomial& o) const;
  // Exact quotient; requires o | *this.
  Monomial operator/(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);
};

// Polynomial ring over a field with degrevlex order refined by positive weights.
// Rings are interned: equal descriptions yield the same pointer, which stays valid
// for the life of the process.
class PolyRing {
 public:
  static const PolyRing* make(std::vector<std::string> vars, Field f, std::vector<int> weights = {});

  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<int>& weights() const { return weights_; }
  const Field& field() const { return field_; }
  int var_index(const std::string& name) const;

  int deg(const Monomial& m) const {
    int d = 0;
    for (int i = 0; i < nvars(); ++i) d += weights_[i] * m.e[i];
    return d;
  }
  // Positive when a > b.
  int cmp(const Monomial& a, const Monomial& b) const {
    int da = deg(a), db = deg(b);
    if (da != db) return da > db ? 1 : -1;
    for (int i = nvars() - 1; i >= 0; --i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
  }
  FieldElem scalar(long v) const { return FieldElem(field_, v); }
  std::string mono_string(const Monomial& m) const;
  std::string describe() const;

 private:
  PolyRing() = default;
  std::vector<std::string> vars_;
  std::vector<int> weights_;
  Field field_;
};

struct Term {
  Monomial m;
  FieldElem c;
};

class Poly {
 public:
  Poly() = default;
  explicit Poly(const PolyRing* r) : ring_(r) {}

  static Poly constant(const PolyRing* r, const FieldElem& c);
  static Poly constant(const PolyRing* r, long c) { return constant(r, r->scalar(c)); }
  static Poly variable(const PolyRing* r, int i);
  static Poly monomial(const PolyRing* r, const Monomial& m, const FieldElem& c);
  // Sorts and combines arbitrary terms.
  static Poly from_terms(const PolyRing* r, std::vector<Term> terms);

  const PolyRing* ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::vector<Term>& mutable_terms() { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  // Nonzero constant.
  bool is_unit_constant() const { return terms_.size() == 1 && terms_[0].m.is_one(); }
  const Monomial& lm() const { return terms_.front().m; }
  const FieldElem& lc() const { return terms_.front().c; }
  // Weighted degree of the leading term; -1 for zero.
  int degree() const;
  int min_degree() const;
  bool homogeneous() const;
  // Nonzero constant term present.
  bool has_constant_term() const { return !terms_.empty() && terms_.back().m.is_one(); }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly scale(const FieldElem& c) const;
  Poly mul_term(const Monomial& m, const FieldElem& c) const;
  Poly monic() const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  const PolyRing* ring_ = nullptr;
  std::vector<Term> terms_;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int col) : std::runtime_error(what), column(col) {}
  int column;
};

// Parses the polynomial grammar: names [A-Za-z][A-Za-z0-9]*, integer coefficients,
// + - * ^ and parentheses. Implicit multiplication is rejected.
Poly parse_poly(const PolyRing* r, const std::string& text);

}  // namespace semidual
