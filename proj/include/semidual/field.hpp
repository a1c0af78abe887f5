#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace semidual {

// Coefficient field: F_p for an odd prime p < 2^31, or Q when p == 0.
struct Field {
  uint32_t p = 32003;

  static Field prime(uint32_t p);
  static Field rationals() { return Field{0}; }

  bool rational() const { return p == 0; }
  std::string name() const;
  bool operator==(const Field&) const = default;
};

class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(const Field& f, long v);
  FieldElem(const Field& f, const mpz_class& v);
  FieldElem(const Field& f, const mpq_class& v);

  Field field() const { return Field{p_}; }
  bool is_zero() const;
  bool is_one() const;
  bool is_minus_one() const;

  FieldElem operator-() const;
  FieldElem inv() const;
  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
  FieldElem& operator-=(const FieldElem& b) { return *this = *this - b; }
  FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }
  bool operator==(const FieldElem& b) const;
  bool operator!=(const FieldElem& b) const { return !(*this == b); }

  // Signed representative in (-p/2, p/2] for F_p, the exact value over Q.
  std::string to_string() const;
  // True when the printed form starts with a minus sign.
  bool negative_repr() const;
  uint32_t raw() const { return v_; }

 private:
  uint32_t p_ = 0;
  uint32_t v_ = 0;
  std::shared_ptr<const mpq_class> q_;

  void check(const FieldElem& b) const;
  const mpq_class& q() const;
};

}  // namespace semidual
