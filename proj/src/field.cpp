#include "semidual/field.hpp"

#include <stdexcept>

namespace semidual {

namespace {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

uint32_t mod_pow(uint64_t b, uint64_t e, uint32_t p) {
  uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(r);
}

const mpq_class& rational_zero() {
  static const mpq_class z(0);
  return z;
}

}  // namespace

Field Field::prime(uint32_t p) {
  if (p == 2 || !is_prime(p) || p >= (1u << 31))
    throw std::invalid_argument("field characteristic must be an odd prime below 2^31");
  return Field{p};
}

std::string Field::name() const { return rational() ? "Q" : "F_" + std::to_string(p); }

FieldElem::FieldElem(const Field& f, long v) : p_(f.p) {
  if (p_) {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += p_;
    v_ = static_cast<uint32_t>(r);
  } else if (v != 0) {
    q_ = std::make_shared<const mpq_class>(v);
  }
}

FieldElem::FieldElem(const Field& f, const mpz_class& v) : p_(f.p) {
  if (p_) {
    mpz_class r = v % p_;
    if (r < 0) r += p_;
    v_ = static_cast<uint32_t>(r.get_ui());
  } else if (v != 0) {
    q_ = std::make_shared<const mpq_class>(v);
  }
}

FieldElem::FieldElem(const Field& f, const mpq_class& v) : p_(f.p) {
  if (p_) {
    FieldElem n(f, mpz_class(v.get_num()));
    FieldElem d(f, mpz_class(v.get_den()));
    *this = n / d;
  } else if (v != 0) {
    q_ = std::make_shared<const mpq_class>(v);
  }
}

const mpq_class& FieldElem::q() const { return q_ ? *q_ : rational_zero(); }

void FieldElem::check(const FieldElem& b) const {
  if (p_ != b.p_) throw std::invalid_argument("field mismatch in coefficient arithmetic");
}

bool FieldElem::is_zero() const { return p_ ? v_ == 0 : !q_; }

bool FieldElem::is_one() const { return p_ ? v_ == 1 : (q_ && *q_ == 1); }

bool FieldElem::is_minus_one() const { return p_ ? v_ == p_ - 1 : (q_ && *q_ == -1); }

FieldElem FieldElem::operator-() const {
  FieldElem r;
  r.p_ = p_;
  if (p_) {
    r.v_ = v_ ? p_ - v_ : 0;
  } else if (q_) {
    r.q_ = std::make_shared<const mpq_class>(-*q_);
  }
  return r;
}

FieldElem FieldElem::inv() const {
  if (is_zero()) throw std::domain_error("division by zero in coefficient field");
  FieldElem r;
  r.p_ = p_;
  if (p_) {
    r.v_ = mod_pow(v_, p_ - 2, p_);
  } else {
    r.q_ = std::make_shared<const mpq_class>(1 / *q_);
  }
  return r;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  a.check(b);
  FieldElem r;
  r.p_ = a.p_;
  if (a.p_) {
    uint32_t s = a.v_ + b.v_;
    r.v_ = s >= a.p_ ? s - a.p_ : s;
  } else {
    if (!a.q_) return b;
    if (!b.q_) return a;
    mpq_class s = *a.q_ + *b.q_;
    if (s != 0) r.q_ = std::make_shared<const mpq_class>(std::move(s));
  }
  return r;
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  a.check(b);
  FieldElem r;
  r.p_ = a.p_;
  if (a.p_) {
    r.v_ = static_cast<uint32_t>(static_cast<uint64_t>(a.v_) * b.v_ % a.p_);
  } else if (a.q_ && b.q_) {
    r.q_ = std::make_shared<const mpq_class>(*a.q_ * *b.q_);
  }
  return r;
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inv(); }

bool FieldElem::operator==(const FieldElem& b) const {
  check(b);
  return p_ ? v_ == b.v_ : q() == b.q();
}

bool FieldElem::negative_repr() const {
  if (p_) return v_ > p_ / 2;
  return q_ && *q_ < 0;
}

std::string FieldElem::to_string() const {
  if (p_) {
    if (v_ > p_ / 2) return "-" + std::to_string(p_ - v_);
    return std::to_string(v_);
  }
  return q().get_str();
}

}  // namespace semidual
