#pragma once

#include <string>

namespace semidual {

// An integer or one of +inf, -inf.
class ExtInt {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  constexpr ExtInt(long v = 0) : kind_(Kind::Finite), v_(v) {}
  static constexpr ExtInt pos_inf() { return ExtInt(Kind::PosInf); }
  static constexpr ExtInt neg_inf() { return ExtInt(Kind::NegInf); }

  bool finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  long value() const { return v_; }
  Kind kind() const { return kind_; }

  friend bool operator==(const ExtInt& a, const ExtInt& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.v_ == b.v_);
  }
  friend bool operator<(const ExtInt& a, const ExtInt& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
    return a.kind_ == Kind::Finite && a.v_ < b.v_;
  }
  friend bool operator<=(const ExtInt& a, const ExtInt& b) { return a < b || a == b; }
  friend bool operator>(const ExtInt& a, const ExtInt& b) { return b < a; }
  friend bool operator>=(const ExtInt& a, const ExtInt& b) { return b <= a; }
  // +inf + -inf is not defined; it is resolved to -inf so that bounds stay conservative.
  friend ExtInt operator+(const ExtInt& a, const ExtInt& b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
    if (a.is_pos_inf() || b.is_pos_inf()) return pos_inf();
    return ExtInt(a.v_ + b.v_);
  }
  friend ExtInt operator-(const ExtInt& a) {
    if (a.is_pos_inf()) return neg_inf();
    if (a.is_neg_inf()) return pos_inf();
    return ExtInt(-a.v_);
  }
  friend ExtInt operator-(const ExtInt& a, const ExtInt& b) { return a + (-b); }

  std::string to_string() const {
    if (kind_ == Kind::PosInf) return "inf";
    if (kind_ == Kind::NegInf) return "-inf";
    return std::to_string(v_);
  }

 private:
  constexpr explicit ExtInt(Kind k) : kind_(k), v_(0) {}
  Kind kind_;
  long v_;
};

inline ExtInt ext_min(const ExtInt& a, const ExtInt& b) { return b < a ? b : a; }
inline ExtInt ext_max(const ExtInt& a, const ExtInt& b) { return a < b ? b : a; }

}  // namespace semidual
