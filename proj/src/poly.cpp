#include "semidual/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <set>

namespace semidual {

bool Monomial::is_one() const {
  for (auto x : e)
    if (x) return false;
  return true;
}

bool Monomial::divides(const Monomial& o) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

uint32_t Monomial::mask() const {
  uint32_t m = 0;
  for (int i = 0; i < kMaxVars; ++i)
    if (e[i]) m |= 1u << i;
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(e[i]) + o.e[i];
    if (s > 0xffff) throw std::overflow_error("monomial exponent overflow");
    r.e[i] = static_cast<uint16_t>(s);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<uint16_t>(e[i] - o.e[i]);
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

const PolyRing* PolyRing::make(std::vector<std::string> vars, Field f, std::vector<int> weights) {
  if (vars.empty()) throw std::invalid_argument("polynomial ring needs at least one variable");
  if (static_cast<int>(vars.size()) > kMaxVars)
    throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables supported");
  std::set<std::string> seen;
  for (auto& v : vars) {
    if (v.empty() || !std::isalpha(static_cast<unsigned char>(v[0])))
      throw std::invalid_argument("bad variable name '" + v + "'");
    for (char c : v)
      if (!std::isalnum(static_cast<unsigned char>(c)))
        throw std::invalid_argument("bad variable name '" + v + "'");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable '" + v + "'");
  }
  if (weights.empty()) weights.assign(vars.size(), 1);
  if (weights.size() != vars.size()) throw std::invalid_argument("weight count differs from variable count");
  for (int w : weights)
    if (w < 1) throw std::invalid_argument("grading weights must be positive");
  if (f.p != 0) f = Field::prime(f.p);

  static std::mutex mu;
  static std::vector<std::unique_ptr<PolyRing>> pool;
  std::lock_guard<std::mutex> lock(mu);
  for (auto& r : pool)
    if (r->vars_ == vars && r->weights_ == weights && r->field_ == f) return r.get();
  auto r = std::unique_ptr<PolyRing>(new PolyRing());
  r->vars_ = std::move(vars);
  r->weights_ = std::move(weights);
  r->field_ = f;
  pool.push_back(std::move(r));
  return pool.back().get();
}

int PolyRing::var_index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars_[i] == name) return i;
  return -1;
}

std::string PolyRing::mono_string(const Monomial& m) const {
  std::string s;
  for (int i = 0; i < nvars(); ++i) {
    if (!m.e[i]) continue;
    if (!s.empty()) s += "*";
    s += vars_[i];
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string PolyRing::describe() const {
  std::string s = field_.name() + "[";
  for (int i = 0; i < nvars(); ++i) s += (i ? "," : "") + vars_[i];
  s += "]";
  bool weighted = false;
  for (int w : weights_) weighted |= w != 1;
  if (weighted) {
    s += " weights(";
    for (int i = 0; i < nvars(); ++i) s += (i ? "," : "") + std::to_string(weights_[i]);
    s += ")";
  }
  return s;
}

Poly Poly::constant(const PolyRing* r, const FieldElem& c) {
  Poly p(r);
  if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
  return p;
}

Poly Poly::variable(const PolyRing* r, int i) {
  Monomial m;
  m.e[i] = 1;
  return monomial(r, m, r->scalar(1));
}

Poly Poly::monomial(const PolyRing* r, const Monomial& m, const FieldElem& c) {
  Poly p(r);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(const PolyRing* r, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [r](const Term& a, const Term& b) { return r->cmp(a.m, b.m) > 0; });
  Poly p(r);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c += t.c;
      if (p.terms_.back().c.is_zero()) p.terms_.pop_back();
    } else if (!t.c.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

int Poly::degree() const { return terms_.empty() ? -1 : ring_->deg(terms_.front().m); }

int Poly::min_degree() const {
  int d = -1;
  for (auto& t : terms_) {
    int x = ring_->deg(t.m);
    if (d < 0 || x < d) d = x;
  }
  return d;
}

bool Poly::homogeneous() const {
  for (auto& t : terms_)
    if (ring_->deg(t.m) != ring_->deg(terms_.front().m)) return false;
  return true;
}

Poly Poly::operator-() const {
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) r.terms_.push_back({t.m, -t.c});
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return o;
  const PolyRing* r = ring_;
  if (r != o.ring_) throw std::invalid_argument("ring mismatch in polynomial arithmetic");
  Poly out(r);
  out.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = r->cmp(terms_[i].m, o.terms_[j].m);
    if (c > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(o.terms_[j++]);
    } else {
      FieldElem s = terms_[i].c + o.terms_[j].c;
      if (!s.is_zero()) out.terms_.push_back({terms_[i].m, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
  return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (terms_.empty() || o.terms_.empty()) return Poly(ring_ ? ring_ : o.ring_);
  if (ring_ != o.ring_) throw std::invalid_argument("ring mismatch in polynomial arithmetic");
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].m, o.terms_[0].c);
  if (terms_.size() == 1) return o.mul_term(terms_[0].m, terms_[0].c);
  std::vector<Term> all;
  all.reserve(terms_.size() * o.terms_.size());
  for (auto& a : terms_)
    for (auto& b : o.terms_) all.push_back({a.m * b.m, a.c * b.c});
  return from_terms(ring_, std::move(all));
}

Poly Poly::scale(const FieldElem& c) const {
  if (c.is_zero()) return Poly(ring_);
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) r.terms_.push_back({t.m, t.c * c});
  return r;
}

Poly Poly::mul_term(const Monomial& m, const FieldElem& c) const {
  if (c.is_zero()) return Poly(ring_);
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
  return r;
}

Poly Poly::monic() const {
  if (terms_.empty() || lc().is_one()) return *this;
  return scale(lc().inv());
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    bool neg = t.c.negative_repr();
    FieldElem a = neg ? -t.c : t.c;
    if (i == 0) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (t.m.is_one()) {
      s += a.to_string();
    } else {
      if (!a.is_one()) s += a.to_string() + "*";
      s += ring_->mono_string(t.m);
    }
  }
  return s;
}

namespace {

class Parser {
 public:
  Parser(const PolyRing* r, const std::string& t) : r_(r), t_(t) {}

  Poly run() {
    skip();
    if (pos_ >= t_.size()) fail("empty polynomial");
    Poly p = expr();
    skip();
    if (pos_ < t_.size()) fail(std::string("unexpected '") + t_[pos_] + "'");
    return p;
  }

 private:
  const PolyRing* r_;
  const std::string& t_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at column " + std::to_string(pos_ + 1), static_cast<int>(pos_ + 1));
  }
  void skip() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < t_.size() && t_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc(r_);
    bool first = true;
    for (;;) {
      bool neg = false;
      if (eat('-')) {
        neg = true;
      } else if (!first && !eat('+')) {
        break;
      } else if (first) {
        eat('+');
      }
      Poly t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      skip();
      if (eat('*')) {
        acc = acc * factor();
        continue;
      }
      if (pos_ < t_.size() && (std::isalnum(static_cast<unsigned char>(t_[pos_])) || t_[pos_] == '('))
        fail("implicit multiplication is not allowed");
      return acc;
    }
  }

  Poly factor() {
    Poly b = base();
    if (eat('^')) {
      skip();
      size_t start = pos_;
      while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      long e = std::stol(t_.substr(start, pos_ - start));
      Poly r = Poly::constant(r_, 1);
      for (long i = 0; i < e; ++i) r = r * b;
      return r;
    }
    return b;
  }

  Poly base() {
    skip();
    if (pos_ >= t_.size()) fail("unexpected end of input");
    char c = t_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
      mpz_class v(t_.substr(start, pos_ - start));
      return Poly::constant(r_, FieldElem(r_->field(), v));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < t_.size() && std::isalnum(static_cast<unsigned char>(t_[pos_]))) ++pos_;
      std::string name = t_.substr(start, pos_ - start);
      int i = r_->var_index(name);
      if (i < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Poly::variable(r_, i);
    }
    fail(std::string("unexpected '") + c + "'");
  }
};

}  // namespace

Poly parse_poly(const PolyRing* r, const std::string& text) { return Parser(r, text).run(); }

}  // namespace semidual
