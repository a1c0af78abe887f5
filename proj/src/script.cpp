#include "semidual/script.hpp"

#include <cctype>
#include <sstream>

#include "semidual/fuzz.hpp"
#include "semidual/suites.hpp"

namespace semidual {

std::string ScriptError::format() const {
  std::string s = "line " + std::to_string(line);
  if (column > 0) s += ", column " + std::to_string(column);
  return s + ": " + what();
}

bool Session::ok() const {
  for (auto& r : records_)
    if (!r.at("pass").get<bool>()) return false;
  return true;
}

json Session::report() const { return {{"schema", 1}, {"ok", ok()}, {"records", records_}}; }

const Binding& Session::lookup(const std::string& name, int line, int col) const {
  auto it = bindings_.find(name);
  if (it == bindings_.end()) throw ScriptError("unknown binding '" + name + "'", line, col, name);
  return it->second;
}

void Session::bind(const std::string& name, Binding b, int line, int col) {
  if (bindings_.count(name)) throw ScriptError("binding '" + name + "' is already defined", line, col, name);
  bindings_.emplace(name, std::move(b));
}

namespace {

bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'; }

class Cursor {
 public:
  Cursor(const std::string& s, int line, size_t start = 0) : s_(s), p_(start), line_(line) {}

  void ws() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  bool done() {
    ws();
    return p_ >= s_.size();
  }
  int col() const { return static_cast<int>(p_) + 1; }
  size_t pos() const { return p_; }
  int line() const { return line_; }

  [[noreturn]] void error(const std::string& msg) const { throw ScriptError(msg, line_, col()); }
  [[noreturn]] void error_at(const std::string& msg, size_t at) const {
    throw ScriptError(msg, line_, static_cast<int>(at) + 1);
  }

  // A word token or punctuation such as "=", "->", "/".
  bool accept(const std::string& tok) {
    ws();
    if (s_.compare(p_, tok.size(), tok) != 0) return false;
    size_t e = p_ + tok.size();
    if (word_char(tok.back()) && e < s_.size() && word_char(s_[e])) return false;
    p_ = e;
    return true;
  }
  void expect(const std::string& tok) {
    if (!accept(tok)) error("expected '" + tok + "'");
  }
  std::string word() {
    ws();
    size_t b = p_;
    while (p_ < s_.size() && (word_char(s_[p_]) || s_[p_] == '.')) ++p_;
    if (b == p_) error("expected a name");
    return s_.substr(b, p_ - b);
  }
  std::string name() {
    ws();
    if (p_ < s_.size() && !std::isalpha(static_cast<unsigned char>(s_[p_]))) error("expected a name");
    return word();
  }
  long integer() {
    ws();
    size_t b = p_;
    if (p_ < s_.size() && (s_[p_] == '-' || s_[p_] == '+')) ++p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
    if (b == p_ || (p_ == b + 1 && !std::isdigit(static_cast<unsigned char>(s_[b])))) {
      p_ = b;
      error("expected an integer");
    }
    return std::stol(s_.substr(b, p_ - b));
  }
  bool peek_integer() {
    ws();
    size_t q = p_;
    if (q < s_.size() && s_[q] == '-') ++q;
    return q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]));
  }
  // Raw text up to one of the stop words (at depth 0) or the end of the line.
  std::pair<std::string, size_t> until(std::initializer_list<const char*> stops) {
    ws();
    size_t b = p_;
    int depth = 0;
    while (p_ < s_.size()) {
      char c = s_[p_];
      if (depth == 0) {
        bool hit = false;
        for (const char* w : stops) {
          std::string t(w);
          bool word = word_char(t[0]);
          if (s_.compare(p_, t.size(), t) == 0 &&
              (!word || ((p_ == b || !word_char(s_[p_ - 1])) &&
                         (p_ + t.size() >= s_.size() || !word_char(s_[p_ + t.size()])))))
            hit = true;
        }
        if (hit) break;
      }
      if (c == '(' || c == '[' || c == '{') ++depth;
      if (c == ')' || c == ']' || c == '}') --depth;
      ++p_;
    }
    size_t e = p_;
    while (e > b && std::isspace(static_cast<unsigned char>(s_[e - 1]))) --e;
    return {s_.substr(b, e - b), b};
  }
  void seek(size_t p) { p_ = p; }
  std::string rest() {
    ws();
    std::string r = s_.substr(p_);
    p_ = s_.size();
    return r;
  }
  void end() {
    if (!done()) error("unexpected text");
  }

 private:
  const std::string& s_;
  size_t p_;
  int line_;
};

// Comma-separated items at bracket depth 0 with their offsets.
std::vector<std::pair<std::string, size_t>> split_commas(const std::string& text, size_t offset) {
  std::vector<std::pair<std::string, size_t>> out;
  int depth = 0;
  size_t b = 0;
  auto push = [&](size_t e) {
    size_t l = b, r = e;
    while (l < r && std::isspace(static_cast<unsigned char>(text[l]))) ++l;
    while (r > l && std::isspace(static_cast<unsigned char>(text[r - 1]))) --r;
    if (r > l) out.push_back({text.substr(l, r - l), offset + l});
  };
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      push(i);
      b = i + 1;
    }
  }
  push(text.size());
  return out;
}

Poly parse_at(const Cursor& c, const PolyRing* P, const std::string& text, size_t at) {
  try {
    return parse_poly(P, text);
  } catch (const ParseError& e) {
    std::string m = e.what();
    auto k = m.find(" at column ");
    if (k != std::string::npos) m = m.substr(0, k);
    c.error_at(m, at + e.column - 1);
  } catch (const std::exception& e) {
    c.error_at(e.what(), at);
  }
}

std::vector<Poly> poly_list(const Cursor& c, const QRPtr& R, const std::pair<std::string, size_t>& raw) {
  std::vector<Poly> out;
  for (auto& [t, at] : split_commas(raw.first, raw.second)) out.push_back(R->reduce(parse_at(c, R->cover(), t, at)));
  return out;
}

std::vector<int> int_list(Cursor& c, const std::pair<std::string, size_t>& raw) {
  std::vector<int> out;
  for (auto& [t, at] : split_commas(raw.first, raw.second)) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(t, &used));
      if (used != t.size()) throw std::invalid_argument("");
    } catch (...) {
      c.error_at("expected an integer", at);
    }
  }
  return out;
}

// "(g1, g2); (h1)" -> ideals in the cover of R.
std::vector<Ideal> ideal_list(Cursor& c, const QRPtr& R, const std::pair<std::string, size_t>& raw) {
  std::vector<Ideal> out;
  const std::string& t = raw.first;
  size_t i = 0;
  while (i < t.size()) {
    while (i < t.size() && (std::isspace(static_cast<unsigned char>(t[i])) || t[i] == ';')) ++i;
    if (i >= t.size()) break;
    if (t[i] != '(') c.error_at("expected '('", raw.second + i);
    int depth = 0;
    size_t j = i;
    for (; j < t.size(); ++j) {
      if (t[j] == '(') ++depth;
      if (t[j] == ')' && --depth == 0) break;
    }
    if (j >= t.size()) c.error_at("unbalanced parentheses", raw.second + i);
    std::vector<Poly> g = R->ideal().gens();
    for (auto& p : poly_list(c, R, {t.substr(i + 1, j - i - 1), raw.second + i + 1})) g.push_back(p);
    out.emplace_back(R->cover(), g);
    i = j + 1;
  }
  return out;
}

Field parse_field(Cursor& c) {
  if (c.accept("Q")) return Field::rationals();
  size_t at = c.pos();
  long p = c.integer();
  try {
    return Field::prime(static_cast<uint32_t>(p));
  } catch (const std::exception& e) {
    c.error_at(e.what(), at);
  }
}

std::string value_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

class Interp {
 public:
  Interp(Session& s, const std::string& text, int line) : s_(s), text_(text), c_(text_, line) {}

  void run() {
    std::string kw = c_.word();
    if (kw == "ring") return def_ring();
    if (kw == "ideal") return def_ideal();
    if (kw == "module") return def_module();
    if (kw == "complex") return def_complex();
    if (kw == "map") return def_map();
    compute(kw);
  }

 private:
  Session& s_;
  std::string text_;
  Cursor c_;

  int line() const { return c_.line(); }
  [[noreturn]] void semantic(const std::string& msg, const std::string& binding, int col) {
    throw ScriptError(msg, line(), col, binding);
  }

  template <class T>
  const T& get(const std::string& what, std::string* name = nullptr) {
    c_.ws();
    int col = c_.col();
    std::string n = c_.name();
    if (name) *name = n;
    const Binding& b = s_.lookup(n, line(), col);
    if (auto p = std::get_if<T>(&b)) return *p;
    semantic("binding '" + n + "' is not a " + what, n, col);
  }
  QRPtr ring() { return get<QRPtr>("ring"); }
  const RingMap& ring_map(std::string* name = nullptr) { return get<RingMap>("map", name); }
  FPModule module() {
    c_.ws();
    int col = c_.col();
    std::string n = c_.name();
    const Binding& b = s_.lookup(n, line(), col);
    if (auto p = std::get_if<FPModule>(&b)) return *p;
    semantic("binding '" + n + "' is not a module", n, col);
  }
  // Modules are read as complexes concentrated in degree 0 and a ring R as R itself.
  DObj object(std::string* name = nullptr) {
    c_.ws();
    int col = c_.col();
    std::string n = c_.name();
    if (name) *name = n;
    const Binding& b = s_.lookup(n, line(), col);
    if (auto p = std::get_if<DObj>(&b)) return *p;
    if (auto p = std::get_if<FPModule>(&b)) return DObj::module(*p);
    if (auto p = std::get_if<QRPtr>(&b)) return DObj::module(FPModule::free(*p, 1));
    semantic("binding '" + n + "' is not a ring, module or complex", n, col);
  }
  std::pair<std::string, int> new_name() {
    c_.ws();
    int col = c_.col();
    std::string n = c_.name();
    c_.expect("=");
    return {n, col};
  }
  int window_or(int dflt) {
    if (c_.accept("window")) return static_cast<int>(c_.integer());
    return s_.options().window >= 0 ? s_.options().window : dflt;
  }

  void def_ring() {
    auto [n, col] = new_name();
    c_.expect("[");
    auto raw = c_.until({"]"});
    c_.expect("]");
    std::vector<std::string> vars;
    std::vector<int> weights;
    for (auto& [t, at] : split_commas(raw.first, raw.second)) {
      auto k = t.find(':');
      std::string v = t.substr(0, k);
      while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.pop_back();
      if (v.empty() || !std::isalpha(static_cast<unsigned char>(v[0]))) c_.error_at("expected a variable name", at);
      int w = 1;
      if (k != std::string::npos) {
        try {
          w = std::stoi(t.substr(k + 1));
        } catch (...) {
          c_.error_at("expected a weight", at + k + 1);
        }
        if (w <= 0) c_.error_at("weights must be positive", at + k + 1);
      }
      vars.push_back(v);
      weights.push_back(w);
    }
    if (vars.empty()) c_.error_at("a ring needs at least one variable", raw.second);
    Field f = s_.options().field;
    if (c_.accept("over")) f = parse_field(c_);
    const PolyRing* P;
    try {
      P = PolyRing::make(vars, f, weights);
    } catch (const std::exception& e) {
      c_.error_at(e.what(), raw.second);
    }
    std::vector<Poly> gens;
    if (c_.accept("/")) {
      auto g = c_.until({});
      for (auto& [t, at] : split_commas(g.first, g.second)) gens.push_back(parse_at(c_, P, t, at));
    }
    c_.end();
    QRPtr R = QuotientRing::make(P, gens);
    if (R->ideal().is_unit()) semantic("ring '" + n + "' is the zero ring", n, col);
    s_.bind(n, R, line(), col);
  }

  void def_ideal() {
    auto [n, col] = new_name();
    QRPtr R = ring();
    c_.expect(":");
    auto g = poly_list(c_, R, c_.until({}));
    std::vector<Poly> all = R->ideal().gens();
    all.insert(all.end(), g.begin(), g.end());
    s_.bind(n, IdealBinding{R, Ideal(R->cover(), all)}, line(), col);
  }

  void def_module() {
    auto [n, col] = new_name();
    std::string kind = c_.word();
    FPModule M;
    if (kind == "cyclic") {
      QRPtr R = ring();
      std::vector<Poly> g;
      if (c_.accept("/")) g = poly_list(c_, R, c_.until({"twist"}));
      int t = c_.accept("twist") ? static_cast<int>(c_.integer()) : 0;
      M = FPModule::cyclic(R, g, t);
    } else if (kind == "free" || kind == "present") {
      QRPtr R = ring();
      int k = static_cast<int>(c_.integer());
      if (k < 0) c_.error("rank must be nonnegative");
      std::vector<int> tw;
      if (c_.accept("twists")) {
        auto raw = c_.until({"rels"});
        tw = int_list(c_, raw);
        if (static_cast<int>(tw.size()) != k) c_.error_at("expected " + std::to_string(k) + " twists", raw.second);
      }
      M = FPModule::free(R, k, tw);
      if (kind == "present" && c_.accept("rels")) {
        auto raw = c_.until({});
        // Each parenthesized group is one relation vector.
        const std::string& t = raw.first;
        size_t i = 0;
        while (i < t.size()) {
          while (i < t.size() && (std::isspace(static_cast<unsigned char>(t[i])) || t[i] == ';')) ++i;
          if (i >= t.size()) break;
          if (t[i] != '(') c_.error_at("expected '('", raw.second + i);
          size_t j = t.find(')', i);
          if (j == std::string::npos) c_.error_at("unbalanced parentheses", raw.second + i);
          Vec v = poly_list(c_, R, {t.substr(i + 1, j - i - 1), raw.second + i + 1});
          if (static_cast<int>(v.size()) != k) c_.error_at("relation must have " + std::to_string(k) + " entries", raw.second + i);
          M.rels.push_back(v);
          i = j + 1;
        }
      }
    } else if (kind == "residue") {
      M = residue_field(ring());
    } else if (kind == "sum") {
      M = module();
      while (!c_.done()) {
        FPModule N = module();
        if (N.ring != M.ring && !N.ring->same(*M.ring)) semantic("summands live over different rings", "", c_.col());
        M = direct_sum(M, N);
      }
    } else {
      c_.error("unknown module constructor '" + kind + "'");
    }
    c_.end();
    s_.bind(n, M, line(), col);
  }

  void def_complex() {
    auto [n, col] = new_name();
    std::string kind = c_.word();
    DObj X;
    if (kind == "module") {
      FPModule M = module();
      int at = c_.accept("at") ? static_cast<int>(c_.integer()) : 0;
      X = DObj::module(M, at);
    } else if (kind == "dualizing") {
      X = dualizing_complex(ring());
    } else if (kind == "shift") {
      X = object();
      X = shift(X, static_cast<int>(c_.integer()));
    } else if (kind == "sum") {
      X = object();
      while (!c_.done()) {
        DObj Y = object();
        auto a = as_complex(X), b = as_complex(Y);
        if (!a || !b) semantic("sum needs complexes representable over the ring", "", c_.col());
        X = DObj::honest(direct_sum(*a, *b));
      }
    } else if (kind == "koszul") {
      QRPtr R = ring();
      X = DObj::honest(koszul(R, poly_list(c_, R, c_.until({}))));
    } else if (kind == "tensor" || kind == "rhom") {
      DObj A = object(), B = object();
      int N = window_or(8);
      Derived d = kind == "tensor" ? derived_tensor(A, B, N) : rhom(A, B, N);
      if (!d.w.is_exact()) semantic("result is only valid in a window; use the computation form instead", n, col);
      X = d.obj;
    } else if (kind == "basechange" || kind == "cobase") {
      DObj C = object();
      const RingMap& phi = ring_map();
      ChangeReport r = kind == "basechange" ? base_change(C, phi) : cobase_change(C, phi);
      if (!r.result.w.is_exact()) semantic("result is only valid in a window", n, col);
      X = r.result.obj;
    } else if (kind == "json") {
      QRPtr R = ring();
      c_.ws();
      size_t at = c_.pos();
      std::string body = c_.rest();
      try {
        X = DObj::honest(complex_from_json(R, json::parse(body)));
      } catch (const json::parse_error& e) {
        c_.error_at(std::string("invalid JSON: ") + e.what(), at + (e.byte > 0 ? e.byte - 1 : 0));
      } catch (const std::exception& e) {
        c_.error_at(e.what(), at);
      }
    } else {
      c_.error("unknown complex constructor '" + kind + "'");
    }
    c_.end();
    s_.bind(n, X, line(), col);
  }

  void def_map() {
    auto [n, col] = new_name();
    QRPtr R = ring();
    c_.expect("->");
    c_.ws();
    int tcol = c_.col();
    std::string tname = c_.name();
    RingMap phi;
    if (c_.accept("kernel")) {
      auto J = poly_list(c_, R, c_.until({"primes"}));
      QRPtr S = R->quotient(J);
      std::vector<Ideal> primes;
      if (c_.accept("primes")) primes = ideal_list(c_, S, c_.until({}));
      c_.end();
      phi = RingMap::surjection(R, J, primes);
      s_.bind(tname, phi.S, line(), tcol);
    } else if (c_.accept("finite")) {
      const Binding& b = s_.lookup(tname, line(), tcol);
      const QRPtr* S = std::get_if<QRPtr>(&b);
      if (!S) semantic("binding '" + tname + "' is not a ring", tname, tcol);
      FPModule M = module();
      c_.expect("basis");
      auto basis = poly_list(c_, *S, c_.until({"primes"}));
      std::vector<Ideal> primes;
      if (c_.accept("primes")) primes = ideal_list(c_, *S, c_.until({}));
      c_.end();
      try {
        phi = RingMap::module_finite(R, *S, M, basis, primes);
      } catch (const std::invalid_argument& e) {
        semantic(std::string("map '") + n + "': " + e.what(), n, col);
      }
    } else {
      c_.error("expected 'kernel' or 'finite'");
    }
    s_.bind(n, phi, line(), col);
  }

  json record(const std::string& op, std::vector<std::string> args) {
    return {{"schema", 1}, {"line", line()}, {"op", op}, {"args", args}};
  }

  void compute(const std::string& op) {
    // The expectation clause is split off first.
    size_t start = c_.pos();
    auto [body, bat] = c_.until({"expect"});
    std::vector<std::pair<std::string, std::string>> expects;
    if (c_.accept("expect")) {
      auto tok = c_.until({});
      size_t i = 0;
      const std::string& t = tok.first;
      while (i < t.size()) {
        while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
        if (i >= t.size()) break;
        size_t j = i;
        while (j < t.size() && !std::isspace(static_cast<unsigned char>(t[j]))) ++j;
        std::string kv = t.substr(i, j - i);
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) c_.error_at("expected key=value", tok.second + i);
        expects.push_back({kv.substr(0, eq), kv.substr(eq + 1)});
        i = j;
      }
      if (expects.empty()) c_.error("expected key=value");
    }
    text_.resize(bat + body.size());
    c_.seek(start);
    json r;
    bool pass = true;
    try {
      r = evaluate(op, pass);
    } catch (const ScriptError&) {
      throw;
    } catch (const std::exception& e) {
      throw ScriptError(op + ": " + e.what(), line());
    }
    json checks = json::array();
    for (auto& [k, v] : expects) {
      const json* cur = &r["result"];
      bool found = true;
      std::string seg;
      std::istringstream ks(k);
      while (std::getline(ks, seg, '.')) {
        if (cur->is_object() && cur->contains(seg)) {
          cur = &(*cur)[seg];
        } else if (cur->is_array() && !seg.empty() && std::all_of(seg.begin(), seg.end(), ::isdigit) &&
                   std::stoul(seg) < cur->size()) {
          cur = &(*cur)[std::stoul(seg)];
        } else {
          found = false;
          break;
        }
      }
      std::string actual = found ? value_text(*cur) : "<missing>";
      bool ok = found && actual == v;
      pass = pass && ok;
      checks.push_back({{"key", k}, {"expected", v}, {"actual", actual}, {"pass", ok}});
    }
    if (!expects.empty()) r["expect"] = checks;
    r["pass"] = pass;
    s_.emit(r);
  }

  json evaluate(const std::string& op, bool& pass) {
    if (op == "gdim") {
      std::string a, b;
      DObj C = object(&a), X = object(&b);
      int N = window_or(-1);
      c_.end();
      json r = record(op, {a, b});
      r["result"] = to_json(gdim(C, X, N));
      return r;
    }
    if (op == "semidual") {
      std::string a;
      DObj C = object(&a);
      int N = window_or(-1);
      c_.end();
      json r = record(op, {a});
      r["result"] = to_json(is_semidualizing(C, N));
      return r;
    }
    if (op == "dualizing") {
      std::string a;
      DObj C = object(&a);
      int N = window_or(-1);
      c_.end();
      DualizingVerdict v = is_dualizing(C, N);
      json r = record(op, {a});
      r["result"] = {{"dualizing", v.dualizing}, {"exact", v.exact}, {"how", v.how}};
      return r;
    }
    if (op == "bounds") {
      std::string a;
      DObj X = object(&a);
      json r = record(op, {a});
      auto H = homology_of(X);
      if (c_.accept("at")) {
        auto ids = ideal_list(c_, X.ring(), c_.until({}));
        if (ids.size() != 1) c_.error("expected one ideal");
        r["args"].push_back(ids[0].to_string());
        r["result"] = to_json(localized_bounds(H, ids[0]));
      } else {
        r["result"] = to_json(bounds_of(H));
      }
      c_.end();
      return r;
    }
    if (op == "depth") {
      std::string a;
      DObj X = object(&a);
      c_.end();
      json r = record(op, {a});
      r["result"] = {{"depth", to_json(depth(X))}};
      return r;
    }
    if (op == "show") {
      std::string a;
      DObj X = object(&a);
      c_.end();
      json r = record(op, {a});
      r["result"] = {{"object", to_json(X)}, {"bounds", to_json(bounds_of(X))}, {"fingerprint", to_json(fingerprint(X))}};
      return r;
    }
    if (op == "pd") {
      c_.ws();
      int col = c_.col();
      std::string a = c_.name();
      const Binding& b = s_.lookup(a, line(), col);
      c_.end();
      PdReport p;
      if (auto phi = std::get_if<RingMap>(&b)) {
        p = map_pd(*phi);
      } else if (auto M = std::get_if<FPModule>(&b)) {
        p = M->ring->graded_local() && M->homogeneous() ? pd(*M)
                                                          : pd_complex(Complex::concentrated(*M, 0), M->ring->nvars() + 1);
      } else if (auto X = std::get_if<DObj>(&b)) {
        auto Xc = as_complex(*X);
        if (!Xc) semantic("pd needs a complex representable over the ring", a, col);
        p = pd_complex(*Xc, Xc->hi() + X->ring()->nvars() + 1);
      } else {
        semantic("binding '" + a + "' is not a map, module or complex", a, col);
      }
      json r = record(op, {a});
      r["result"] = {{"value", to_json(p.value)}, {"certificate", p.certificate}};
      return r;
    }
    if (op == "basechange" || op == "cobase") {
      std::string a, m;
      DObj C = object(&a);
      const RingMap& phi = ring_map(&m);
      int N = window_or(-1);
      c_.end();
      json r = record(op, {a, m});
      r["result"] = to_json(op == "basechange" ? base_change(C, phi, N) : cobase_change(C, phi, N));
      return r;
    }
    if (op == "descent") {
      std::string a, b;
      DObj C = object(&a), X = object(&b);
      std::string m;
      const RingMap& phi = ring_map(&m);
      auto t = c_.accept("cobase") ? DescentReport::Theorem::CobaseChange : DescentReport::Theorem::BaseChange;
      c_.end();
      json r = record(op, {a, b, m});
      r["result"] = to_json(descent_gdim(C, X, phi, t));
      return r;
    }
    if (op == "series") {
      std::string a;
      DObj C = object(&a);
      std::string m;
      const RingMap& phi = ring_map(&m);
      int N = static_cast<int>(c_.integer());
      c_.end();
      json r = record(op, {a, m, std::to_string(N)});
      SeriesTransfer st = series_transfer(C, phi, N);
      r["result"] = to_json(st);
      return r;
    }
    if (op == "grade-profile") {
      std::string m;
      const RingMap& phi = ring_map(&m);
      c_.end();
      json r = record(op, {m});
      r["result"] = to_json(grade_profile(phi));
      return r;
    }
    if (op == "suite") {
      std::string name = c_.word();
      c_.end();
      json r = record(op, {name});
      std::vector<SuiteResult> res;
      try {
        res = run_suite(name, s_.options().field);
      } catch (const std::invalid_argument& e) {
        throw ScriptError(e.what(), line(), 0, name);
      }
      json arr = json::array();
      for (auto& x : res) {
        json checks = json::array();
        for (auto& ch : x.checks)
          checks.push_back({{"label", ch.label}, {"expected", ch.expected}, {"actual", ch.actual}, {"pass", ch.pass}});
        arr.push_back({{"name", x.name},
                       {"pass", x.pass()},
                       {"experimental", x.experimental},
                       {"checks", checks},
                       {"notes", x.notes}});
        if (!x.experimental) pass = pass && x.pass();
      }
      r["result"] = {{"suites", arr}};
      return r;
    }
    if (op == "fuzz") {
      std::string tag = c_.word();
      int count = static_cast<int>(c_.integer());
      uint64_t seed = c_.peek_integer() ? static_cast<uint64_t>(c_.integer()) : s_.options().seed;
      c_.end();
      json r = record(op, {tag, std::to_string(count), std::to_string(seed)});
      FuzzResult f;
      try {
        f = fuzz(tag, count, seed, s_.options().field);
      } catch (const std::invalid_argument& e) {
        throw ScriptError(e.what(), line(), 0, tag);
      }
      json res = {{"tag", f.tag},     {"count", f.count},   {"seed", f.seed},         {"passed", f.passed},
                  {"failed", f.failed}, {"skipped", f.skipped}, {"mutation", f.mutation}, {"ok", f.ok()}};
      if (f.counterexample) {
        res["counterexample"] = f.counterexample->describe();
        res["message"] = f.message;
      }
      r["result"] = res;
      pass = pass && f.ok();
      return r;
    }
    throw ScriptError("unknown statement '" + op + "'", line(), 1);
  }
};

// Drops a trailing comment outside JSON strings.
std::string strip_comment(const std::string& s) {
  bool str = false;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"' && (i == 0 || s[i - 1] != '\\')) str = !str;
    if (s[i] == '#' && !str) return s.substr(0, i);
  }
  return s;
}

}  // namespace

void Session::execute(const std::string& raw, int lineno) {
  std::string line = strip_comment(raw);
  bool blank = true;
  for (char c : line) blank = blank && std::isspace(static_cast<unsigned char>(c));
  if (blank) return;
  Interp(*this, line, lineno).run();
}

void run_script(Session& s, std::istream& in) {
  std::string line;
  int n = 0;
  while (std::getline(in, line)) s.execute(line, ++n);
}

}  // namespace semidual
