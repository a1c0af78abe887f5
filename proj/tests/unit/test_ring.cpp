#include <random>

#include "doctest.h"
#include "semidual/ideal.hpp"

using namespace semidual;

namespace {

const PolyRing* ring(std::vector<std::string> v, Field f = Field{32003}) { return PolyRing::make(v, f); }

Ideal ideal(const PolyRing* r, std::vector<std::string> gens) {
  std::vector<Poly> g;
  for (auto& s : gens) g.push_back(parse_poly(r, s));
  return Ideal(r, g);
}

std::vector<std::string> strs(const std::vector<Poly>& v) {
  std::vector<std::string> o;
  for (auto& p : v) o.push_back(p.to_string());
  return o;
}

Poly random_poly(const PolyRing* r, std::mt19937& rng, int terms, int maxdeg) {
  std::vector<Term> ts;
  std::uniform_int_distribution<int> e(0, maxdeg), c(-5, 5);
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (int j = 0; j < r->nvars(); ++j) m.e[j] = static_cast<uint16_t>(e(rng));
    ts.push_back({m, r->scalar(c(rng))});
  }
  return Poly::from_terms(r, ts);
}

}  // namespace

TEST_CASE("field arithmetic is exact and rejects division by zero") {
  Field f{32003};
  FieldElem a(f, 5), b(f, -3);
  CHECK((a * b).to_string() == "-15");
  CHECK((a / a).is_one());
  CHECK_THROWS(FieldElem(f, 0).inv());
  Field q = Field::rationals();
  FieldElem x(q, 1), y(q, 3);
  CHECK((x / y).to_string() == "1/3");
  CHECK_THROWS(Field::prime(2));
  CHECK_THROWS(Field::prime(9));
}

TEST_CASE("parser round trip and grammar errors") {
  auto r = ring({"Y", "Z"});
  CHECK(parse_poly(r, "Y^2 + 3*Y*Z").to_string() == "Y^2 + 3*Y*Z");
  CHECK(parse_poly(r, "-(Y-Z)^2").to_string() == "-Y^2 + 2*Y*Z - Z^2");
  CHECK_THROWS_AS(parse_poly(r, "2Y"), ParseError);
  CHECK_THROWS_AS(parse_poly(r, "Y Z"), ParseError);
  CHECK_THROWS_AS(parse_poly(r, "W"), ParseError);
}

TEST_CASE("groebner examples") {
  auto r = ring({"Y", "Z"});
  CHECK(strs(ideal(r, {"Y^2", "Y*Z"}).gb()) == std::vector<std::string>{"Y*Z", "Y^2"});
  auto t = ring({"T"}, Field::rationals());
  CHECK(strs(ideal(t, {"T^2 - T"}).gb()) == std::vector<std::string>{"T^2 - T"});
  auto xy = ring({"X", "Y"});
  CHECK(strs(ideal(xy, {"X+Y", "X-Y"}).gb()) == std::vector<std::string>{"Y", "X"});
}

TEST_CASE("normal forms and containment") {
  auto r = ring({"Y", "Z"});
  Ideal I = ideal(r, {"Y^2", "Y*Z"});
  CHECK(I.normal_form(parse_poly(r, "Y^3")).is_zero());
  CHECK(I.normal_form(parse_poly(r, "Y")).to_string() == "Y");
  auto t = ring({"T"});
  CHECK(ideal(t, {"T^2-T"}).normal_form(parse_poly(t, "T^2")).to_string() == "T");
  CHECK(ideal(r, {"Y", "Z"}).contains(I));
  CHECK_FALSE(I.contains(ideal(r, {"Y"})));
  CHECK(I.contains(I));
}

TEST_CASE("groebner is idempotent and reduction is linear") {
  auto r = ring({"X", "Y", "Z"});
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Poly> g;
    for (int i = 0; i < 3; ++i) g.push_back(random_poly(r, rng, 3, 2));
    Ideal I(r, g);
    Ideal J(r, I.gb());
    CHECK(strs(I.gb()) == strs(J.gb()));
    Poly f = random_poly(r, rng, 4, 3), h = random_poly(r, rng, 4, 3);
    CHECK(I.normal_form(f + h) == I.normal_form(I.normal_form(f) + I.normal_form(h)));
    Poly comb(r);
    for (auto& x : g) comb += x * random_poly(r, rng, 2, 2);
    CHECK(I.normal_form(comb).is_zero());
  }
}

TEST_CASE("containment is a preorder on random triples") {
  auto r = ring({"X", "Y"});
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Poly a = random_poly(r, rng, 2, 2), b = random_poly(r, rng, 2, 2);
    Ideal big(r, {a, b}), mid(r, {a * b, a * a}), small(r, {a * a * b});
    CHECK(big.contains(big));
    CHECK(big.contains(mid));
    CHECK(mid.contains(small));
    CHECK(big.contains(small));
  }
}

TEST_CASE("intersection, colon, dimension") {
  auto r = ring({"Y", "Z"});
  Ideal a = ideal(r, {"Y", "Z"}), b = ideal(r, {"Y-1"});
  Ideal c = intersect(a, b);
  CHECK(c == ideal(r, {"Y^2-Y", "Y*Z-Z"}));
  CHECK(colon(ideal(r, {"Y^2", "Y*Z"}), parse_poly(r, "Y")) == a);
  CHECK(ideal(r, {"Y^2", "Y*Z"}).krull_dim() == 1);
  CHECK(a.krull_dim() == 0);
  CHECK(Ideal(r, {}).krull_dim() == 2);
  // Z is a unit at (Y, Z - 1), so (Y^2, YZ) and (Y) agree there.
  CHECK(locally_equal(ideal(r, {"Y^2", "Y*Z"}), ideal(r, {"Y"}), ideal(r, {"Y", "Z-1"})));
  CHECK_FALSE(locally_equal(ideal(r, {"Y^2", "Y*Z"}), ideal(r, {"Y"}), ideal(r, {"Y", "Z"})));
}
