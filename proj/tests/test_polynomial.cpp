#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "hurwitz/errors.hpp"
#include "hurwitz/polynomial.hpp"
#include "hurwitz/vars.hpp"

using namespace hurwitz;
using vars::V;

TEST_CASE("arithmetic identities") {
  Polynomial a = V("x") + V("y") * Rational(2);
  Polynomial b = V("x") - V("y");
  CHECK(a + b == V("x") * Rational(2) + V("y"));
  CHECK(a - a == Polynomial());
  CHECK((a * b) == (b * a));
  CHECK(a * Polynomial(1) == a);
  CHECK(a * Polynomial() == Polynomial());
  CHECK((a + b) * (a - b) == a * a - b * b);
  CHECK((-a) + a == Polynomial());
  CHECK(a.pow(3) == a * a * a);
  CHECK(a.pow(0) == Polynomial(1));
}

TEST_CASE("canonical rendering") {
  Polynomial p = V(vars::Sigma) * V(vars::Psi) * Rational(2) -
                 V(vars::Sigma).pow(2) * Rational(6) +
                 V(vars::Delta) * Rational(2);
  CHECK(p.to_text() == "2*Σ*Ψ - 6*Σ^2 + 2*Δ");
  CHECK(Polynomial().to_text() == "0");
  CHECK((-V("x")).to_text() == "-x");
  CHECK((V("x") - Polynomial(1)).to_text() == "x - 1");
}

TEST_CASE("parser round trip") {
  for (const char* text :
       {"2*Σ*Ψ - 6*Σ^2 + 2*Δ", "x - 1", "-x", "0", "3*Ψ^4 + 1/2*Δ",
        "-6*Σ*Ψ^2 + 24*Σ^2*Ψ - 24*Σ^3 + 18*Δ*Ψ - 6*N*Δ"}) {
    Polynomial p = parse_polynomial(text);
    CHECK(p.to_text() == text);
    CHECK(parse_polynomial(p.to_text()) == p);
  }
  CHECK(parse_polynomial("(Σ+Ψ)^2") ==
        V(vars::Sigma).pow(2) + V(vars::Sigma) * V(vars::Psi) * Rational(2) +
            V(vars::Psi).pow(2));
  CHECK(parse_polynomial("2Σ") == V(vars::Sigma) * Rational(2));
  CHECK(parse_polynomial("(x+1)(x-1)") == V("x") * V("x") - Polynomial(1));
  CHECK_THROWS_AS(parse_polynomial("x +* y"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(x"), ParseError);
}

TEST_CASE("json round trip") {
  Polynomial p = V(vars::Sigma) * V(vars::Psi) * Rational(2) -
                 V(vars::Delta) * Rational(1, 3) + Polynomial(Rational(7, 2));
  CHECK(Polynomial::from_json(p.to_json()) == p);
  CHECK(Polynomial::from_json(Polynomial().to_json()) == Polynomial());
}

TEST_CASE("exact division") {
  Polynomial a = V("x") + V("y");
  Polynomial b = V("x").pow(2) - V("y") * Rational(3) + Polynomial(5);
  CHECK((a * b).divide_exact(a) == b);
  CHECK((a * b).divide_exact(b) == a);
  CHECK_THROWS_AS((a * a + Polynomial(1)).divide_exact(a), CalcError);
}

TEST_CASE("substitute and evaluate") {
  Polynomial p = V("x").pow(2) + V("y");
  CHECK(p.substitute({{"x", V("y") + Polynomial(1)}}) ==
        V("y").pow(2) + V("y") * Rational(3) + Polynomial(1));
  CHECK(p.evaluate({{"x", Rational(3)}, {"y", Rational(-2)}}) == Rational(7));
}

TEST_CASE("weighted truncation and series") {
  WeightTable w{{"u", 1}, {"v", 2}};
  Polynomial u = V("u") + V("v");
  Polynomial geo = geometric_series(u, w, 4);
  // (1 - u) * geometric_series(u) == 1 up to the truncation order.
  Polynomial prod = ((Polynomial(1) - u) * geo).truncate_weight(w, 4);
  CHECK(prod == Polynomial(1));
  // exp and log are mutually inverse.
  Polynomial lg = log1p_series(u, w, 5);
  CHECK(exp_series(lg, w, 5) == (Polynomial(1) + u));
  CHECK(Polynomial::monomial_weight({{"u", 3}, {"v", 1}}, w) == 5);
  CHECK(V("v").pow(3).truncate_weight(w, 5) == Polynomial());
}
