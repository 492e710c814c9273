#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "hurwitz/errors.hpp"
#include "hurwitz/local_models.hpp"
#include "hurwitz/vars.hpp"

using namespace hurwitz;
using vars::V;

namespace {
Polynomial S() { return V(vars::Sigma); }
Polynomial P() { return V(vars::Psi); }
Polynomial D() { return V(vars::Delta); }
Polynomial Nn() { return V(vars::N); }
Polynomial T() { return V(vars::T); }
}  // namespace

TEST_CASE("model geometry") {
  LocalModel a3 = LocalModel::A(3);
  CHECK(a3.weights() == std::vector<int>{1, 2, 3});
  CHECK(a3.dim() == 2);
  CHECK(a3.degree_f() == 4);
  CHECK(a3.p_degree() == Rational(3));
  CHECK(a3.sigma_value() == T() * Rational(3));
  CHECK(a3.psi_value() == T() * Rational(4));
  CHECK(a3.delta_value() == Polynomial());

  LocalModel i21 = LocalModel::I(2, 1);
  CHECK(i21.weights() == std::vector<int>{1, 1, 2});
  CHECK(i21.degree_f() == 3);
  CHECK(i21.p_degree() == Rational(3));
  CHECK(i21.sigma_value() == T() * Rational(2));
  CHECK(i21.psi_value() == T() * Rational(2));
  CHECK(i21.n_value() == T() * Rational(3));
  CHECK(i21.delta_value() == T() * T() * Rational(2));

  CHECK(wps_degree({1, 2, 3}) == Rational(1, 6));
  CHECK(wps_degree({1, 1}) == Rational(1));
}

TEST_CASE("thom class restriction") {
  // Independent oracle: on the order-k unfolding, the restriction of the
  // order-i critical-point class is the falling factorial (k)_i times t^i,
  // because Sigma -> k t and Psi -> (k+1) t turn the j-th linear factor
  // into (k - j + 1) t.
  for (int i = 1; i <= 8; ++i) {
    for (int k = 1; k <= 12; ++k) {
      Rational expect = falling_factorial(Rational(k), i);
      Polynomial restricted = LocalModel::A(k).substitute(thom_Ai(i));
      CHECK(restricted == T().pow(i) * expect);
    }
  }
  CHECK(thom_Ai(1) == S());
  CHECK(thom_Ai(2) == S() * (S() * Rational(2) - P()));
}

TEST_CASE("pochhammer polynomial in the symbolic order") {
  // (k+1) k (k-1): evaluate at a few integers against falling_factorial.
  for (int m = 0; m <= 5; ++m) {
    Polynomial p = pochhammer_poly(m);
    for (int k = 0; k <= 6; ++k) {
      CHECK(p.evaluate({{vars::K, Rational(k)}}) ==
            falling_factorial(Rational(k + 1), m));
    }
  }
  CHECK(gen_series_coefficient(parse_partition("1^2"), 3) ==
        falling_factorial(Rational(4), 4));
}

TEST_CASE("model pushforward") {
  LocalModel a2 = LocalModel::A(2);
  CHECK(a2.push(S() * P()) == T() * Rational(6));  // 2 * (3t)
  CHECK(a2.push(P().pow(2)) == Polynomial());      // no critical factor
  CHECK(a2.push(S() * V("q")) == V("q") * Rational(2));
  CHECK_THROWS_AS(a2.push(Nn() * P()), MalformedClass);

  LocalModel i11 = LocalModel::I(1, 1);
  // Delta branch: strip Delta, multiply by the nodal image divisor (k+l) t.
  CHECK(i11.push(D()) == T() * Rational(2));
  CHECK(i11.push(D() * Nn()) == T().pow(2) * Rational(4));
  // Sigma branch on the I model.
  CHECK(i11.push(S()) == Rational(2) * Polynomial(1));
}

TEST_CASE("nodal corrections") {
  CHECK(solve_Q(2) == Polynomial(-1));
  CHECK(universal_R(2) == S() * (S() * Rational(2) - P()) - D());
  // Vanishing property: universal_R(i) restricts to zero on every I model
  // with k + l <= i (that is the defining system for Q).
  for (int i = 2; i <= 5; ++i) {
    Polynomial r = universal_R(i);
    for (int k = 1; k < i; ++k) {
      for (int l = 1; l <= k && k + l <= i; ++l) {
        CHECK(LocalModel::I(k, l).substitute(r) == Polynomial());
      }
    }
  }
}

TEST_CASE("residual classes") {
  ResidualCalculus rc;
  CHECK(rc.residual(parse_label("1^1")) == S());
  CHECK(rc.residual(parse_label("1^2")) ==
        (S() * P() - S().pow(2) * Rational(3) + D()) * Rational(2));
  // A simple entry multiplies the rest by minus its weight.
  CHECK(rc.residual(parse_label("1^1;2^1")) ==
        rc.residual(parse_label("2^1")) * Rational(-2));
  CHECK(rc.residual(parse_label("1^1;1^1;1^2")) ==
        rc.residual(parse_label("1^2")) * Rational(6));
  // Critical-locus part of a single-value label, before nodal corrections.
  Polynomial sp = rc.sigma_psi_part(parse_partition("1^2"));
  CHECK(sp == S() * P() * Rational(2) - S().pow(2) * Rational(6));
  // Quasihomogeneity: weighted degree = weight - (#values - 1).
  WeightTable w = vars::curve_weights();
  CHECK(rc.residual(parse_label("1^1,3^1")).weighted_degree(w) == 4);
  CHECK(rc.residual(parse_label("2^1;2^1")).weighted_degree(w) == 3);
  CHECK_THROWS_AS(rc.residual(MultiPartition{}), CalcError);
}

TEST_CASE("residual cache round trip") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "residual-cache-test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  setenv("STRATA_CACHE_DIR", dir.c_str(), 1);

  Polynomial first;
  {
    ResidualCalculus rc;
    first = rc.residual(parse_label("1^2"));
  }
  fs::path file = dir / "residuals.v1.json";
  CHECK(fs::exists(file));
  {
    ResidualCalculus rc;
    CHECK(rc.residual(parse_label("1^2")) == first);
  }
  // A corrupt cache is ignored, not fatal.
  {
    std::ofstream out(file);
    out << "{not json";
  }
  {
    ResidualCalculus rc;
    CHECK(rc.residual(parse_label("1^2")) == first);
  }
  unsetenv("STRATA_CACHE_DIR");
  fs::remove_all(dir);
}
