#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hurwitz/errors.hpp"
#include "hurwitz/strata.hpp"
#include "hurwitz/vars.hpp"

using namespace hurwitz;
using vars::V;

namespace {
ResidualCalculus& rc() {
  static ResidualCalculus instance;
  return instance;
}
}  // namespace

TEST_CASE("assembled strata match the stored tables") {
  // assemble() itself cross-checks tabulated labels and throws
  // ConventionMismatch on disagreement, so walking both tables re-derives
  // every stored class from the residual calculus.
  for (const auto& [label, general] : golden_general_table()) {
    StratumExpression s = assemble(parse_label(label), rc());
    CHECK(s.general_g == general);
  }
  for (const auto& [label, g0] : golden_g0_table()) {
    CHECK(sigma_g0(parse_label(label), rc()) == g0);
  }
  CHECK(golden_general_table().size() == 8);
  CHECK(golden_g0_table().size() == 8);
  // Spot value: the simplest degenerate stratum at genus zero.
  CHECK(sigma_g0(parse_label("2^1"), rc()) ==
        (V(vars::n) - Polynomial(1)) * V(vars::psi) * Rational(6) -
            V(vars::delta(0, 0)) * Rational(3));
}

TEST_CASE("degree pairing") {
  CHECK(degree(Polynomial(1), 4) == Rational(4));     // n^(n-3)
  CHECK(degree(V(vars::delta(0, 0)), 4) == Rational(15));
  CHECK(degree(V(vars::psi), 4) == Rational(4));      // psi absorbed
  CHECK(degree(sigma_g0(parse_label("2^1"), rc()), 3) == Rational(3));
  CHECK_THROWS_AS(degree(V(vars::xi(1)), 4), UnknownMonomialDegree);

  // The five basic degree forms at small n.
  const auto& forms = basic_degree_forms();
  CHECK(forms.size() == 5);
  for (const auto& [key, form] : forms) {
    if (key == "1") CHECK(form.value(4) == Rational(4));
    if (key == "δ_{0,0}") CHECK(form.value(4) == Rational(15));
  }
}

TEST_CASE("psi intersection numbers") {
  CHECK(mzn_psi_integral({0, 0, 0}) == Rational(1));          // n = 3
  CHECK(mzn_psi_integral({1, 0, 0, 0}) == Rational(1));       // n = 4
  CHECK(mzn_psi_integral({2, 0, 0, 0, 0}) == Rational(1));
  CHECK(mzn_psi_integral({1, 1, 0, 0, 0}) == Rational(2));
  CHECK_THROWS_AS(mzn_psi_integral({3, 0, 0}), DimensionMismatch);
}

TEST_CASE("hurwitz numbers from the degree pairing") {
  CHECK(hurwitz_number(parse_label("2^1"), 3, rc()) == Rational(1));
  CHECK(hurwitz_number(parse_label("1^2"), 4, rc()) == Rational(12));
  CHECK(hurwitz_number(parse_label("2^1;2^1"), 4, rc()) == Rational(6));
  // Closed forms agree with the pairing wherever defined.
  for (const auto& [label, form] : h_closed_forms()) {
    MultiPartition m = parse_label(label);
    for (long n = 4; n <= 8; ++n) {
      if (!form.valid(n)) continue;
      try {
        CHECK(hurwitz_number(m, n, rc()) == form.value(n));
      } catch (const NegativeSimplePoints&) {
        // Label infeasible at this degree.
      }
    }
  }
  CHECK_THROWS_AS(h_closed_form(parse_label("4^1")), UnknownLabel);
}

TEST_CASE("nonisolated locus data") {
  CHECK(i_infty(4) == Rational(24));
  CHECK(i_infty_form().value(4) == Rational(24));
  CHECK(correction(parse_label("4^1")) == 5);
  CHECK(correction(parse_label("2^2")) == -9);
  CHECK(correction(parse_label("1^4")) == -16);
  CHECK_THROWS_AS(correction(parse_label("2^1")), UnknownLabel);
  // Stored record consistency: deg σ - deg σ^exp = corr * deg I_infty.
  for (const NonisolatedRecord& r : nonisolated_data()) {
    CHECK(r.deg_sigma - r.deg_sigma_exp == Rational(r.corr) * i_infty(r.n));
    CHECK(correction(parse_label(r.label)) == r.corr);
  }
  CHECK(nonisolated_data().size() == 5);
}

TEST_CASE("latex rendering") {
  CHECK(latex_bclass(sigma_g0(parse_label("2^1"), rc())) ==
        "6(n-1)\\psi-3\\delta_{0,0}");
  CHECK(latex_bclass(Polynomial(1)) == "1");
  CHECK(latex_bclass(-V(vars::psi)) == "-\\psi");
}
