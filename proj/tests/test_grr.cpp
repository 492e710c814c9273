#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hurwitz/errors.hpp"
#include "hurwitz/grr.hpp"
#include "hurwitz/vars.hpp"

using namespace hurwitz;
using vars::V;

namespace {
const WeightTable kW{{"a", 1}, {"b", 1}, {"N1", 1}, {"N2", 2},
                     {vars::Sigma, 1}};

// Chern classes of a direct sum via the Whitney formula.
ChernVector direct_sum(const ChernVector& e, const ChernVector& f, int order) {
  ChernVector out;
  out.rank = e.rank + f.rank;
  for (int i = 1; i <= order; ++i) {
    Polynomial ci;
    for (int j = 0; j <= i; ++j) ci += e.chern(j) * f.chern(i - j);
    out.c.push_back(ci);
  }
  return out;
}

Polynomial sum(const std::vector<Polynomial>& parts) {
  Polynomial s;
  for (const Polynomial& p : parts) s += p;
  return s;
}
}  // namespace

TEST_CASE("line bundle chern character is exponential") {
  ChernVector line{Rational(1), {V("a")}};
  std::vector<Polynomial> ch = ch_from_chern(line, 6, kW);
  for (int i = 0; i <= 6; ++i) {
    CHECK(ch[i] == V("a").pow(i) * (Rational(1) / factorial(i)));
  }
}

TEST_CASE("rank two dual chern character") {
  // Dual of a rank-2 bundle with c1 = N1, c2 = N2.
  ChernVector dual{Rational(2), {-V("N1"), V("N2")}};
  std::vector<Polynomial> ch = ch_from_chern(dual, 5, kW);
  CHECK(ch[0] == Polynomial(2));
  CHECK(ch[1] == -V("N1"));
  CHECK(ch[2] == (V("N1").pow(2) - V("N2") * Rational(2)) * Rational(1, 2));
  CHECK(ch[3] == (V("N1") * V("N2") * Rational(3) - V("N1").pow(3)) *
                     Rational(1, 6));
  CHECK(ch[4] == (V("N1").pow(4) - V("N1").pow(2) * V("N2") * Rational(4) +
                  V("N2").pow(2) * Rational(2)) *
                     Rational(1, 24));
}

TEST_CASE("chern character is additive over direct sums") {
  ChernVector e{Rational(1), {V("a")}};
  ChernVector f{Rational(2), {V("N1"), V("N2")}};
  ChernVector ef = direct_sum(e, f, 5);
  std::vector<Polynomial> che = ch_from_chern(e, 5, kW);
  std::vector<Polynomial> chf = ch_from_chern(f, 5, kW);
  std::vector<Polynomial> chef = ch_from_chern(ef, 5, kW);
  for (int i = 0; i <= 5; ++i) CHECK(chef[i] == che[i] + chf[i]);
}

TEST_CASE("todd class") {
  // log(x/(1-e^{-x})) = x/2 - x^2/24 + x^4/2880 - x^6/181440 + ...
  // (odd coefficients beyond the first vanish); g[m-1] is the x^m term.
  std::vector<Rational> g = todd_log_coefficients(6);
  CHECK(g[0] == Rational(1, 2));
  CHECK(g[1] == Rational(-1, 24));
  CHECK(g[2] == Rational(0));
  CHECK(g[3] == Rational(1, 2880));
  CHECK(g[4] == Rational(0));
  CHECK(g[5] == Rational(-1, 181440));

  // Line bundle: td = x/(1-e^{-x}).
  ChernVector line{Rational(1), {V("a")}};
  std::vector<Polynomial> td = td_series(line, 4, kW);
  CHECK(td[0] == Polynomial(1));
  CHECK(td[1] == V("a") * Rational(1, 2));
  CHECK(td[2] == V("a").pow(2) * Rational(1, 12));
  CHECK(td[3] == Polynomial());
  CHECK(td[4] == V("a").pow(4) * Rational(-1, 720));

  // Rank 2 with Chern classes c1, c2: td_2 = (c1^2 + c2)/12.
  ChernVector rk2{Rational(2), {V("N1"), V("N2")}};
  std::vector<Polynomial> td2 = td_series(rk2, 2, kW);
  CHECK(td2[1] == V("N1") * Rational(1, 2));
  CHECK(td2[2] ==
        (V("N1").pow(2) + V("N2")) * Rational(1, 12));
}

TEST_CASE("todd class is multiplicative over direct sums") {
  ChernVector e{Rational(1), {V("a")}};
  ChernVector f{Rational(2), {V("N1"), V("N2")}};
  ChernVector ef = direct_sum(e, f, 5);
  Polynomial tde = sum(td_series(e, 5, kW));
  Polynomial tdf = sum(td_series(f, 5, kW));
  Polynomial tdef = sum(td_series(ef, 5, kW));
  CHECK((tde * tdf).truncate_weight(kW, 5) == tdef);
}

TEST_CASE("koszul characters") {
  // Codimension 1: 1 - e^{-Sigma}.
  Polynomial k1 = koszul_ch(1, 3);
  Polynomial s = V(vars::Sigma);
  CHECK(k1 == s - s.pow(2) * Rational(1, 2) + s.pow(3) * Rational(1, 6));

  // Codimension 2 leading terms.
  Polynomial k2 = koszul_ch(2, 3);
  CHECK(k2 == V("N2") - V("N1") * V("N2") * Rational(1, 2));
  Polynomial n1 = V("N1");
  Polynomial n2 = V("N2");
  CHECK(koszul_ch(2, 4).coefficient({{"N1", 2}, {"N2", 1}}) ==
        Rational(1, 6));
  CHECK(koszul_ch(2, 4).coefficient({{"N2", 2}}) == Rational(-1, 12));

  // The factored form equals td(N)^{-1} truncated:
  // 1 - N1/2 + (2 N1^2 - N2)/12 - (N1^3 - N1 N2)/24 + ...
  Polynomial f3 = koszul_factored(3);
  CHECK(f3 == Polynomial(1) - n1 * Rational(1, 2) +
                  (n1.pow(2) * Rational(2) - n2) * Rational(1, 12) -
                  (n1.pow(3) - n1 * n2) * Rational(1, 24));
  // Cross-check the factorization itself.
  CHECK((koszul_factored(4) * n2).truncate_weight(kW, 5) == koszul_ch(2, 5));
}

TEST_CASE("koszul equals top chern class times inverse todd") {
  // For a rank-2 bundle E: 1 - ch(E^dual) + ch(det E^dual)
  //   = c2(E) * td(E)^{-1}, checked through weighted degree 5.
  ChernVector dual{Rational(2), {-V("N1"), V("N2")}};
  Polynomial lhs = Polynomial(1) - sum(ch_from_chern(dual, 5, kW));
  ChernVector det_dual{Rational(1), {-V("N1")}};
  lhs += sum(ch_from_chern(det_dual, 5, kW));
  lhs = lhs.truncate_weight(kW, 5);

  ChernVector e{Rational(2), {V("N1"), V("N2")}};
  Polynomial td = sum(td_series(e, 5, kW));
  Polynomial td_inv = geometric_series(-(td - Polynomial(1)), kW, 5);
  Polynomial rhs = (V("N2") * td_inv).truncate_weight(kW, 5);
  CHECK(lhs == rhs);
}

TEST_CASE("pushforward expansion levels") {
  WeightTable w = vars::curve_weights();
  std::vector<GrrLevel> levels = grr_rhs(6);
  Polynomial om = V(vars::Omega);
  Polynomial nn = V(vars::N);
  Polynomial dd = V(vars::Delta);
  CHECK(levels[0].combined == Polynomial(2));
  CHECK(levels[1].coefficient == Rational(1, 2));
  CHECK(levels[1].cls == om);
  CHECK(levels[2].coefficient == Rational(1, 12));
  CHECK(levels[2].cls == om.pow(2) + dd);
  CHECK(levels[3].combined == Polynomial());
  CHECK(levels[4].coefficient == Rational(-1, 720));
  CHECK(levels[4].cls == om.pow(4) + (nn.pow(2) - dd * Rational(3)) * dd);
  CHECK(levels[5].combined == Polynomial());
  CHECK(levels[6].coefficient == Rational(1, 30240));
  CHECK(levels[6].cls ==
        om.pow(6) +
            (nn.pow(4) - nn.pow(2) * dd * Rational(5) + dd.pow(2) * Rational(5)) * dd);
  // Homogeneity of every level.
  for (int d = 1; d <= 6; ++d) {
    if (levels[d].combined.is_zero()) continue;
    CHECK(levels[d].combined.weighted_degree(w) == d);
  }
}
