#include "hurwitz/grr.hpp"

#include "hurwitz/errors.hpp"
#include "hurwitz/vars.hpp"

namespace hurwitz {

using vars::V;

std::vector<Polynomial> ch_from_chern(const ChernVector& e, int order,
                                      const WeightTable& weights) {
  // Newton power sums from elementary symmetric functions:
  //   p_m = sum_{i=1}^{m-1} (-1)^{i-1} c_i p_{m-i} + (-1)^{m-1} m c_m.
  std::vector<Polynomial> p(order + 1);
  for (int m = 1; m <= order; ++m) {
    Polynomial acc;
    for (int i = 1; i < m; ++i)
      acc += e.chern(i) * p[m - i] * Rational(i % 2 == 1 ? 1 : -1);
    acc += e.chern(m) * Rational(m % 2 == 1 ? m : -m);
    p[m] = acc.truncate_weight(weights, order);
  }
  std::vector<Polynomial> ch(order + 1);
  ch[0] = Polynomial(e.rank);
  for (int m = 1; m <= order; ++m) ch[m] = p[m] * (Rational(1) / factorial(m));
  return ch;
}

std::vector<Rational> todd_log_coefficients(int order) {
  // f(x) = (1 - e^{-x}) / x = sum_{j>=0} (-x)^j / (j+1)!,
  // g(x) = log(1/f(x)) computed as a formal power series.
  std::vector<Rational> f(order + 1);
  for (int j = 0; j <= order; ++j)
    f[j] = Rational(j % 2 == 0 ? 1 : -1) / Rational(factorial(j + 1));
  // inv = 1/f with f[0] = 1.
  std::vector<Rational> inv(order + 1);
  inv[0] = 1;
  for (int m = 1; m <= order; ++m) {
    Rational s(0);
    for (int j = 1; j <= m; ++j) s += f[j] * inv[m - j];
    inv[m] = -s;
  }
  // log(inv) via log(1+u) with u = inv - 1.
  std::vector<Rational> u(order + 1);
  for (int m = 1; m <= order; ++m) u[m] = inv[m];
  std::vector<Rational> g(order + 1);
  std::vector<Rational> pw = u;  // u^j, updated in place
  for (int j = 1; j <= order; ++j) {
    Rational sign = (j % 2 == 1) ? 1 : -1;
    for (int m = j; m <= order; ++m) g[m] += pw[m] * sign / Rational(j);
    // pw <- pw * u (valuation of u is 1, so degrees below j+1 vanish)
    std::vector<Rational> next(order + 1);
    for (int a = j; a <= order; ++a)
      for (int b = 1; a + b <= order; ++b) next[a + b] += pw[a] * u[b];
    pw = next;
  }
  g.erase(g.begin());  // drop the zero constant term: return g_1 .. g_order
  return g;
}

std::vector<Polynomial> td_series(const ChernVector& e, int order,
                                  const WeightTable& weights) {
  std::vector<Polynomial> ch = ch_from_chern(e, order, weights);
  std::vector<Rational> g = todd_log_coefficients(order);
  // exponent = sum_m g_m p_m  (p_m = m! ch_m)
  Polynomial expo;
  for (int m = 1; m <= order; ++m)
    expo += ch[m] * (g[m - 1] * Rational(factorial(m)));
  Polynomial td = exp_series(expo, weights, order);
  std::vector<Polynomial> out(order + 1);
  for (int d = 0; d <= order; ++d)
    out[d] = td.filter([&](const Monomial& m) {
      return Polynomial::monomial_weight(m, weights) == d;
    });
  return out;
}

Polynomial koszul_ch(int codim, int order) {
  if (codim == 1) {
    WeightTable w{{vars::Sigma, 1}};
    // ch(O) - ch(O(-D)) = 1 - e^{-Sigma}
    return Polynomial(1) -
           exp_series(-V(vars::Sigma), w, order).truncate_weight(w, order);
  }
  if (codim == 2) {
    WeightTable w{{"N1", 1}, {"N2", 2}};
    // 1 - ch(E^dual) + ch(det E^dual), E the rank-2 normal bundle.
    ChernVector dual{Rational(2), {-V("N1"), V("N2")}};
    std::vector<Polynomial> ch = ch_from_chern(dual, order, w);
    Polynomial ch_dual;
    for (const auto& c : ch) ch_dual += c;
    Polynomial det = exp_series(-V("N1"), w, order);
    return (Polynomial(1) - ch_dual + det).truncate_weight(w, order);
  }
  throw CalcError("koszul_ch: codimension must be 1 or 2");
}

Polynomial koszul_factored(int order) {
  return koszul_ch(2, order + 2).divide_exact(V("N2"));
}

std::vector<GrrLevel> grr_rhs(int order) {
  if (order < 0 || order > 8)
    throw CalcError("grr_rhs: order must be between 0 and 8");
  WeightTable w{{vars::Omega, 1}, {vars::N, 1}, {vars::Delta, 2}};

  // Coefficients a_d of x / (1 - e^{-x}).
  std::vector<Rational> f(order + 1), a(order + 1);
  for (int j = 0; j <= order; ++j)
    f[j] = Rational(j % 2 == 0 ? 1 : -1) / Rational(factorial(j + 1));
  a[0] = 1;
  for (int m = 1; m <= order; ++m) {
    Rational s(0);
    for (int j = 1; j <= m; ++j) s += f[j] * a[m - j];
    a[m] = -s;
  }

  // Correction sheaf: c_1 = 0, c_j = (-1)^j N^{j-2} Delta for j >= 2.
  ChernVector corr;
  corr.rank = 0;
  corr.c.push_back(Polynomial());
  for (int j = 2; j <= order; ++j)
    corr.c.push_back(Polynomial::variable(vars::N, 1).pow(j - 2) *
                     V(vars::Delta) * Rational(j % 2 == 0 ? 1 : -1));
  std::vector<Polynomial> td_corr = td_series(corr, order, w);

  std::vector<GrrLevel> out;
  for (int d = 0; d <= order; ++d) {
    GrrLevel lvl;
    lvl.combined =
        Polynomial::variable(vars::Omega, 1).pow(d) * a[d] + td_corr[d];
    if (a[d] != 0) {
      lvl.coefficient = a[d];
      lvl.cls = lvl.combined * (Rational(1) / a[d]);
    } else {
      lvl.coefficient = 0;
      lvl.cls = lvl.combined;
    }
    out.push_back(std::move(lvl));
  }
  return out;
}

}  // namespace hurwitz
