#include "hurwitz/ring.hpp"

#include "hurwitz/errors.hpp"
#include "hurwitz/grr.hpp"
#include "hurwitz/vars.hpp"

namespace hurwitz {

using vars::V;

Polynomial reduce(const Polynomial& p, const RingRules& rules) {
  Polynomial expanded = p;
  if (p.degree_in(vars::Omega) > 0)
    expanded = p.substitute(
        {{vars::Omega,
          V(vars::Sigma) - V(vars::Psi) - V(vars::Pi) * Rational(2)}});
  Polynomial out;
  for (const auto& [mono, coef] : expanded.terms()) {
    int eS = 0, ePsi = 0, eN = 0, eD = 0, ePi = 0;
    Monomial rest;
    for (const auto& [v, e] : mono) {
      if (v == vars::Sigma)
        eS = e;
      else if (v == vars::Psi)
        ePsi = e;
      else if (v == vars::N)
        eN = e;
      else if (v == vars::Delta)
        eD = e;
      else if (v == vars::Pi)
        ePi = e;
      else
        rest[v] = e;
    }
    Rational c = coef;
    if (rules.sigma_pi && ePi > 0 && eS > 0) continue;
    if (rules.pi_delta && ePi > 0 && eD > 0) continue;
    if (rules.pi_power && ePi >= 2) {
      if ((ePi - 1) % 2 == 1) c = -c;
      ePsi += ePi - 1;
      ePi = 1;
    }
    if (rules.sigma_delta && eS > 0 && eD > 0) {
      ePsi += eS;
      eS = 0;
    }
    if (eS) rest[vars::Sigma] = eS;
    if (ePsi) rest[vars::Psi] = ePsi;
    if (eN) rest[vars::N] = eN;
    if (eD) rest[vars::Delta] = eD;
    if (ePi) rest[vars::Pi] = ePi;
    Polynomial term;
    term.add_term(rest, c);
    out += term;
  }
  for (const auto& [mono, coef] : out.terms()) {
    auto itN = mono.find(vars::N);
    if (itN != mono.end() && mono.find(vars::Delta) == mono.end())
      throw MalformedClass("reduce: N without Delta in normal form");
  }
  return out;
}

Polynomial p_push(const Polynomial& p) {
  Polynomial out;
  for (const auto& [mono, coef] : p.terms()) {
    int eS = 0, ePsi = 0, eN = 0, eD = 0, ePi = 0;
    Monomial rest;
    for (const auto& [v, e] : mono) {
      if (v == vars::Sigma)
        eS = e;
      else if (v == vars::Psi)
        ePsi = e;
      else if (v == vars::N)
        eN = e;
      else if (v == vars::Delta)
        eD = e;
      else if (v == vars::Pi)
        ePi = e;
      else
        throw MalformedClass("p_push: unexpected variable " + v);
    }
    Monomial image;
    if (ePsi) image[vars::psi] = ePsi;
    if (eS >= 1 && eN == 0 && eD == 0 && ePi == 0) {
      image[vars::xi(eS - 1)] += 1;
    } else if (eD >= 1 && eS == 0 && ePi == 0) {
      image[vars::delta(eN, eD - 1)] += 1;
    } else if (ePi == 1 && eS == 0 && eN == 0 && eD == 0) {
      image[vars::n] += 1;
    } else if (eS == 0 && eN == 0 && eD == 0 && ePi == 0) {
      continue;  // fiberwise trivial, pushes to zero
    } else {
      throw MalformedClass("p_push: input not in normal form");
    }
    Polynomial term;
    term.add_term(image, coef);
    out += term;
  }
  return out;
}

Polynomial q_push_product(const std::vector<Polynomial>& factors) {
  Polynomial out(1);
  for (const auto& h : factors) {
    Polynomial reduced = reduce(h);
    if (!reduce(reduced * V(vars::Pi)).is_zero())
      throw PoleObstruction("q_push_product: factor with nonzero value "
                            "against the relative point class");
    out *= p_push(reduced);
  }
  int s = static_cast<int>(factors.size());
  if (s >= 2) out *= Polynomial::variable(vars::psi, 1).pow(s - 1);
  return out;
}

Polynomial genus0_reduce(const Polynomial& p) {
  return p.substitute(
      {{vars::xi(0), V(vars::n) * Rational(2) - Polynomial(2)},
       {vars::xi(1),
        (V(vars::n) - Polynomial(1)) * V(vars::psi) * Rational(4) -
            V(vars::delta(0, 0))},
       {vars::g, Polynomial()}});
}

namespace {

Polynomial chern_product(int order) {
  const WeightTable w = vars::curve_weights();
  Polynomial sm = V(vars::Sigma) - V(vars::Psi);
  Polynomial nd = -(V(vars::N) + V(vars::Delta));
  return ((Polynomial(1) + V(vars::Psi)) *
          (geometric_series(sm, w, order) -
           V(vars::Delta) * geometric_series(nd, w, order)))
      .truncate_weight(w, order);
}

}  // namespace

Polynomial total_chern_f(int order, const RingRules& rules) {
  return reduce(chern_product(order), rules);
}

bool verify_structure_identity(int order, const RingRules& rules) {
  const WeightTable w = vars::curve_weights();
  Polynomial lhs = total_chern_f(order, rules);
  Polynomial core = V(vars::Sigma) - V(vars::Psi) - V(vars::Pi) * Rational(2);
  Polynomial nd = -(V(vars::N) + V(vars::Delta));
  Polynomial rhs_raw =
      (geometric_series(core, w, order) *
       (Polynomial(1) - V(vars::Delta) * geometric_series(nd, w, order)) *
       (Polynomial(1) + V(vars::Psi) + V(vars::Pi) * Rational(2)))
          .truncate_weight(w, order);
  return lhs == reduce(rhs_raw, rules);
}

Polynomial hodge_ch(int level) {
  if (level < 0 || level > 6)
    throw CalcError("hodge_ch: level must be between 0 and 6");
  std::vector<GrrLevel> levels = grr_rhs(level + 1);
  Polynomial pushed = p_push(reduce(levels[level + 1].combined));
  return pushed.substitute(
      {{vars::xi(0),
        V(vars::n) * Rational(2) - Polynomial(2) + V(vars::g) * Rational(2)}});
}

std::vector<Polynomial> genus0_identities() {
  std::vector<GrrLevel> levels = grr_rhs(6);
  std::vector<Polynomial> out;
  for (int d : {2, 4, 6}) {
    Polynomial pushed = p_push(reduce(levels[d].cls));
    out.push_back(pushed.substitute(
        {{vars::xi(0), V(vars::n) * Rational(2) - Polynomial(2)},
         {vars::g, Polynomial()}}));
  }
  return out;
}

}  // namespace hurwitz
