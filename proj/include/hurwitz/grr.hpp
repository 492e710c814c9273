#pragma once

#include <string>
#include <vector>

#include "hurwitz/polynomial.hpp"

namespace hurwitz {

// A Chern-root style datum: rank plus Chern classes c[1], c[2], ...
// (c[0] is unused and kept as 1 for convenience).
struct ChernVector {
  Rational rank;
  std::vector<Polynomial> c;  // c[i] = i-th Chern class, i >= 1

  Polynomial chern(int i) const {
    if (i == 0) return Polynomial(1);
    if (i < 0 || i >= static_cast<int>(c.size()) + 1) return Polynomial();
    return c[i - 1];
  }
};

// Chern character components ch_0 .. ch_order via Newton's identities,
// as polynomials in the given Chern classes (graded by `weights`).
std::vector<Polynomial> ch_from_chern(const ChernVector& e, int order,
                                      const WeightTable& weights);

// Todd class components td_0 .. td_order of a bundle with the given Chern
// classes.
std::vector<Polynomial> td_series(const ChernVector& e, int order,
                                  const WeightTable& weights);

// Coefficients g_1 .. g_order of log(x / (1 - e^{-x})) = sum g_m x^m,
// so that td = exp(sum g_m p_m) with p_m the Newton power sums.
std::vector<Rational> todd_log_coefficients(int order);

// Chern character of the Koszul resolution of the structure sheaf of a
// regularly embedded locus of codimension 1 or 2, through weighted degree
// `order`.  Codimension 1 uses the variable Sigma (class of the divisor);
// codimension 2 uses N1, N2 (Chern classes of the normal bundle).
Polynomial koszul_ch(int codim, int order);

// The codimension-2 Koszul character divided by N2 (which it is divisible
// by): the "localized" contribution along the locus.
Polynomial koszul_factored(int order);

// One graded level of the direct-image expansion: a scalar coefficient,
// the tautological class it multiplies, and their product.
struct GrrLevel {
  Rational coefficient;
  Polynomial cls;       // in c1ω, N, Δ
  Polynomial combined;  // coefficient * cls
};

// Levels 0 .. order of the pushforward expansion, in variables c1ω, N, Δ
// (weights 1, 1, 2).  Level d is homogeneous of weighted degree d.
std::vector<GrrLevel> grr_rhs(int order);

}  // namespace hurwitz
