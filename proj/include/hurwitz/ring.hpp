#pragma once

#include <vector>

#include "hurwitz/polynomial.hpp"

namespace hurwitz {

// Rewrite rules of the tautological quotient ring on the universal curve.
// Individual rules can be disabled for consistency experiments.
struct RingRules {
  bool pi_power = true;     // Pi^a -> (-Psi)^(a-1) Pi for a >= 2
  bool sigma_pi = true;     // Sigma * Pi -> 0
  bool pi_delta = true;     // Pi * Delta -> 0
  bool sigma_delta = true;  // Sigma^a * Delta -> Psi^a * Delta
};

// Normal form of a class on the universal curve: eliminates c1ω via
// c1ω = Sigma - Psi - 2 Pi, then applies the rewrite rules.  Throws
// MalformedClass if a monomial contains N without Delta afterwards.
Polynomial reduce(const Polynomial& p, const RingRules& rules = {});

// Pushforward along the universal map to the base:
//   Psi^a Sigma^(k+1)        -> psi^a xi_k
//   Psi^a N^k Delta^(l+1)    -> psi^a delta_{k,l}
//   Psi^a Pi                 -> psi^a n
//   Psi^a (no fiber class)   -> 0
// The input must already be in normal form.
Polynomial p_push(const Polynomial& p);

// Pushforward of a product of classes from s distinct copies of the curve
// over the same base: psi^(s-1) * prod p_push(h_i).  Throws PoleObstruction
// if some factor does not vanish against the relative point class.
Polynomial q_push_product(const std::vector<Polynomial>& factors);

// Substitutes the genus-zero values of the basic pushforward classes:
// xi_0 -> 2n - 2, xi_1 -> 4(n-1) psi - delta_{0,0}, g -> 0.
Polynomial genus0_reduce(const Polynomial& p);

// Total Chern class of the relative cotangent-type sheaf on the universal
// curve, truncated at the given weighted order and reduced to normal form.
Polynomial total_chern_f(int order, const RingRules& rules = {});

// Checks the closed product formula for total_chern_f up to the given
// order under the given rules.  (With a rule disabled the identity is
// expected to fail.)
bool verify_structure_identity(int order, const RingRules& rules = {});

// Pushforward of the graded pieces of the direct-image expansion: the
// degree-`level` component of the Hodge-type character on the base, as a
// polynomial in psi, n, g, xi_k, delta_{k,l}.  Supported for level <= 6.
Polynomial hodge_ch(int level);

// Genus-zero specializations of the first few even levels (levels 2, 4, 6),
// expressed on the base with xi_0 already evaluated.
std::vector<Polynomial> genus0_identities();

}  // namespace hurwitz
