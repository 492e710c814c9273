#pragma once

#include <string>

#include "hurwitz/polynomial.hpp"

namespace hurwitz::vars {

// Classes on the universal curve.
inline const std::string Sigma = "Σ";   // first relative Chern class
inline const std::string Psi = "Ψ";     // tautological class upstairs
inline const std::string Delta = "Δ";   // nodal locus of fibers
inline const std::string N = "N";       // normal operator on Δ
inline const std::string Pi = "Π";      // pole divisor
inline const std::string Omega = "c1ω";  // c1 of the relative dualizing sheaf

// Local-model bookkeeping.
inline const std::string T = "t";  // equivariant parameter
inline const std::string K = "k";  // symbolic model order

// Classes on the base.
inline const std::string psi = "ψ";
inline const std::string n = "n";
inline const std::string g = "g";

inline std::string xi(int k) { return "ξ_" + std::to_string(k); }
inline std::string delta(int k, int l) {
  return "δ_{" + std::to_string(k) + "," + std::to_string(l) + "}";
}

inline Polynomial V(const std::string& name) {
  return Polynomial::variable(name);
}

/// Weights for the quasihomogeneous grading on universal-curve classes.
inline WeightTable curve_weights() {
  return {{Sigma, 1}, {Psi, 1}, {N, 1}, {Delta, 2}, {Pi, 1}, {Omega, 1}};
}

}  // namespace hurwitz::vars
