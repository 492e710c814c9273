#pragma once

#include <map>
#include <string>
#include <vector>

#include "hurwitz/polynomial.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

/// A linear system over the rationals with named unknowns.
struct LinearSystem {
  std::vector<std::string> unknowns;
  // Each row: coefficients (same length as unknowns) and right-hand side.
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;

  void add_row(const std::vector<Rational>& coeffs, const Rational& b);

  /// Appends the equation "p == 0" where p is affine-linear in the unknowns;
  /// every unknown variable of p must be listed, all other variables must be
  /// absent (p is a pure linear expression in the unknowns plus a constant).
  void add_zero_equation(const Polynomial& p);
};

enum class SolveStatus { Solved, UnderDetermined, Inconsistent };

struct SolveResult {
  SolveStatus status;
  std::map<std::string, Rational> values;  // populated when Solved
};

/// Exact rational Gaussian elimination.
SolveResult solve_linear(const LinearSystem& sys);

}  // namespace hurwitz
