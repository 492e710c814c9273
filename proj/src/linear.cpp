#include "hurwitz/linear.hpp"

#include <algorithm>

#include "hurwitz/errors.hpp"

namespace hurwitz {

void LinearSystem::add_row(const std::vector<Rational>& coeffs,
                           const Rational& b) {
  if (coeffs.size() != unknowns.size())
    throw CalcError("add_row: coefficient count mismatch");
  rows.push_back(coeffs);
  rhs.push_back(b);
}

void LinearSystem::add_zero_equation(const Polynomial& p) {
  std::vector<Rational> coeffs(unknowns.size(), Rational(0));
  Rational constant(0);
  for (const auto& [m, c] : p.terms()) {
    if (m.empty()) {
      constant += c;
      continue;
    }
    if (m.size() != 1 || m.begin()->second != 1)
      throw CalcError("add_zero_equation: expression is not affine-linear");
    auto it = std::find(unknowns.begin(), unknowns.end(), m.begin()->first);
    if (it == unknowns.end())
      throw CalcError("add_zero_equation: unknown variable " +
                      m.begin()->first);
    coeffs[static_cast<size_t>(it - unknowns.begin())] += c;
  }
  // p == 0  <=>  coeffs . x = -constant
  add_row(coeffs, -constant);
}

SolveResult solve_linear(const LinearSystem& sys) {
  size_t n = sys.unknowns.size();
  size_t m = sys.rows.size();
  // Augmented matrix.
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n + 1));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = sys.rows[i][j];
    a[i][n] = sys.rhs[i];
  }

  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < n && row < m; ++col) {
    size_t p = row;
    while (p < m && a[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[row]);
    Rational inv = Rational(1) / a[row][col];
    for (size_t j = col; j <= n; ++j) a[row][j] *= inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (size_t j = col; j <= n; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  // Inconsistency: a zero row with nonzero rhs.
  for (size_t i = row; i < m; ++i)
    if (a[i][n] != 0) return {SolveStatus::Inconsistent, {}};
  if (pivot_col.size() < n) return {SolveStatus::UnderDetermined, {}};

  SolveResult res{SolveStatus::Solved, {}};
  for (size_t i = 0; i < n; ++i)
    res.values[sys.unknowns[pivot_col[i]]] = a[i][n];
  return res;
}

}  // namespace hurwitz
