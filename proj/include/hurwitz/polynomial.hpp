#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hurwitz/errors.hpp"
#include "hurwitz/rational.hpp"

#include <nlohmann/json_fwd.hpp>

namespace hurwitz {

/// A monomial: variable name -> positive exponent. Absent variables have
/// exponent zero. Variables are interned by name, not position, because the
/// variable universe (xi_k, delta_{k,l}, ...) is open-ended.
using Monomial = std::map<std::string, int>;

/// Weight table for quasihomogeneity checks (variable name -> weight).
using WeightTable = std::map<std::string, int>;

/// Sparse multivariate polynomial with exact rational coefficients.
/// Zero coefficients are never stored; equality is equality of term maps.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Rational& c);
  explicit Polynomial(long c);

  static Polynomial variable(const std::string& name, int exp = 1);
  static Polynomial constant(const Rational& c) { return Polynomial(c); }

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// The coefficient of an exact monomial (zero if absent).
  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator*=(const Polynomial& o);
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator*=(const Rational& c);
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return terms_ != o.terms_; }

  Polynomial pow(int e) const;

  /// Simultaneous substitution; variables absent from the map are fixed.
  Polynomial substitute(const std::map<std::string, Polynomial>& repl) const;

  /// Full evaluation; every variable occurring must have a value.
  Rational evaluate(const std::map<std::string, Rational>& vals) const;

  /// Divides by a single polynomial known to divide exactly; used for
  /// synthetic division by linear factors and content extraction.
  /// Throws CalcError when the division leaves a remainder.
  Polynomial divide_exact(const Polynomial& divisor) const;

  /// Keeps only the terms whose monomials satisfy the predicate.
  Polynomial filter(const std::function<bool(const Monomial&)>& pred) const;

  /// Weighted degree of a monomial; every variable needs a weight entry.
  static int monomial_weight(const Monomial& m, const WeightTable& w);

  /// The common weighted degree of all terms. Throws ZeroPolynomial on the
  /// zero polynomial and NotHomogeneous on mixed weights.
  int weighted_degree(const WeightTable& w) const;

  /// Drops all terms of weighted degree > bound.
  Polynomial truncate_weight(const WeightTable& w, int bound) const;

  /// Degree in a single variable.
  int degree_in(const std::string& var) const;

  /// Total (unweighted) degree; -1 for the zero polynomial.
  int total_degree() const;

  /// Sorted list of variables that occur.
  std::vector<std::string> variables() const;

  /// Canonical deterministic rendering: terms ordered by total degree
  /// descending, ties broken lexicographically (ascending) on the exponent
  /// vector over bytewise-sorted variable names.
  std::string to_text() const;

  /// JSON rendering {"terms":[{"mono":{var:exp,...},"coef":"p/q"},...]} in
  /// the same canonical term order.
  nlohmann::json to_json() const;
  static Polynomial from_json(const nlohmann::json& j);

  /// Canonical term order used for rendering (true when a precedes b).
  static bool term_order(const Monomial& a, const Monomial& b);

  void add_term(const Monomial& m, const Rational& c);

 private:
  std::map<Monomial, Rational> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) {
  return p * c;
}

/// Truncated power-series helpers under a weight table. `u` must have no
/// weight-zero part; all results are truncated at weighted degree `bound`.
Polynomial geometric_series(const Polynomial& u, const WeightTable& w,
                            int bound);          // 1 + u + u^2 + ...
Polynomial exp_series(const Polynomial& u, const WeightTable& w, int bound);
Polynomial log1p_series(const Polynomial& u, const WeightTable& w, int bound);

/// Recursive-descent parser for polynomial expressions with +, -, *, ^,
/// parentheses, integer/rational literals and (unicode) variable names.
Polynomial parse_polynomial(const std::string& text);

}  // namespace hurwitz
