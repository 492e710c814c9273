#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hurwitz/partitions.hpp"
#include "hurwitz/polynomial.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

/// A local model of a degenerate critical value: either the one-variable
/// unfolding of order k (a single critical point of multiplicity k+1) or the
/// two-branch folding model of bidegree (k, l).
class LocalModel {
 public:
  enum class Kind { A, I };

  static LocalModel A(int k);
  static LocalModel I(int k, int l);  // requires k >= l >= 1

  Kind kind() const { return kind_; }
  int k() const { return k_; }
  int l() const { return l_; }
  std::string name() const;

  /// Torus weights of the projectivized base.
  std::vector<int> weights() const;

  /// Degree of the model map (k+1 in the A case, k+l in the I case).
  int degree_f() const;

  /// Dimension of the projectivized base.
  int dim() const;

  /// Degree of the projection restricted to the critical locus: the number
  /// of critical points (k in the A case, k+l in the I case).
  Rational p_degree() const;

  /// Equivariant values of the basic classes as polynomials in t.
  Polynomial sigma_value() const;  // k t  /  kl t
  Polynomial psi_value() const;    // (k+1) t  /  kl t
  Polynomial n_value() const;      // (k+l) t  (I only)
  Polynomial delta_value() const;  // 0  /  kl t^2

  /// Plain substitution of the basic classes by their equivariant values.
  Polynomial substitute(const Polynomial& p) const;

  /// Model pushforward to the base of the unfolding. One factor of the
  /// critical-locus class (or of the nodal class) is stripped:
  ///   Sigma * G          ->  p_degree * substitute(G)
  ///   Q * Delta          ->  substitute(Q) * (k+l) t   (nodal image divisor)
  ///   terms without Sigma or Delta -> 0
  /// Variables other than the basic classes pass through untouched, so the
  /// input may carry undetermined coefficients.
  Polynomial push(const Polynomial& p) const;

 private:
  LocalModel(Kind kind, int k, int l) : kind_(kind), k_(k), l_(l) {}
  Kind kind_;
  int k_;
  int l_;
};

/// Reciprocal product of weights: the degree of a weighted projective space.
Rational wps_degree(const std::vector<int>& weights);

/// The universal critical-point class of order i:
/// Sigma (2 Sigma - Psi) (3 Sigma - 2 Psi) ... (i Sigma - (i-1) Psi).
Polynomial thom_Ai(int i);

/// Falling factorial (k+1) k (k-1) ... over m factors, symbolically in the
/// variable k (used by the generating series of single-value residues).
Polynomial pochhammer_poly(int m);

/// Numeric generating-series coefficient for a sub-profile alpha at order k:
/// the falling factorial (k+1)_(weight(alpha)+#parts(alpha)).
Rational gen_series_coefficient(const ReducedPartition& alpha, int k);

/// Solves for the degree-(i-2) nodal correction Q_{i-2}(N, Psi, Delta) such
/// that thom_Ai(i) + Q_{i-2} * Delta vanishes under the substitution of
/// every I model with k+l <= i. Throws SystemNotSquare when the constraint
/// count does not match the monomial count, UnsolvableSystem otherwise.
Polynomial solve_Q(int i);

/// Full critical-point class of order i: thom_Ai(i) + solve_Q(i) * Delta.
Polynomial universal_R(int i);

/// Computes and caches residual classes for arbitrary multisingularity
/// labels (with at most two degenerate critical values). Uses the
/// generating-series expansion for the critical-locus part of single-value
/// labels and undetermined coefficients against vanishing on inadequate
/// local models for everything else. Honors the STRATA_CACHE_DIR environment
/// variable for a versioned JSON cache.
class ResidualCalculus {
 public:
  ResidualCalculus();

  /// The residual class of a label; quasihomogeneous of weighted degree
  /// weight(label) - (#values - 1) in Sigma, Psi, N, Delta.
  const Polynomial& residual(const MultiPartition& label);

  /// The critical-locus (Sigma/Psi) part of a single-value residual class,
  /// from the logarithm of the equivariant generating series.
  Polynomial sigma_psi_part(const ReducedPartition& alpha) const;

  /// The assembled multisingularity class of `target` evaluated on a local
  /// model with `provider` supplying residual classes.
  static Polynomial model_sigma(
      const MultiPartition& target, const LocalModel& model,
      const std::function<Polynomial(const MultiPartition&)>& provider);

 private:
  Polynomial compute(const MultiPartition& label);
  Polynomial determine_single(const ReducedPartition& alpha);
  Polynomial determine_pair(const MultiPartition& label);

  std::map<MultiPartition, Polynomial> cache_;
  std::string cache_file_;  // empty when persistence is disabled
  void load_cache();
  void save_cache() const;
};

}  // namespace hurwitz
