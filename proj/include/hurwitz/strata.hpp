#pragma once

#include <string>
#include <vector>

#include "hurwitz/local_models.hpp"
#include "hurwitz/partitions.hpp"
#include "hurwitz/polynomial.hpp"

namespace hurwitz {

/// A multisingularity stratum class on the base, at general genus and at
/// genus zero.
struct StratumExpression {
  MultiPartition label;
  Polynomial general_g;  // in psi, xi_k, delta_{k,l} (xi_0 symbolic)
  Polynomial genus0;     // in psi, n, delta_{0,0}, xi_2, delta_{1,0}
};

/// Assembles the stratum class of a multisingularity label from the residual
/// polynomials.  For the eight tabulated labels the result is compared with
/// the stored golden table; ConventionMismatch is thrown on disagreement.
StratumExpression assemble(const MultiPartition& label, ResidualCalculus& rc);

/// The genus-zero stratum class (genus0_reduce of the assembled class).
Polynomial sigma_g0(const MultiPartition& label, ResidualCalculus& rc);

/// Stored tabulated stratum classes (label string -> class), general genus
/// and genus zero.  Used as ground truth for the assembly convention.
const std::vector<std::pair<std::string, Polynomial>>& golden_general_table();
const std::vector<std::pair<std::string, Polynomial>>& golden_g0_table();

/// Closed form pre(n) * n^(n + offset).
struct PowerForm {
  Polynomial pre;  // polynomial in n
  int offset = 0;
  Rational value(long n) const;
};

/// Degrees of the basic genus-zero monomials, keyed by their canonical text
/// rendering: "1", "δ_{0,0}", "δ_{0,0}^2", "ξ_2", "δ_{1,0}".
const std::vector<std::pair<std::string, PowerForm>>& basic_degree_forms();

/// Degree pairing of a genus-zero class: sum over terms of
/// coefficient(n) * deg(basic monomial); powers of psi are absorbed by the
/// pairing.  Throws UnknownMonomialDegree for monomials outside the table.
Rational degree(const Polynomial& b, long n);

/// Printed closed forms of deg(sigma) for the eight tabulated labels,
/// keyed by label string.
const std::vector<std::pair<std::string, PowerForm>>& deg_sigma_forms();

/// Genus-zero psi-intersection number on the moduli of rational curves with
/// a.size() marked points: (n-3)!/prod(a_i!); requires sum(a) = n-3.
Rational mzn_psi_integral(const std::vector<int>& a);

/// Hurwitz number from the degree pairing:
/// aut_set_order(label) * m! / n! * degree(sigma_g0(label), n).
Rational hurwitz_number(const MultiPartition& label, long n,
                        ResidualCalculus& rc);

/// Closed form pre(n) * (2n + fa)! / (n + fb)! * n^(n + off).
struct HurwitzForm {
  Polynomial pre;
  int fa = 0, fb = 0, off = 0;
  bool valid(long n) const { return 2 * n + fa >= 0 && n + fb >= 0; }
  Rational value(long n) const;
};

/// Printed closed forms of the Hurwitz numbers for the eight tabulated
/// labels, keyed by label string.  Throws UnknownLabel via h_closed_form.
const std::vector<std::pair<std::string, HurwitzForm>>& h_closed_forms();
const HurwitzForm& h_closed_form(const MultiPartition& label);

/// Degree of the locus of nonisolated singularities, as a closed form and
/// evaluated.
const PowerForm& i_infty_form();
Rational i_infty(long n);

/// Correction coefficient of the nonisolated locus for the five tabulated
/// weight-4 labels.  Throws UnknownLabel otherwise.
int correction(const MultiPartition& label);

/// Stored degree data for the five tabulated weight-4 strata: the stratum
/// degree (from the Hurwitz side), the expected degree of the naive class,
/// and the correction coefficient tying them to deg of the nonisolated
/// locus.
struct NonisolatedRecord {
  std::string label;
  long n = 0;       // smallest degree with a nonempty stratum
  long m = 0;       // number of simple critical values at that n
  Rational deg_sigma;
  Rational deg_sigma_exp;
  int corr = 0;
};
const std::vector<NonisolatedRecord>& nonisolated_data();

/// LaTeX rendering of a class on the base: coefficients factored over
/// integer roots in n, basic classes as \psi, \xi_k, \delta_{k,l}.
std::string latex_bclass(const Polynomial& p);

}  // namespace hurwitz
