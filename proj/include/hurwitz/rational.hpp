#pragma once

#include <gmpxx.h>

#include <string>

namespace hurwitz {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator (GMP maintains this invariant through canonicalization).
using Rational = mpq_class;

/// Renders a rational in the canonical "p/q" form ("p" when q = 1).
inline std::string rat_to_string(const Rational& r) { return r.get_str(); }

/// Parses "p/q" or "p"; the result is canonicalized.
inline Rational rat_from_string(const std::string& s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

/// n! as an exact integer-valued rational; requires n >= 0.
inline Rational factorial(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

/// Binomial coefficient C(n, k) for n, k >= 0 (0 when k > n).
inline Rational binomial(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Rational(b);
}

/// Falling factorial x(x-1)...(x-m+1) evaluated at an exact rational x.
inline Rational falling_factorial(const Rational& x, long m) {
  Rational acc(1);
  for (long i = 0; i < m; ++i) acc *= x - Rational(i);
  return acc;
}

/// base^e for integer e (negative allowed when base != 0).
inline Rational rat_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  Rational b = e > 0 ? base : Rational(1) / base;
  long k = e > 0 ? e : -e;
  Rational acc(1);
  for (long i = 0; i < k; ++i) acc *= b;
  return acc;
}

}  // namespace hurwitz
