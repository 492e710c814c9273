#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

/// Base class for all errors raised by the library.
struct CalcError : std::runtime_error {
  explicit CalcError(const std::string& msg) : std::runtime_error(msg) {}
};

/// weighted_degree on a polynomial whose terms have mixed weights.
struct NotHomogeneous : CalcError {
  explicit NotHomogeneous(const std::string& msg) : CalcError(msg) {}
};

/// weighted_degree on the zero polynomial.
struct ZeroPolynomial : CalcError {
  explicit ZeroPolynomial(const std::string& msg) : CalcError(msg) {}
};

/// A reduced class contains N in a monomial without Δ.
struct MalformedClass : CalcError {
  explicit MalformedClass(const std::string& msg) : CalcError(msg) {}
};

/// A factor of a fiber-product pushforward does not annihilate Π.
struct PoleObstruction : CalcError {
  explicit PoleObstruction(const std::string& msg) : CalcError(msg) {}
};

/// The count of simple critical values would be negative.
struct NegativeSimplePoints : CalcError {
  explicit NegativeSimplePoints(const std::string& msg) : CalcError(msg) {}
};

/// An undetermined-coefficients system is not square.
struct SystemNotSquare : CalcError {
  explicit SystemNotSquare(const std::string& msg) : CalcError(msg) {}
};

/// An undetermined-coefficients system has no (unique) solution.
struct UnsolvableSystem : CalcError {
  explicit UnsolvableSystem(const std::string& msg) : CalcError(msg) {}
};

/// A table lookup was attempted for a label that has no stored entry.
struct UnknownLabel : CalcError {
  explicit UnknownLabel(const std::string& msg) : CalcError(msg) {}
};

/// The degree functional met a monomial with no known degree.
struct UnknownMonomialDegree : CalcError {
  explicit UnknownMonomialDegree(const std::string& msg) : CalcError(msg) {}
};

/// A psi-integral exponent vector has the wrong total degree.
struct DimensionMismatch : CalcError {
  explicit DimensionMismatch(const std::string& msg) : CalcError(msg) {}
};

/// The oracle was asked for a degree beyond its resource bound.
struct ResourceBound : CalcError {
  explicit ResourceBound(const std::string& msg) : CalcError(msg) {}
};

/// A cycle type does not fit inside the requested degree.
struct TooLarge : CalcError {
  explicit TooLarge(const std::string& msg) : CalcError(msg) {}
};

/// The assembled stratum class disagrees with the stored table.
struct ConventionMismatch : CalcError {
  explicit ConventionMismatch(const std::string& msg) : CalcError(msg) {}
};

/// Malformed textual input (labels, expressions).
struct ParseError : CalcError {
  explicit ParseError(const std::string& msg) : CalcError(msg) {}
};

}  // namespace hurwitz
