#pragma once

#include <vector>

#include "hurwitz/partitions.hpp"

namespace hurwitz {

/// Cycle type of a permutation of n elements: parts sorted descending,
/// summing to n.
using CycleType = std::vector<int>;

/// Converts a reduced ramification profile to the cycle type of the
/// monodromy over that critical value: parts alpha_j + 1, padded with fixed
/// points to total n.  Throws TooLarge when the profile does not fit.
CycleType reduced_to_cycle_type(const ReducedPartition& alpha, int n);

/// One counting problem: ordered tuples of permutations of n elements with
/// the prescribed conjugacy classes, followed by `num_transpositions`
/// transpositions, multiplying to the identity.
struct FactorizationSpec {
  int n = 1;
  std::vector<CycleType> fixed_classes;
  int num_transpositions = 0;
  bool require_transitive = false;
};

/// Number of such tuples (transitivity NOT enforced), by convolution in the
/// class algebra.  Throws ResourceBound when n exceeds the limit (default 8)
/// unless `override_bound` is set.
Rational count_all(const FactorizationSpec& spec, bool override_bound = false);

/// Number of such tuples generating a transitive subgroup, by the
/// exponential-formula sieve over the orbit of the first sheet.
Rational count_connected(const FactorizationSpec& spec,
                         bool override_bound = false);

/// Slow independent implementations by direct tuple enumeration (n <= 5).
Rational count_all_naive(const FactorizationSpec& spec);
Rational count_connected_naive(const FactorizationSpec& spec);

/// Hurwitz number of connected degree-n genus-g covers with the prescribed
/// degenerate critical values and simple critical values elsewhere:
/// count_connected / n!.
Rational hurwitz_oracle(const MultiPartition& label, int n, int g,
                        bool override_bound = false);

}  // namespace hurwitz
