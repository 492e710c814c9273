#pragma once

#include <functional>

#include "hurwitz/partitions.hpp"
#include "hurwitz/polynomial.hpp"

namespace hurwitz {

/// Extracts the coefficient of the target multisingularity variable in the
/// exponential of the pushed residual-class sum.
///
/// The expansion is a sum over multisets of "placed factors". A placed
/// factor assigns, to a nonempty subset of the target's critical values, one
/// nonempty sub-profile of each chosen value's partition; all contributions
/// placed at a given value must unite to that value's full partition. Each
/// placed factor carries
///     pushed_residual(its multipartition) / prod(aut_order of its entries),
/// a multiset with repeated placed factors divides by the factorial of each
/// repetition count; the whole multiset carries psi^(sum of spans over its
/// factors minus the number of critical values); and the final sum is
/// divided by aut_set_order(target).
///
/// The same convention drives both the stratum classes on the base (with the
/// Gysin pushforward and the symbolic psi) and the vanishing constraints on
/// the local models (with the model pushforward and the model's psi value).
Polynomial assemble_class(
    const MultiPartition& target,
    const std::function<Polynomial(const MultiPartition&)>& pushed_residual,
    const Polynomial& psi);

}  // namespace hurwitz
