#pragma once

#include <map>
#include <string>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// A reduced ramification profile: the multiset of preimage multiplicities
/// over one critical value, each decreased by one. Stored sorted descending.
class ReducedPartition {
 public:
  ReducedPartition() = default;
  explicit ReducedPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int weight() const;  // sum of parts

  bool operator==(const ReducedPartition& o) const {
    return parts_ == o.parts_;
  }
  bool operator<(const ReducedPartition& o) const;  // by descending parts

  /// "1^2 2^1"-style rendering with ascending part values, e.g. "1^2,2^1".
  std::string to_string() const;

 private:
  std::vector<int> parts_;  // sorted descending
};

/// The simple (nondegenerate) profile 1^1.
ReducedPartition simple_profile();

/// An unordered collection of reduced partitions, one per degenerate
/// critical value. Canonical form: partitions sorted (operator<).
class MultiPartition {
 public:
  MultiPartition() = default;
  explicit MultiPartition(std::vector<ReducedPartition> ps);

  const std::vector<ReducedPartition>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  size_t size() const { return entries_.size(); }

  int weight() const;  // total weight of all entries
  bool operator==(const MultiPartition& o) const {
    return entries_ == o.entries_;
  }
  bool operator<(const MultiPartition& o) const {
    return entries_ < o.entries_;
  }

  /// Canonical label, entries joined by ';', e.g. "2^1;1^2".
  std::string to_string() const;

 private:
  std::vector<ReducedPartition> entries_;  // sorted
};

/// Product of factorials of multiplicities of equal part values.
long aut_order(const ReducedPartition& a);

/// Product of factorials of multiplicities of equal partitions.
long aut_set_order(const MultiPartition& m);

/// Total weight (sum of all parts) of one partition.
int weight(const ReducedPartition& a);

/// Codimension of the corresponding stratum: sum over entries of
/// (weight(entry) - 1), i.e. total weight minus the number of entries.
int codim(const MultiPartition& m);

/// Number of residual simple critical values: 2n + 2g - 2 - total weight.
/// Throws NegativeSimplePoints when negative.
int m_count(const MultiPartition& m, int n, int g);

/// Formal linear combination of s-variables indexed by multipartitions.
struct SSum {
  std::map<MultiPartition, Rational> terms;

  void add(const MultiPartition& m, const Rational& c);
  bool operator==(const SSum& o) const { return terms == o.terms; }
};

/// The plain merge product: s_I * s_J sums over all ways of uniting
/// pairwise-distinct entries of I with pairwise-distinct entries of J
/// (each united pair becomes the multiset union of their parts).
SSum s_multiply(const SSum& a, const SSum& b);

/// Singleton s-variable helper.
SSum s_var(const MultiPartition& m);

/// Parses "1^2,2^1" (one partition; ',' or ' ' separate part groups) or
/// "2^1;1^2" (';' separates critical values). Plain integers such as "3"
/// denote a single part. Round-trips with MultiPartition::to_string().
MultiPartition parse_label(const std::string& text);

/// Parses a single reduced partition (no ';' allowed).
ReducedPartition parse_partition(const std::string& text);

}  // namespace hurwitz
