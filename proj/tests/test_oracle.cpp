#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hurwitz/errors.hpp"
#include "hurwitz/oracle.hpp"

using namespace hurwitz;

TEST_CASE("cycle types from profiles") {
  CHECK(reduced_to_cycle_type(parse_partition("2^1"), 3) == CycleType{3});
  CHECK(reduced_to_cycle_type(parse_partition("1^2"), 4) == CycleType{2, 2});
  CHECK(reduced_to_cycle_type(parse_partition("1^1"), 5) ==
        CycleType{2, 1, 1, 1});
  CHECK(reduced_to_cycle_type(parse_partition("1^1,2^1"), 5) ==
        CycleType{3, 2});
  CHECK_THROWS_AS(reduced_to_cycle_type(parse_partition("3^1"), 3), TooLarge);
}

TEST_CASE("counting without transitivity") {
  // n = 2: the only nonzero products of transpositions fixing the identity
  // use an even count; with 2 transpositions there is exactly one tuple.
  CHECK(count_all({2, {}, 2}) == Rational(1));
  CHECK(count_all({2, {}, 3}) == Rational(0));  // parity obstruction
  // n = 3, two transpositions, no fixed classes: pairs (t, t^{-1}): 3,
  // plus pairs multiplying to a 3-cycle: none (those don't give id), so 3.
  CHECK(count_all({3, {}, 2}) == Rational(3));
  // n = 3, one 3-cycle class and two transpositions: each of the 2
  // three-cycles times each of the 3 transpositions determines the last
  // factor, and the product of a 3-cycle with a transposition is always a
  // transposition: 6 tuples.
  CHECK(count_all({3, {{3}}, 2}) == Rational(6));
  // Empty problem: the empty tuple multiplies to the identity.
  CHECK(count_all({4, {}, 0}) == Rational(1));
  // A single non-identity class can never multiply to the identity alone.
  CHECK(count_all({4, {{2, 1, 1}}, 0}) == Rational(0));
  // Parity invariant: odd total parity forces zero.
  CHECK(count_all({4, {{2, 1, 1}}, 2}) == Rational(0));
  CHECK(count_all({5, {{3, 1, 1}}, 3}) == Rational(0));
}

TEST_CASE("the class order inside the spec does not matter") {
  FactorizationSpec a{5, {{3, 1, 1}, {2, 2, 1}}, 2};
  FactorizationSpec b{5, {{2, 2, 1}, {3, 1, 1}}, 2};
  CHECK(count_all(a) == count_all(b));
  CHECK(count_connected(a) == count_connected(b));
}

TEST_CASE("transitive counting") {
  CHECK(count_connected({2, {}, 2}) == Rational(1));
  // n = 3, two transpositions only: equal pairs are never transitive.
  CHECK(count_connected({3, {}, 2}) == Rational(0));
  // n = 3, 3-cycle plus two transpositions: a 3-cycle already acts
  // transitively, so all 6 tuples count.
  CHECK(count_connected({3, {{3}}, 2}) == Rational(6));
  // An n-cycle forces transitivity: connected equals total.
  FactorizationSpec full{4, {{4}}, 3};
  CHECK(count_connected(full) == count_all(full));
  // Sieve never exceeds the raw count.
  FactorizationSpec s{5, {{2, 2, 1}}, 4};
  CHECK(count_connected(s) <= count_all(s));
}

TEST_CASE("naive enumeration agrees with the class algebra") {
  std::vector<FactorizationSpec> cases{
      {3, {}, 4},
      {4, {{2, 2}}, 2},
      {4, {{3, 1}, {2, 1, 1}}, 1},
      {5, {{2, 2, 1}}, 4},
      {5, {{5}, {2, 1, 1, 1}}, 3},
  };
  for (const FactorizationSpec& s : cases) {
    CHECK(count_all_naive(s) == count_all(s));
    CHECK(count_connected_naive(s) == count_connected(s));
  }
}

TEST_CASE("hurwitz numbers from the oracle") {
  CHECK(hurwitz_oracle(parse_label("2^1"), 3, 0) == Rational(1));
  CHECK(hurwitz_oracle(MultiPartition{}, 2, 0) == Rational(1, 2));
  CHECK(hurwitz_oracle(parse_label("1^2"), 4, 0) == Rational(12));
  CHECK(hurwitz_oracle(parse_label("2^1;2^1"), 4, 0) == Rational(6));
  // Genus 1 adds two simple critical values (m = 2n + 2g - 2 - weight);
  // cross-check against the independent naive enumeration.
  CHECK(hurwitz_oracle(parse_label("2^1"), 3, 1) ==
        count_connected_naive({3, {{3}}, 4}) / Rational(6));
}

TEST_CASE("resource bounds") {
  CHECK_THROWS_AS(count_all({9, {}, 2}), ResourceBound);
  CHECK_THROWS_AS(hurwitz_oracle(parse_label("2^1"), 9, 0), ResourceBound);
  CHECK_THROWS_AS(reduced_to_cycle_type(parse_partition("1^4"), 3), TooLarge);
}
