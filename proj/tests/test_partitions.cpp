#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hurwitz/errors.hpp"
#include "hurwitz/partitions.hpp"

using namespace hurwitz;

TEST_CASE("parse and render round trips") {
  CHECK(parse_partition("1^2,2^1").to_string() == "1^2,2^1");
  CHECK(parse_partition("2^1,1^2").to_string() == "1^2,2^1");
  CHECK(parse_partition("3").to_string() == "3^1");
  CHECK(parse_partition("1 1 2").to_string() == "1^2,2^1");
  CHECK(parse_label("2^1;1^2").to_string() == "2^1;1^2");
  CHECK(parse_label("1^2;2^1").to_string() == "2^1;1^2");
  CHECK(parse_label("1^4").size() == 1);
  CHECK(parse_label("1^1;1^1;3^1").size() == 3);
  CHECK_THROWS_AS(parse_partition("1^0"), ParseError);
  CHECK_THROWS_AS(parse_partition("abc"), ParseError);
  CHECK(parse_label("").empty());
  CHECK_THROWS_AS(parse_label("1^2;;2^1"), ParseError);
}

TEST_CASE("automorphism orders") {
  CHECK(aut_order(parse_partition("1^2")) == 2);
  CHECK(aut_order(parse_partition("1^4")) == 24);
  CHECK(aut_order(parse_partition("1^2,2^1")) == 2);
  CHECK(aut_order(parse_partition("3^1")) == 1);
  CHECK(aut_set_order(parse_label("2^1;2^1")) == 2);
  CHECK(aut_set_order(parse_label("2^1;1^2")) == 1);
  CHECK(aut_set_order(parse_label("1^1;1^1;1^1")) == 6);
}

TEST_CASE("weight and codimension") {
  CHECK(weight(parse_partition("1^2,2^1")) == 4);
  CHECK(codim(parse_label("1^2")) == 1);
  CHECK(codim(parse_label("2^1;2^1")) == 2);
  CHECK(codim(parse_label("1^2,2^1")) == 3);
  CHECK(codim(MultiPartition{}) == 0);
}

TEST_CASE("residual simple critical values") {
  // Genus 0, degree n: 2n - 2 simple branch points in total.
  CHECK(m_count(parse_label("2^1"), 3, 0) == 2);
  CHECK(m_count(parse_label("1^2"), 4, 0) == 4);
  CHECK(m_count(MultiPartition{}, 2, 0) == 2);
  CHECK(m_count(parse_label("2^1"), 3, 1) == 4);
  CHECK_THROWS_AS(m_count(parse_label("1^2,2^1"), 2, 0),
                  NegativeSimplePoints);
}

TEST_CASE("merge product") {
  SSum a = s_var(parse_label("1^1"));
  SSum b = s_var(parse_label("2^1"));
  SSum ab = s_multiply(a, b);
  // Two placements: disjoint critical values, or merged into one partition.
  CHECK(ab.terms.size() == 2);
  CHECK(ab.terms.at(parse_label("1^1;2^1")) == Rational(1));
  CHECK(ab.terms.at(parse_label("1^1,2^1")) == Rational(1));
  CHECK(s_multiply(a, b) == s_multiply(b, a));

  // Associativity on a small example.
  SSum c = s_var(parse_label("1^2"));
  CHECK(s_multiply(s_multiply(a, b), c) == s_multiply(a, s_multiply(b, c)));

  // Multi-entry factor: every entry of the left factor stays distinct.
  SSum ab2 = s_multiply(s_var(parse_label("1^1;1^1")), b);
  CHECK(ab2.terms.at(parse_label("1^1;1^1;2^1")) == Rational(1));
  CHECK(ab2.terms.at(parse_label("1^1;1^1,2^1")) == Rational(2));
}
