#include <doctest.h>

#include "summa/errors.hpp"
#include "summa/oracle.hpp"

using namespace summa;

namespace {

RationalSequence seq(Index start, std::initializer_list<Rational> v) { return RationalSequence(start, v); }

}  // namespace

TEST_CASE("rational coefficients") {
  const auto A = rational_cesaro_coefficients(1, 50);
  for (Index n = 0; n <= 50; ++n) CHECK(A[n] == n + 1);
  const auto B = rational_cesaro_coefficients(Rational(-1, 2), 2);
  CHECK(B[1] == Rational(1, 2));
  CHECK(B[2] == Rational(3, 8));
}

TEST_CASE("Abel identity") {
  const auto a = seq(1, {3, Rational(-1, 2), 7, 2});
  const auto constant = seq(1, {5, 5, 5, 5});
  const auto r = abel_identity_check(a, constant, Rational(1, 2), 4);
  CHECK(r.equal);
  // Δλ = 0, so only the boundary term survives: λ times the left sum without λ.
  CHECK(r.lhs == 5 * abel_identity_check(a, seq(1, {1, 1, 1, 1}), Rational(1, 2), 4).lhs);

  const auto one = abel_identity_check(seq(1, {4}), seq(1, {Rational(2, 3)}), Rational(1, 4), 1);
  CHECK(one.equal);
  CHECK(one.lhs == Rational(8, 3));

  CHECK_THROWS_AS(abel_identity_check(a, constant, 1, 5), InvalidArgument);
  CHECK_THROWS_AS(abel_identity_check(a, constant, 1, 0), InvalidArgument);
}

TEST_CASE("Lemma 1 fixtures") {
  // alpha = 1: |s_v| against max_{m<=v} |s_m|.
  const auto a = seq(0, {0, 2, -5, 1});
  const auto r1 = lemma1_check(a, 1, 6, 3);
  CHECK(r1.holds);
  CHECK(r1.lhs == 2);
  CHECK(r1.rhs == 3);

  const auto r = lemma1_check(seq(0, {1, -1}), Rational(1, 2), 3, 1);
  CHECK(r.holds);
  CHECK(r.lhs == Rational(1, 16));
  CHECK(r.rhs == Rational(1, 2));
}

TEST_CASE("Lemma 1 needs m = 0 in the maximum when a_0 != 0") {
  const auto a = seq(0, {1, Rational(-1, 2)});
  const auto literal = lemma1_check(a, Rational(1, 2), 2, 1, LemmaRange::from_one);
  CHECK_FALSE(literal.holds);
  CHECK(literal.lhs == Rational(1, 8));
  CHECK(literal.rhs == 0);
  CHECK(lemma1_check(a, Rational(1, 2), 2, 1, LemmaRange::from_zero).holds);

  CHECK_THROWS_AS(lemma1_check(a, Rational(3, 2), 2, 1), InvalidArgument);
  CHECK_THROWS_AS(lemma1_check(a, Rational(1, 2), 2, 3), InvalidArgument);
  CHECK_THROWS_AS(lemma1_check(a, Rational(1, 2), 2, 0), InvalidArgument);
}

TEST_CASE("decomposition bound fixtures") {
  const auto a = seq(1, {2, -3, Rational(1, 2), 4, -1});
  const auto c = seq(1, {Rational(-3, 2), Rational(-3, 2), Rational(-3, 2), Rational(-3, 2), Rational(-3, 2)});
  for (const Rational alpha : {Rational(1, 3), Rational(1)}) {
    const auto r = decomposition_bound_check(a, c, alpha, 5);
    CHECK(r.T1 == 0);
    CHECK(r.bound_holds);
    CHECK(abs(r.T) <= r.T2);
    CHECK(r.holder_holds);
  }

  const auto zeros = seq(1, {0, 0, 0});
  const auto z = decomposition_bound_check(zeros, seq(1, {1, 2, 3}), Rational(1, 2), 3);
  CHECK(z.T == 0);
  CHECK(z.T1 == 0);
  CHECK(z.T2 == 0);

  CHECK_THROWS_AS(decomposition_bound_check(a, c, Rational(0), 5), InvalidArgument);
  CHECK_THROWS_AS(decomposition_bound_check(a, c, 1, 6), InvalidArgument);
}

TEST_CASE("power inequality") {
  CHECK(power_inequality_check(1, 1, 1));
  CHECK(power_inequality_check(1, -1, 2.5));
  CHECK(power_inequality_check(0, 0, 3));
  CHECK_THROWS_AS(power_inequality_check(1, 1, 0.5), InvalidArgument);
}

TEST_CASE("randomized suites are seeded and clean") {
  const OracleSuiteConfig small{99, 40, 400, 60, 400, 1e-10};
  const auto first = run_oracle_suites(small);
  const auto second = run_oracle_suites(small);
  CHECK(first == second);
  REQUIRE(first.size() == 5);
  for (const auto& v : first) {
    CAPTURE(v.check);
    CHECK(v.violations == 0);
    CHECK(v.seed == 99);
    CHECK_FALSE(v.first_violation_input.has_value());
  }
}
