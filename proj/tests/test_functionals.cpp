#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <random>

#include "summa/cesaro.hpp"
#include "summa/errors.hpp"
#include "summa/format.hpp"
#include "summa/functionals.hpp"

using namespace summa;

TEST_CASE("dyadic checkpoints halve down from N") {
  CHECK(dyadic_checkpoints(10000) == std::vector<Index>{156, 312, 625, 1250, 2500, 5000, 10000});
  CHECK(dyadic_checkpoints(64) == std::vector<Index>{1, 2, 4, 8, 16, 32, 64});
  CHECK(dyadic_checkpoints(5) == std::vector<Index>{1, 2, 5});
}

TEST_CASE("functional of a zero series is zero") {
  const RealSequence zeros(0, std::vector<double>(33, 0.0));
  const auto trace = functional_partial_sums(zeros, {0.5, 2.0, 0.0, 1.0}, WeightSpec::classic(), {4, 8, 16, 32});
  for (double v : trace.partial_sums) CHECK(v == 0.0);
}

TEST_CASE("hand-evaluated alternating trace") {
  const auto a = materialize({"alternating_unit", {}, 3, 0});
  const auto trace = functional_partial_sums(a, {1.0, 2.0, 0.0, 1.0}, WeightSpec::classic(), {1, 2});
  // t_1 = -1/2, t_2 = 1/3; classic weight gives n^{-1} |t_n|^2.
  CHECK(trace.partial_sums[0] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(trace.partial_sums[1] == doctest::Approx(0.25 + 0.5 / 9.0).epsilon(1e-15));
}

TEST_CASE("classic weight equals the |C,alpha|_k form") {
  const auto a = materialize({"almost_inc_example", {}, 301, 0});
  const CesaroParams p{0.5, 1.7, 0.0, 1.0};
  const auto t = cesaro_t(a, p.alpha);
  std::vector<Index> cps{50, 100, 200, 300};
  const auto trace = functional_partial_sums(a, p, WeightSpec::classic(), cps);
  double direct = 0.0;
  std::size_t c = 0;
  for (Index n = 1; n <= 300; ++n) {
    direct += std::pow(std::abs(t[n]), p.k) / static_cast<double>(n);
    if (n == cps[c]) CHECK(trace.partial_sums[c++] == doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("reduction identities") {
  const auto alt = materialize({"alternating_unit", {}, 101, 0});
  const auto r = reduction_identity_check(alt, {1.0, 1.5, 0.2, 1.0}, 100);
  CHECK(r.max_classic_deviation <= 1e-12);
  CHECK(r.max_indexed_deviation <= 1e-12);
  CHECK(r.classic.checkpoints.back() == 100);

  const auto b0 = reduction_identity_check(alt, {0.5, 2.5, 0.0, 1.0}, 64);
  CHECK(b0.indexed == b0.classic);

  const auto zeros = reduction_identity_check(RealSequence(1, std::vector<double>(50, 0.0)), {1, 2, 0.3, 1}, 50);
  for (const auto* tr : {&zeros.classic, &zeros.plain, &zeros.indexed, &zeros.indexed_plain}) {
    for (double v : tr->partial_sums) CHECK(v == 0.0);
  }
  CHECK_THROWS_AS(reduction_identity_check(alt, {1, 2, 0, 1}, 0), InvalidArgument);
}

TEST_CASE("traces are monotone and scale with |c|^k") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<double> v(257);
    for (auto& x : v) x = static_cast<double>(static_cast<int>(rng() % 201) - 100) / 13.0;
    const RealSequence a(0, v);
    const double c = -3.25;
    for (auto& x : v) x *= c;
    const RealSequence ca(0, v);
    const CesaroParams p{trial % 2 ? 1.0 : 0.4, 1.0 + static_cast<double>(trial % 5) * 0.5, 0.3, 1.0};
    const auto cps = dyadic_checkpoints(256);
    for (const auto& w : {WeightSpec::classic(), WeightSpec::indexed(0.3)}) {
      const auto tr = functional_partial_sums(a, p, w, cps);
      const auto tc = functional_partial_sums(ca, p, w, cps);
      for (std::size_t i = 0; i < cps.size(); ++i) {
        CHECK(tr.partial_sums[i] >= 0.0);
        if (i > 0) CHECK(tr.partial_sums[i] >= tr.partial_sums[i - 1]);
        CHECK(tc.partial_sums[i] == doctest::Approx(std::pow(std::abs(c), p.k) * tr.partial_sums[i]).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("functional errors") {
  const auto a = materialize({"alternating_unit", {}, 17, 0});
  const CesaroParams p{1, 2, 0, 1};
  CHECK_THROWS_AS(functional_partial_sums(a, p, WeightSpec::classic(), {8, 32}), InvalidArgument);
  CHECK_THROWS_AS(functional_partial_sums(a, p, WeightSpec::classic(), {8, 4}), InvalidArgument);
  WeightSpec no_phi;
  no_phi.kind = WeightSpec::Kind::explicit_phi;
  CHECK_THROWS_AS(functional_partial_sums(a, p, no_phi, {4}), InvalidArgument);
  WeightSpec no_beta;
  no_beta.kind = WeightSpec::Kind::indexed;
  CHECK_THROWS_AS(functional_partial_sums(a, p, no_beta, {4}), InvalidArgument);
  CHECK_THROWS_AS(functional_partial_sums(a, p, WeightSpec::explicit_values(RealSequence(1, {1, 2})), {4}),
                  InvalidArgument);

  const auto phi = materialize({"power_weight", {{"q", 0.5}}, 16, 1});
  const auto explicit_trace = functional_partial_sums(a, p, WeightSpec::explicit_values(phi), {16});
  const auto classic_trace = functional_partial_sums(a, p, WeightSpec::classic(), {16});
  CHECK(explicit_trace.partial_sums[0] == doctest::Approx(classic_trace.partial_sums[0]).epsilon(1e-14));
}

TEST_CASE("number rendering") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(1e-5) == "1.0000000000000001e-05");
  CHECK(format_number(2e16) == "2.0000000000000000e+16");
  CHECK(format_number(123.0) == "123");
  std::mt19937_64 rng(1);
  for (int i = 0; i < 2000; ++i) {
    const double x = std::ldexp(static_cast<double>(rng() >> 11) * 0x1.0p-53, static_cast<int>(rng() % 160) - 80) *
                     (rng() % 2 ? 1.0 : -1.0);
    CHECK(std::strtod(format_number(x).c_str(), nullptr) == x);
  }
  const FunctionalTrace tr{{1, 2}, {0.25, 1.0 / 3.0}};
  CHECK(to_csv(tr) == "checkpoint,partial_sum\n1,0.25\n2,0.33333333333333331\n");
}
