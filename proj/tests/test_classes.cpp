#include <doctest.h>

#include <cmath>
#include <random>

#include "summa/classes.hpp"
#include "summa/errors.hpp"

using namespace summa;

namespace {

RealSequence from(Index start, Index last, double (*f)(Index)) {
  std::vector<double> v;
  for (Index n = start; n <= last; ++n) v.push_back(f(n));
  return RealSequence(start, std::move(v));
}

}  // namespace

TEST_CASE("quasi_monotone_check fixtures") {
  const auto b = from(0, 200, [](Index n) { return 1.0 / static_cast<double>(n + 1); });
  const auto delta = from(0, 200, [](Index) { return 1e-9; });
  const auto v = quasi_monotone_check(b, delta);
  CHECK(v.holds_on_range);
  CHECK_FALSE(v.first_violation.has_value());
  CHECK(v.positivity_from == 0);
  CHECK(v.decaying_at_scale);

  const RealSequence bumpy(1, {1.0, 0.2, 0.5, 0.4});
  const RealSequence d01(1, {0.1, 0.1, 0.1, 0.1});
  const auto bad = quasi_monotone_check(bumpy, d01);
  CHECK_FALSE(bad.holds_on_range);
  CHECK(bad.first_violation == 2);

  const RealSequence late(1, {-1.0, 0.0, 2.0, 1.0});
  CHECK(quasi_monotone_check(late, d01).positivity_from == 3);
  CHECK_FALSE(quasi_monotone_check(RealSequence(1, {1.0, -1.0}), RealSequence(1, {5.0, 5.0})).positivity_from);
}

TEST_CASE("quasi_monotone_check agrees with a brute-force scan") {
  auto b = [](Index n) { return (1.0 + (n % 2 == 0 ? 0.5 : -0.5)) / static_cast<double>(n); };
  auto d = [](Index n) { return 2.0 / static_cast<double>(n); };
  const auto bs = from(1, 1000, +b);
  const auto ds = from(1, 1000, +d);
  bool brute = true;
  for (Index n = 1; n < 1000; ++n) brute = brute && (b(n) - b(n + 1) >= -d(n));
  CHECK(brute);
  CHECK(quasi_monotone_check(bs, ds).holds_on_range == brute);
}

TEST_CASE("quasi_monotone_check holds for every positive delta on decreasing null sequences") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> b(100), delta(100);
    double x = 1.0;
    for (std::size_t i = 0; i < 100; ++i) {
      x *= 0.5 + 0.5 * static_cast<double>(rng() % 1000) / 1000.0;
      b[i] = x;
      delta[i] = 1e-300 + static_cast<double>(rng() % 1000);
    }
    CHECK(quasi_monotone_check(RealSequence(1, b), RealSequence(1, delta)).holds_on_range);
  }
}

TEST_CASE("quasi_monotone_check errors") {
  CHECK_THROWS_AS(quasi_monotone_check(RealSequence(1, {1, 2}), RealSequence(0, {1, 1})), InvalidArgument);
  CHECK_THROWS_AS(quasi_monotone_check(RealSequence(1, {1, 2}), RealSequence(1, {1, 0})), InvalidArgument);
}

TEST_CASE("almost_increasing_diagnostic fixtures") {
  const auto inc = almost_increasing_diagnostic(RealSequence(1, {1, 1, 2, 3, 3, 7}));
  CHECK(inc.inf_ratio == 1.0);
  CHECK(inc.A == 1.0);
  CHECK(inc.B == 1.0);
  CHECK(inc.almost_increasing_at_scale);

  const auto b = from(1, 1000, [](Index n) { return static_cast<double>(n) * std::exp(n % 2 == 0 ? 1.0 : -1.0); });
  const auto w = almost_increasing_diagnostic(b);
  CHECK(std::abs(w.inf_ratio - std::exp(-2.0)) <= 1e-3);
  CHECK(w.almost_increasing_at_scale);

  const auto h = from(1, 1000, [](Index n) { return 1.0 / static_cast<double>(n); });
  const auto hw = almost_increasing_diagnostic(h);
  CHECK(hw.inf_ratio == doctest::Approx(1e-3).epsilon(1e-12));
  CHECK(hw.almost_increasing_at_scale);
  CHECK_FALSE(almost_increasing_diagnostic(h, 1e-2).almost_increasing_at_scale);

  CHECK_THROWS_AS(almost_increasing_diagnostic(RealSequence(1, {1.0, 0.0})), InvalidArgument);
}

TEST_CASE("almost-increasing witness brackets b and is scale invariant") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> v(1 + rng() % 200);
    for (auto& x : v) x = 0.01 + static_cast<double>(rng() % 10000) / 100.0;
    const RealSequence b(1, v);
    const auto w = almost_increasing_diagnostic(b);
    for (Index n = 1; n <= b.last(); ++n) {
      CHECK(b[n] <= w.c[n]);
      CHECK(w.inf_ratio * w.c[n] <= b[n] * (1.0 + 1e-15));
      if (n > 1) CHECK(w.c[n] >= w.c[n - 1]);
    }
    for (auto& x : v) x *= 8.0;  // exact scaling keeps the ratios bit-identical
    CHECK(almost_increasing_diagnostic(RealSequence(1, v)).inf_ratio == w.inf_ratio);
  }
}

TEST_CASE("power_weight_monotonicity_check") {
  for (double k : {1.0, 1.5, 2.0, 3.0}) {
    std::vector<double> v;
    for (Index n = 1; n <= 2000; ++n) v.push_back(std::pow(static_cast<double>(n), 1.0 - 1.0 / k));
    CHECK(power_weight_monotonicity_check(RealSequence(1, v), 1.0, k).holds);
  }

  const auto linear = from(1, 10, [](Index n) { return static_cast<double>(n); });
  const auto v = power_weight_monotonicity_check(linear, 1.0, 1.0);
  CHECK_FALSE(v.holds);
  CHECK(v.first_violation == 1);

  // phi_n = n^{beta+1-1/k} with k = 2, beta = 0.5 is n^1; the sequence is n.
  const auto v2 = power_weight_monotonicity_check(linear, 1.0, 2.0);
  CHECK_FALSE(v2.holds);
  CHECK(v2.first_violation == 1);

  CHECK_THROWS_AS(power_weight_monotonicity_check(RealSequence(0, {1, 1}), 1.0, 1.0), InvalidArgument);
}
