#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "summa/errors.hpp"
#include "summa/sequence.hpp"

using namespace summa;

namespace {

RealSequence random_sequence(std::mt19937_64& rng, Index start, std::size_t n) {
  std::vector<double> v(n);
  for (auto& x : v) x = static_cast<double>(static_cast<std::int64_t>(rng() % 2001) - 1000) / 97.0;
  return RealSequence(start, std::move(v));
}

}  // namespace

TEST_CASE("RealSequence rejects empty and non-finite input") {
  CHECK_THROWS_AS(RealSequence(0, {}), InvalidArgument);
  CHECK_THROWS_AS(RealSequence(0, {1.0, std::numeric_limits<double>::quiet_NaN()}), InvalidArgument);
  CHECK_THROWS_AS(RealSequence(0, {std::numeric_limits<double>::infinity()}), InvalidArgument);

  const RealSequence s(3, {1.0, 2.0, 4.0});
  CHECK(s.last() == 5);
  CHECK(s.at(4) == 2.0);
  CHECK_THROWS_AS(s.at(2), InvalidArgument);
  CHECK(s.slice(4, 5) == RealSequence(4, {2.0, 4.0}));
}

TEST_CASE("materialize closed-form families") {
  CHECK(materialize({"alternating_unit", {}, 4, 0}) == RealSequence(0, {1, -1, 1, -1}));

  const auto b = materialize({"almost_inc_example", {}, 3, 1});
  CHECK(b.start() == 1);
  CHECK(b[1] == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(b[2] == doctest::Approx(2.0 * std::exp(1.0)).epsilon(1e-15));
  CHECK(b[3] == doctest::Approx(3.0 * std::exp(-1.0)).epsilon(1e-15));

  const auto x = materialize({"log_shift", {}, 2, 1});
  CHECK(x[1] == std::log(3.0));
  CHECK(x[2] == std::log(4.0));

  CHECK(materialize({"unit_tail", {}, 3, 0}) == RealSequence(0, {0, 1, 1}));
  CHECK(materialize({"power_decay", {{"c", 2.0}, {"c0", 1.0}, {"p", 2.0}}, 2, 1}) == RealSequence(1, {0.5, 2.0 / 9.0}));
  CHECK(materialize({"reciprocal_log", {}, 1, 0})[0] == 1.0 / std::log(2.0));
  CHECK(materialize({"power_weight", {{"q", 0.5}}, 2, 4}) == RealSequence(4, {2.0, std::sqrt(5.0)}));
}

TEST_CASE("materialize errors") {
  CHECK_THROWS_AS(materialize({"no_such_family", {}, 3, 0}), InvalidArgument);
  CHECK_THROWS_AS(materialize({"power_decay", {{"bogus", 1.0}}, 3, 0}), InvalidArgument);
  CHECK_THROWS_AS(materialize({"power_decay", {{"c0", -1.0}}, 3, 0}), InvalidArgument);
  CHECK_THROWS_AS(materialize({"reciprocal_log", {{"shift", 1.0}}, 3, 0}), InvalidArgument);
  CHECK_THROWS_AS(materialize({"power_weight", {{"q", -1.0}}, 3, 0}), InvalidArgument);
  CHECK_THROWS_AS(materialize({"alternating_unit", {}, 0, 0}), InvalidArgument);
}

TEST_CASE("materialize is deterministic") {
  for (const auto& f : family_catalog()) {
    const SequenceSpec spec{std::string(f.name), {}, 257, 1};
    const auto x = materialize(spec);
    const auto y = materialize(spec);
    REQUIRE(x.size() == y.size());
    for (Index n = x.start(); n <= x.last(); ++n) {
      CHECK(std::bit_cast<std::uint64_t>(x[n]) == std::bit_cast<std::uint64_t>(y[n]));
    }
  }
}

TEST_CASE("forward_difference uses x_v - x_{v+1}") {
  const RealSequence h(1, {1.0, 0.5, 1.0 / 3.0});
  const auto d1 = forward_difference(h, 1);
  CHECK(d1.start() == 1);
  CHECK(d1.size() == 2);
  CHECK(d1[1] == doctest::Approx(0.5));
  CHECK(d1[2] == doctest::Approx(1.0 / 6.0));

  const auto d2 = forward_difference(h, 2);
  CHECK(d2.size() == 1);
  CHECK(d2[1] == doctest::Approx(1.0 / 3.0));

  const auto c = forward_difference(RealSequence(0, {7, 7, 7, 7}), 1);
  for (double v : c.values()) CHECK(v == 0.0);

  CHECK_THROWS_AS(forward_difference(RealSequence(0, {1.0}), 1), InvalidArgument);
  CHECK_THROWS_AS(forward_difference(RealSequence(0, {1.0, 2.0}), 2), InvalidArgument);
  CHECK_THROWS_AS(forward_difference(h, 3), InvalidArgument);
}

TEST_CASE("forward_difference is linear and non-negative on non-increasing input") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + rng() % 40;
    const auto x = random_sequence(rng, 1, n);
    const auto y = random_sequence(rng, 1, n);
    const double c = static_cast<double>(static_cast<int>(rng() % 21) - 10) / 4.0;
    std::vector<double> comb(n);
    for (std::size_t i = 0; i < n; ++i) comb[i] = x.values()[i] + c * y.values()[i];
    for (int order : {1, 2}) {
      const auto lhs = forward_difference(RealSequence(1, comb), order);
      const auto dx = forward_difference(x, order);
      const auto dy = forward_difference(y, order);
      for (Index v = lhs.start(); v <= lhs.last(); ++v) {
        CHECK(lhs[v] == doctest::Approx(dx[v] + c * dy[v]).epsilon(1e-12).scale(1.0));
      }
    }

    std::vector<double> sorted(x.values().begin(), x.values().end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    {
      const auto seq = forward_difference(RealSequence(1, sorted), 1);
      for (double d : seq.values()) CHECK(d >= 0.0);
    }
  }
}

TEST_CASE("CesaroParams ranges") {
  CHECK_NOTHROW(CesaroParams{1.0, 1.0, 0.0, 1.0}.validate());
  CHECK_THROWS_AS((CesaroParams{-1.0, 1.0, 0.0, 1.0}.validate()), InvalidArgument);
  CHECK_THROWS_AS((CesaroParams{0.5, 0.9, 0.0, 1.0}.validate()), InvalidArgument);
  CHECK_THROWS_AS((CesaroParams{0.5, 1.0, -0.1, 1.0}.validate()), InvalidArgument);
  CHECK_THROWS_AS((CesaroParams{0.5, 1.0, 0.0, 0.0}.validate()), InvalidArgument);
}
