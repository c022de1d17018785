#include "summa/classes.hpp"

#include <algorithm>
#include <cmath>

#include "summa/compensated.hpp"
#include "summa/errors.hpp"

namespace summa {

namespace {

double mean_abs(std::span<const double> v) {
  CompensatedSum acc;
  for (double x : v) acc += std::abs(x);
  return acc.value() / static_cast<double>(v.size());
}

}  // namespace

QuasiMonotoneVerdict quasi_monotone_check(const RealSequence& b, const RealSequence& delta) {
  if (b.start() != delta.start() || b.size() != delta.size()) {
    throw InvalidArgument("quasi_monotone_check: b and delta must cover the same index range");
  }
  for (Index n = delta.start(); n <= delta.last(); ++n) {
    if (!(delta[n] > 0.0)) {
      throw InvalidArgument("quasi_monotone_check: delta must be positive (index " + std::to_string(n) + ")");
    }
  }

  QuasiMonotoneVerdict verdict;
  for (Index n = b.start(); n < b.last(); ++n) {
    if (b[n] - b[n + 1] < -delta[n]) {
      verdict.holds_on_range = false;
      verdict.first_violation = n;
      break;
    }
  }

  Index from = b.last() + 1;
  while (from > b.start() && b[from - 1] > 0.0) --from;
  if (from <= b.last()) verdict.positivity_from = from;

  const auto v = b.values();
  const std::size_t quarter = std::max<std::size_t>(1, v.size() / 4);
  const double head = mean_abs(v.first(quarter));
  const double tail = mean_abs(v.last(quarter));
  verdict.trend_ratio = head == 0.0 ? (tail == 0.0 ? 0.0 : INFINITY) : tail / head;
  verdict.decaying_at_scale = verdict.trend_ratio < 1.0;
  return verdict;
}

AlmostIncreasingWitness almost_increasing_diagnostic(const RealSequence& b, double floor) {
  std::vector<double> c(b.size());
  double running = 0.0;
  double inf_ratio = 1.0;
  for (Index n = b.start(); n <= b.last(); ++n) {
    const double x = b[n];
    if (!(x > 0.0)) {
      throw InvalidArgument("almost_increasing_diagnostic: entry at index " + std::to_string(n) +
                            " is not positive");
    }
    running = std::max(running, x);
    c[static_cast<std::size_t>(n - b.start())] = running;
    inf_ratio = std::min(inf_ratio, x / running);
  }
  return AlmostIncreasingWitness{RealSequence(b.start(), std::move(c)), inf_ratio, inf_ratio, 1.0, floor,
                                 inf_ratio > floor};
}

WeightMonotoneVerdict power_weight_monotonicity_check(const RealSequence& phi, double epsilon, double k,
                                                      double rel_tol) {
  if (phi.start() < 1) throw InvalidArgument("power_weight_monotonicity_check: phi must start at index >= 1");
  auto u = [&](Index n) {
    return std::pow(static_cast<double>(n), epsilon - k) * std::pow(std::abs(phi[n]), k);
  };
  WeightMonotoneVerdict verdict;
  double prev = u(phi.start());
  for (Index n = phi.start(); n < phi.last(); ++n) {
    const double next = u(n + 1);
    if (next > prev * (1.0 + rel_tol)) {
      verdict.holds = false;
      verdict.first_violation = n;
      break;
    }
    prev = next;
  }
  return verdict;
}

}  // namespace summa
