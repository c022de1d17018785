#pragma once

#include <optional>

#include "summa/sequence.hpp"

namespace summa {

/// Finite-scale verdict for delta-quasi-monotonicity.
struct QuasiMonotoneVerdict {
  bool holds_on_range = true;           // Δb_n >= -δ_n at every checked index
  std::optional<Index> first_violation;
  std::optional<Index> positivity_from;  // first index after which every b_n > 0
  // Trend-to-zero diagnostic: mean |b| over the final quarter divided by the
  // mean over the first quarter. Below 1 means decaying at this scale.
  double trend_ratio = 0.0;
  bool decaying_at_scale = false;
};

/// Checks Δb_n >= -δ_n for every n with b_{n+1} available. `b` and `delta`
/// must cover the same index range and delta must be strictly positive.
/// Limits (b_n -> 0, "ultimately positive") are reported as diagnostics only.
QuasiMonotoneVerdict quasi_monotone_check(const RealSequence& b, const RealSequence& delta);

struct AlmostIncreasingWitness {
  RealSequence c;  // running maximum of b
  double inf_ratio = 0.0;
  double A = 0.0;
  double B = 1.0;
  double floor = 1e-6;
  bool almost_increasing_at_scale = false;  // inf_ratio > floor
};

/// Running-maximum witness c_n = max_{j<=n} b_j with A = inf_n b_n/c_n and
/// B = 1. Requires every b_n > 0.
AlmostIncreasingWitness almost_increasing_diagnostic(const RealSequence& b, double floor = 1e-6);

struct WeightMonotoneVerdict {
  bool holds = true;
  std::optional<Index> first_violation;
};

/// Checks that n^{epsilon-k} |phi_n|^k is non-increasing, allowing a
/// relative slack of `rel_tol`. phi must start at index >= 1.
WeightMonotoneVerdict power_weight_monotonicity_check(const RealSequence& phi, double epsilon, double k,
                                                      double rel_tol = 1e-12);

}  // namespace summa
