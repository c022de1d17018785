#pragma once

#include <optional>
#include <vector>

#include "summa/sequence.hpp"

namespace summa {

/// Cesàro coefficients A_0^alpha .. A_N^alpha from the recurrence
/// A_0 = 1, A_n = A_{n-1} (n + alpha) / n. Requires alpha > -1.
std::vector<double> cesaro_coefficients(double alpha, Index N);

/// Same recurrence without the alpha > -1 restriction. The kernels
/// A_{n-v}^{alpha-1} of the order-alpha means use order alpha - 1, which
/// drops below -1 for alpha <= 0.
std::vector<double> cesaro_kernel(double order, Index N);

/// Order-alpha means of the partial sums s_v = a_0 + ... + a_v:
///   sigma_n = (1/A_n^alpha) sum_{v=0..n} A_{n-v}^{alpha-1} s_v,  n = 0..N.
/// `a` must start at index 0.
RealSequence cesaro_sigma(const RealSequence& a, double alpha);

/// Order-alpha means of (n a_n):
///   t_n = (1/A_n^alpha) sum_{v=1..n} A_{n-v}^{alpha-1} v a_v,  n = 1..N.
/// a_0 is ignored when present; `a` must cover index 1.
RealSequence cesaro_t(const RealSequence& a, double alpha);

/// w_n = |t_n| for alpha = 1, max_{v<=n} |t_v| for 0 < alpha < 1.
RealSequence w_sequence(const RealSequence& t, double alpha);

struct CesaroTransforms {
  double alpha;
  std::vector<double> coefficients;  // A_0 .. A_N
  RealSequence sigma;                // indices 0..N
  RealSequence t;                    // indices 1..N
  std::optional<RealSequence> w;     // only for 0 < alpha <= 1
};

/// All transforms of one series. `a` must start at 0 and hold at least two terms.
CesaroTransforms cesaro_transforms(const RealSequence& a, double alpha);

}  // namespace summa
