#include "summa/cesaro.hpp"

#include <algorithm>
#include <cmath>

#include "summa/compensated.hpp"
#include "summa/errors.hpp"

namespace summa {

std::vector<double> cesaro_kernel(double order, Index N) {
  if (N < 0) throw InvalidArgument("cesaro coefficients: N must be >= 0");
  std::vector<double> A(static_cast<std::size_t>(N) + 1);
  A[0] = 1.0;
  for (Index n = 1; n <= N; ++n) {
    const auto i = static_cast<std::size_t>(n);
    A[i] = A[i - 1] * ((static_cast<double>(n) + order) / static_cast<double>(n));
  }
  return A;
}

std::vector<double> cesaro_coefficients(double alpha, Index N) {
  if (!(alpha > -1.0)) throw InvalidArgument("cesaro coefficients: alpha must exceed -1");
  return cesaro_kernel(alpha, N);
}

namespace {

void require_order(double alpha, const char* what) {
  if (!(alpha > -1.0) || !std::isfinite(alpha)) {
    throw InvalidArgument(std::string(what) + ": alpha must be finite and exceed -1");
  }
}

}  // namespace

RealSequence cesaro_sigma(const RealSequence& a, double alpha) {
  require_order(alpha, "cesaro_sigma");
  if (a.start() != 0) throw InvalidArgument("cesaro_sigma: input must start at index 0");
  const Index N = a.last();

  std::vector<double> s(a.size());
  CompensatedSum running;
  for (Index v = 0; v <= N; ++v) {
    running += a[v];
    s[static_cast<std::size_t>(v)] = running.value();
  }

  std::vector<double> sigma(s.size());
  if (alpha == 1.0) {
    // Order-0 kernel is identically 1: sigma_n is the running mean of s.
    CompensatedSum acc;
    for (std::size_t n = 0; n < s.size(); ++n) {
      acc += s[n];
      sigma[n] = acc.value() / static_cast<double>(n + 1);
    }
    return RealSequence(0, std::move(sigma));
  }

  const auto A = cesaro_kernel(alpha, N);
  const auto K = cesaro_kernel(alpha - 1.0, N);
  for (std::size_t n = 0; n < s.size(); ++n) {
    CompensatedSum acc;
    for (std::size_t v = 0; v <= n; ++v) acc += K[n - v] * s[v];
    sigma[n] = acc.value() / A[n];
  }
  return RealSequence(0, std::move(sigma));
}

RealSequence cesaro_t(const RealSequence& a, double alpha) {
  require_order(alpha, "cesaro_t");
  if (a.start() > 1 || a.last() < 1) throw InvalidArgument("cesaro_t: input must cover index 1");
  const Index N = a.last();
  const auto count = static_cast<std::size_t>(N);

  std::vector<double> weighted(count);  // v a_v for v = 1..N
  for (Index v = 1; v <= N; ++v) weighted[static_cast<std::size_t>(v - 1)] = static_cast<double>(v) * a[v];

  std::vector<double> t(count);
  if (alpha == 1.0) {
    CompensatedSum acc;
    for (std::size_t i = 0; i < count; ++i) {
      acc += weighted[i];
      t[i] = acc.value() / static_cast<double>(i + 2);  // A_n^1 = n + 1
    }
    return RealSequence(1, std::move(t));
  }

  const auto A = cesaro_kernel(alpha, N);
  const auto K = cesaro_kernel(alpha - 1.0, N);
  for (std::size_t n = 1; n <= count; ++n) {
    CompensatedSum acc;
    for (std::size_t v = 1; v <= n; ++v) acc += K[n - v] * weighted[v - 1];
    t[n - 1] = acc.value() / A[n];
  }
  return RealSequence(1, std::move(t));
}

RealSequence w_sequence(const RealSequence& t, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw InvalidArgument("w_sequence: alpha must lie in (0, 1]");
  std::vector<double> w(t.values().begin(), t.values().end());
  double running = 0.0;
  for (auto& x : w) {
    x = std::abs(x);
    if (alpha < 1.0) {
      running = std::max(running, x);
      x = running;
    }
  }
  return RealSequence(t.start(), std::move(w));
}

CesaroTransforms cesaro_transforms(const RealSequence& a, double alpha) {
  if (a.start() != 0 || a.size() < 2) {
    throw InvalidArgument("cesaro_transforms: input must start at 0 and hold at least two terms");
  }
  auto sigma = cesaro_sigma(a, alpha);
  auto t = cesaro_t(a, alpha);
  std::optional<RealSequence> w;
  if (alpha > 0.0 && alpha <= 1.0) w = w_sequence(t, alpha);
  return CesaroTransforms{alpha, cesaro_coefficients(alpha, a.last()), std::move(sigma), std::move(t),
                          std::move(w)};
}

}  // namespace summa
