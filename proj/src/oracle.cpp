#include "summa/oracle.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "summa/cesaro.hpp"
#include "summa/errors.hpp"
#include "summa/functionals.hpp"

namespace summa {

RationalSequence::RationalSequence(Index start, std::vector<Rational> values)
    : start_(start), values_(std::move(values)) {
  if (values_.empty()) throw InvalidArgument("RationalSequence: empty sequence");
  for (auto& v : values_) {
    if (v.get_den() == 0) throw InvalidArgument("RationalSequence: zero denominator");
    v.canonicalize();
  }
}

RealSequence RationalSequence::to_real() const {
  std::vector<double> out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.push_back(v.get_d());
  return RealSequence(start_, std::move(out));
}

std::vector<Rational> rational_cesaro_coefficients(const Rational& order, Index N) {
  if (N < 0) throw InvalidArgument("rational_cesaro_coefficients: N must be >= 0");
  std::vector<Rational> A(static_cast<std::size_t>(N) + 1);
  A[0] = 1;
  for (Index n = 1; n <= N; ++n) {
    const auto i = static_cast<std::size_t>(n);
    A[i] = A[i - 1] * (Rational(n) + order) / Rational(n);
  }
  return A;
}

namespace {

Rational abs_q(const Rational& x) { return x < 0 ? Rational(-x) : x; }

Rational pow_q(const Rational& x, unsigned k) {
  Rational r = 1;
  for (unsigned i = 0; i < k; ++i) r *= x;
  return r;
}

void require_unit_interval(const Rational& alpha, const char* what) {
  if (!(alpha > 0 && alpha <= 1)) throw InvalidArgument(std::string(what) + ": alpha must lie in (0, 1]");
}

// t_1 .. t_n of (a) at order alpha, exact.
std::vector<Rational> rational_t(const RationalSequence& a, Index n,
                                 const std::vector<Rational>& A, const std::vector<Rational>& K) {
  std::vector<Rational> t(static_cast<std::size_t>(n) + 1);
  for (Index m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (Index v = 1; v <= m; ++v) acc += K[static_cast<std::size_t>(m - v)] * v * a[v];
    t[static_cast<std::size_t>(m)] = acc / A[static_cast<std::size_t>(m)];
  }
  return t;
}

}  // namespace

AbelResult abel_identity_check(const RationalSequence& a, const RationalSequence& lambda, const Rational& alpha,
                               Index n) {
  if (n < 1) throw InvalidArgument("abel_identity_check: n must be >= 1");
  if (!(alpha > -1)) throw InvalidArgument("abel_identity_check: alpha must exceed -1");
  if (!a.covers(1, n) || !lambda.covers(1, n)) {
    throw InvalidArgument("abel_identity_check: a and lambda must cover 1..n");
  }
  const auto K = rational_cesaro_coefficients(alpha - 1, n);
  auto u = [&](Index p) { return Rational(K[static_cast<std::size_t>(n - p)] * p * a[p]); };

  AbelResult r;
  for (Index v = 1; v <= n; ++v) r.lhs += u(v) * lambda[v];

  Rational total = 0;
  for (Index v = 1; v <= n; ++v) total += u(v);
  Rational partial = 0;
  for (Index v = 1; v <= n - 1; ++v) {
    partial += u(v);
    r.rhs += (lambda[v] - lambda[v + 1]) * partial;
  }
  r.rhs += lambda[n] * total;
  r.equal = r.lhs == r.rhs;
  return r;
}

LemmaResult lemma1_check(const RationalSequence& a, const Rational& alpha, Index n, Index v, LemmaRange range) {
  require_unit_interval(alpha, "lemma1_check");
  if (!(1 <= v && v <= n)) throw InvalidArgument("lemma1_check: requires 1 <= v <= n");
  if (!a.covers(0, v)) throw InvalidArgument("lemma1_check: a must cover 0..v");
  const auto K = rational_cesaro_coefficients(alpha - 1, n);

  LemmaResult r;
  Rational left = 0;
  for (Index p = 0; p <= v; ++p) left += K[static_cast<std::size_t>(n - p)] * a[p];
  r.lhs = abs_q(left);

  const Index m0 = range == LemmaRange::from_one ? 1 : 0;
  for (Index m = m0; m <= v; ++m) {
    Rational s = 0;
    for (Index p = 0; p <= m; ++p) s += K[static_cast<std::size_t>(m - p)] * a[p];
    s = abs_q(s);
    if (m == m0 || s > r.rhs) r.rhs = s;
  }
  r.holds = r.lhs <= r.rhs;
  return r;
}

DecompositionResult decomposition_bound_check(const RationalSequence& a, const RationalSequence& lambda,
                                              const Rational& alpha, Index n, unsigned holder_k) {
  require_unit_interval(alpha, "decomposition_bound_check");
  if (n < 1) throw InvalidArgument("decomposition_bound_check: n must be >= 1");
  if (holder_k < 1) throw InvalidArgument("decomposition_bound_check: holder_k must be >= 1");
  if (!a.covers(1, n) || !lambda.covers(1, n)) {
    throw InvalidArgument("decomposition_bound_check: a and lambda must cover 1..n");
  }
  const auto A = rational_cesaro_coefficients(alpha, n);
  const auto K = rational_cesaro_coefficients(alpha - 1, n);
  const auto t = rational_t(a, n, A, K);

  std::vector<Rational> w(t.size());
  Rational running = 0;
  for (Index m = 1; m <= n; ++m) {
    const auto i = static_cast<std::size_t>(m);
    const Rational mag = abs_q(t[i]);
    if (alpha == 1) {
      w[i] = mag;
    } else {
      if (mag > running) running = mag;
      w[i] = running;
    }
  }

  DecompositionResult r;
  r.holder_k = holder_k;
  const Rational& An = A[static_cast<std::size_t>(n)];
  for (Index v = 1; v <= n; ++v) r.T += K[static_cast<std::size_t>(n - v)] * v * a[v] * lambda[v];
  r.T /= An;

  Rational xy = 0, xky = 0, ysum = 0;
  for (Index v = 1; v <= n - 1; ++v) {
    const auto i = static_cast<std::size_t>(v);
    const Rational x = A[i] * w[i];
    const Rational y = abs_q(lambda[v] - lambda[v + 1]);
    xy += x * y;
    xky += pow_q(x, holder_k) * y;
    ysum += y;
  }
  r.T1 = xy / An;
  r.T2 = abs_q(lambda[n]) * w[static_cast<std::size_t>(n)];
  r.bound_holds = abs_q(r.T) <= r.T1 + r.T2;

  r.holder_lhs = pow_q(xy, holder_k);
  r.holder_rhs = xky * pow_q(ysum, holder_k - 1);
  r.holder_holds = r.holder_lhs <= r.holder_rhs;
  return r;
}

bool power_inequality_check(double x, double y, double k) {
  if (!(k >= 1.0)) throw InvalidArgument("power_inequality_check: k must be >= 1");
  const double lhs = std::pow(std::abs(x + y), k);
  const double rhs = std::pow(2.0, k) * (std::pow(std::abs(x), k) + std::pow(std::abs(y), k));
  return lhs <= rhs;
}

namespace {

// Portable draws on top of mt19937_64, whose output sequence is fixed by the
// standard (the std distributions are not).
class TrialRng {
 public:
  explicit TrialRng(std::uint64_t seed) : engine_(seed) {}

  Index integer(Index lo, Index hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<Index>(engine_() % span);
  }
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  Rational rational() { return Rational(integer(-20, 20), integer(1, 6)); }

  RationalSequence rational_sequence(Index start, Index last) {
    std::vector<Rational> v;
    for (Index i = start; i <= last; ++i) v.push_back(rational());
    return RationalSequence(start, std::move(v));
  }

 private:
  std::mt19937_64 engine_;
};

std::string describe(const RationalSequence& s) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s.values()[i].get_str();
  out << ']';
  return out.str();
}

void record_violation(OracleVerdict& verdict, const std::string& input) {
  if (verdict.violations++ == 0) verdict.first_violation_input = input;
}

}  // namespace

OracleVerdict abel_suite(std::uint64_t seed, std::uint64_t trials) {
  static const Rational alphas[] = {Rational(1, 2), Rational(1), Rational(1, 4)};
  TrialRng rng(seed);
  OracleVerdict verdict{"abel_identity", trials, 0, std::nullopt, seed};
  for (std::uint64_t i = 0; i < trials; ++i) {
    const Rational& alpha = alphas[rng.integer(0, 2)];
    const Index n = rng.integer(1, 20);
    const auto a = rng.rational_sequence(1, n);
    const auto lambda = rng.rational_sequence(1, n);
    if (!abel_identity_check(a, lambda, alpha, n).equal) {
      record_violation(verdict, "alpha=" + alpha.get_str() + " n=" + std::to_string(n) + " a=" + describe(a) +
                                    " lambda=" + describe(lambda));
    }
  }
  return verdict;
}

OracleVerdict lemma1_suite(std::uint64_t seed, std::uint64_t trials) {
  TrialRng rng(seed);
  OracleVerdict verdict{"lemma1", trials, 0, std::nullopt, seed};
  for (std::uint64_t i = 0; i < trials; ++i) {
    const Index q = rng.integer(1, 8);
    const Rational alpha(rng.integer(1, q), q);
    const Index n = rng.integer(1, 12);
    const Index v = rng.integer(1, n);
    // The lemma is applied to (p a_p), whose p = 0 term vanishes.
    std::vector<Rational> values{Rational(0)};
    for (Index p = 1; p <= v; ++p) values.push_back(rng.rational());
    const RationalSequence a(0, std::move(values));
    if (!lemma1_check(a, alpha, n, v).holds) {
      record_violation(verdict, "alpha=" + Rational(alpha).get_str() + " n=" + std::to_string(n) +
                                    " v=" + std::to_string(v) + " a=" + describe(a));
    }
  }
  return verdict;
}

namespace {

const Rational& decomposition_alpha(TrialRng& rng) {
  static const Rational alphas[] = {Rational(1, 3), Rational(1, 2), Rational(1)};
  return alphas[rng.integer(0, 2)];
}

}  // namespace

OracleVerdict decomposition_suite(std::uint64_t seed, std::uint64_t trials) {
  TrialRng rng(seed);
  OracleVerdict verdict{"decomposition_bound", trials, 0, std::nullopt, seed};
  for (std::uint64_t i = 0; i < trials; ++i) {
    const Rational& alpha = decomposition_alpha(rng);
    const Index n = rng.integer(1, 15);
    const auto a = rng.rational_sequence(1, n);
    const auto lambda = rng.rational_sequence(1, n);
    const auto r = decomposition_bound_check(a, lambda, alpha, n);
    if (!r.bound_holds || !r.holder_holds) {
      record_violation(verdict, "alpha=" + alpha.get_str() + " n=" + std::to_string(n) + " a=" + describe(a) +
                                    " lambda=" + describe(lambda) + (r.bound_holds ? " (holder)" : " (bound)"));
    }
  }
  return verdict;
}

OracleVerdict power_inequality_suite(std::uint64_t seed, std::uint64_t trials) {
  TrialRng rng(seed);
  OracleVerdict verdict{"power_inequality", trials, 0, std::nullopt, seed};
  for (std::uint64_t i = 0; i < trials; ++i) {
    const double x = rng.uniform(-10.0, 10.0);
    const double y = rng.uniform(-10.0, 10.0);
    const double k = rng.uniform(1.0, 4.0);
    if (!power_inequality_check(x, y, k)) {
      std::ostringstream input;
      input.precision(17);
      input << "x=" << x << " y=" << y << " k=" << k;
      record_violation(verdict, input.str());
    }
  }
  return verdict;
}

OracleVerdict cross_mode_suite(std::uint64_t seed, std::uint64_t trials, double tolerance) {
  TrialRng rng(seed);
  OracleVerdict verdict{"cross_mode", trials, 0, std::nullopt, seed};
  for (std::uint64_t i = 0; i < trials; ++i) {
    const Rational& alpha = decomposition_alpha(rng);
    const Index n = rng.integer(1, 15);
    const auto a = rng.rational_sequence(1, n);
    const auto lambda = rng.rational_sequence(1, n);
    const double exact = decomposition_bound_check(a, lambda, alpha, n).T.get_d();
    const auto floating = cesaro_t(pointwise_product(a.to_real(), lambda.to_real()), alpha.get_d());
    if (relative_deviation(exact, floating[n]) > tolerance) {
      record_violation(verdict, "alpha=" + alpha.get_str() + " n=" + std::to_string(n) + " a=" + describe(a) +
                                    " lambda=" + describe(lambda));
    }
  }
  return verdict;
}

std::vector<OracleVerdict> run_oracle_suites(const OracleSuiteConfig& config) {
  return {abel_suite(config.seed, config.abel_trials), lemma1_suite(config.seed, config.lemma_trials),
          decomposition_suite(config.seed, config.decomposition_trials),
          power_inequality_suite(config.seed, config.power_trials),
          cross_mode_suite(config.seed, config.decomposition_trials, config.cross_mode_tolerance)};
}

}  // namespace summa
