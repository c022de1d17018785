#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "summa/sequence.hpp"

namespace summa {

using Rational = mpq_class;

/// Exact counterpart of RealSequence: canonical rationals with an explicit
/// start index.
class RationalSequence {
 public:
  RationalSequence(Index start, std::vector<Rational> values);

  Index start() const noexcept { return start_; }
  Index last() const noexcept { return start_ + static_cast<Index>(values_.size()) - 1; }
  std::size_t size() const noexcept { return values_.size(); }
  bool covers(Index first, Index last_index) const noexcept {
    return first >= start_ && last_index <= last() && first <= last_index;
  }
  const Rational& operator[](Index n) const noexcept { return values_[static_cast<std::size_t>(n - start_)]; }
  const std::vector<Rational>& values() const noexcept { return values_; }

  RealSequence to_real() const;

 private:
  Index start_;
  std::vector<Rational> values_;
};

/// A_0^order .. A_N^order in exact arithmetic.
std::vector<Rational> rational_cesaro_coefficients(const Rational& order, Index N);

struct AbelResult {
  bool equal = false;
  Rational lhs;  // sum_{v=1..n} A_{n-v}^{alpha-1} v a_v lambda_v
  Rational rhs;  // summation-by-parts form
};

/// Summation by parts of the numerator of T_n^alpha, checked exactly:
///   sum_{v=1..n} K_{n-v} v a_v λ_v
///     = sum_{v=1..n-1} Δλ_v sum_{p=1..v} K_{n-p} p a_p + λ_n sum_{v=1..n} K_{n-v} v a_v
/// with K = A^{alpha-1}. a and lambda must cover 1..n.
AbelResult abel_identity_check(const RationalSequence& a, const RationalSequence& lambda, const Rational& alpha,
                               Index n);

/// Which indices the right-hand maximum ranges over.
enum class LemmaRange { from_one, from_zero };

struct LemmaResult {
  bool holds = false;
  Rational lhs;  // |sum_{p=0..v} A_{n-p}^{alpha-1} a_p|
  Rational rhs;  // max_m |sum_{p=0..m} A_{m-p}^{alpha-1} a_p|
};

/// |sum_{p=0..v} A_{n-p}^{alpha-1} a_p| <= max_{1<=m<=v} |sum_{p=0..m} A_{m-p}^{alpha-1} a_p|
/// for 0 < alpha <= 1 and 1 <= v <= n. With LemmaRange::from_one and a_0 != 0
/// the inequality can fail (see tests); from_zero adds m = 0 to the maximum.
LemmaResult lemma1_check(const RationalSequence& a, const Rational& alpha, Index n, Index v,
                         LemmaRange range = LemmaRange::from_one);

struct DecompositionResult {
  Rational T;   // (1/A_n) sum_{v=1..n} A_{n-v}^{alpha-1} v a_v λ_v
  Rational T1;  // (1/A_n) sum_{v=1..n-1} A_v w_v |Δλ_v|
  Rational T2;  // |λ_n| w_n
  bool bound_holds = false;  // |T| <= T1 + T2

  // Finite Hölder step on the vectors of T1, x_v = A_v w_v and y_v = |Δλ_v|:
  // (sum x y)^k <= (sum x^k y)(sum y)^(k-1).
  unsigned holder_k = 2;
  Rational holder_lhs;
  Rational holder_rhs;
  bool holder_holds = false;
};

/// Decomposition |T_n| <= T_{n,1} + T_{n,2}, exact. Requires 0 < alpha <= 1,
/// a and lambda covering 1..n, holder_k >= 1.
DecompositionResult decomposition_bound_check(const RationalSequence& a, const RationalSequence& lambda,
                                              const Rational& alpha, Index n, unsigned holder_k = 2);

/// |x+y|^k <= 2^k (|x|^k + |y|^k). Throws InvalidArgument for k < 1.
bool power_inequality_check(double x, double y, double k);

/// Outcome of one randomized suite.
struct OracleVerdict {
  std::string check;
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  std::optional<std::string> first_violation_input;
  std::uint64_t seed = 0;

  bool operator==(const OracleVerdict&) const = default;
};

struct OracleSuiteConfig {
  std::uint64_t seed = 42;
  std::uint64_t abel_trials = 200;
  std::uint64_t lemma_trials = 10000;
  std::uint64_t decomposition_trials = 1000;
  std::uint64_t power_trials = 10000;
  double cross_mode_tolerance = 1e-10;

  bool operator==(const OracleSuiteConfig&) const = default;
};

OracleVerdict abel_suite(std::uint64_t seed, std::uint64_t trials);
OracleVerdict lemma1_suite(std::uint64_t seed, std::uint64_t trials);
OracleVerdict decomposition_suite(std::uint64_t seed, std::uint64_t trials);
OracleVerdict power_inequality_suite(std::uint64_t seed, std::uint64_t trials);
/// Exact T_n^alpha against the double-precision cesaro_t of (a_v λ_v).
OracleVerdict cross_mode_suite(std::uint64_t seed, std::uint64_t trials, double tolerance);

/// All suites in fixed order: abel, lemma1, decomposition, power_inequality,
/// cross_mode.
std::vector<OracleVerdict> run_oracle_suites(const OracleSuiteConfig& config);

}  // namespace summa
