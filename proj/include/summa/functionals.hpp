#pragma once

#include <optional>
#include <string>
#include <vector>

#include "summa/sequence.hpp"

namespace summa {

/// The weight (phi_n) of the phi-|C,alpha|_k functional.
struct WeightSpec {
  enum class Kind { explicit_phi, classic, indexed };

  Kind kind = Kind::classic;
  std::optional<RealSequence> phi;  // explicit_phi only
  std::optional<double> beta;       // indexed only

  static WeightSpec classic() { return {}; }
  static WeightSpec indexed(double beta) { return {Kind::indexed, std::nullopt, beta}; }
  static WeightSpec explicit_values(RealSequence phi) { return {Kind::explicit_phi, std::move(phi), std::nullopt}; }

  void validate() const;

  /// |phi_n| for order k: n^{1-1/k} (classic), n^{beta+1-1/k} (indexed),
  /// or the stored value.
  double magnitude_at(Index n, double k) const;

  /// phi_1 .. phi_N as a sequence (materializes the closed forms).
  RealSequence magnitudes(Index N, double k) const;

  bool operator==(const WeightSpec&) const = default;
};

const char* to_string(WeightSpec::Kind kind) noexcept;
WeightSpec::Kind weight_kind_from_string(const std::string& name);

/// Partial sums of a non-negative series sampled at increasing checkpoints.
struct FunctionalTrace {
  std::vector<Index> checkpoints;
  std::vector<double> partial_sums;

  bool operator==(const FunctionalTrace&) const = default;
};

/// Floor-halving chain N >> levels, ..., N >> 1, N (ascending, zeros dropped,
/// duplicates removed). levels = 6 gives the N/64 .. N default.
std::vector<Index> dyadic_checkpoints(Index N, int levels = 6);

/// Compensated partial sums F(m) = sum_{n=first..m} terms_n at each
/// checkpoint m. Checkpoints must be strictly increasing and covered.
FunctionalTrace partial_sum_trace(const RealSequence& terms, const std::vector<Index>& checkpoints);

/// Terms n^{-k} (|phi_n| |x_n|)^k for n over x's range (x must start at 1).
/// x is t^alpha for the summability functional and w^alpha for the
/// maximal-sequence condition.
RealSequence weighted_power_terms(const RealSequence& x, double k, const WeightSpec& weight);

/// F(m) = sum_{n=1..m} n^{-k} |phi_n t_n^alpha|^k at every checkpoint.
FunctionalTrace functional_partial_sums(const RealSequence& a, const CesaroParams& params,
                                        const WeightSpec& weight, const std::vector<Index>& checkpoints);

/// Same, from precomputed t (or w) values starting at index 1.
FunctionalTrace functional_partial_sums_from(const RealSequence& t, double k, const WeightSpec& weight,
                                             const std::vector<Index>& checkpoints);

struct ReductionReport {
  Index m = 0;
  FunctionalTrace classic;        // phi_n = n^{1-1/k}
  FunctionalTrace plain;          // n^{-1} |t_n|^k
  FunctionalTrace indexed;        // phi_n = n^{beta+1-1/k}
  FunctionalTrace indexed_plain;  // n^{beta k - 1} |t_n|^k
  double max_classic_deviation = 0.0;  // term-wise relative
  double max_indexed_deviation = 0.0;
};

/// Evaluates the classic and indexed weights against their direct
/// |C,alpha|_k and |C,alpha;beta|_k forms, term by term up to n = m.
ReductionReport reduction_identity_check(const RealSequence& a, const CesaroParams& params, Index m);

/// Relative deviation |x - y| / max(|x|, |y|), zero when both vanish.
double relative_deviation(double x, double y) noexcept;

/// CSV rows "checkpoint,partial_sum" with a header line.
std::string to_csv(const FunctionalTrace& trace);

}  // namespace summa
