#pragma once

#include <optional>
#include <string>
#include <vector>

#include "summa/functionals.hpp"
#include "summa/sequence.hpp"

namespace summa {

enum class GrowthVerdict { bounded_consistent, growth_detected, inconclusive };

const char* to_string(GrowthVerdict v) noexcept;

/// Thresholds of the finite-scale O(1) surrogate.
struct GrowthTolerances {
  double slope = 0.1;
  double ratio = 1.5;
  int levels = 6;  // default checkpoints N >> levels .. N

  bool operator==(const GrowthTolerances&) const = default;
};

/// Log-log growth fit of checkpointed values (optionally divided by a
/// reference sequence).
struct GrowthDiagnostic {
  std::vector<Index> checkpoints;
  std::vector<double> values;                   // diagnosed values, |v_m| or |v_m| / ref_m
  std::optional<std::vector<double>> reference;  // ref_m at each checkpoint
  double slope = 0.0;           // least squares on the upper half of checkpoints
  double last_mid_ratio = 1.0;  // value at the last checkpoint / value at the middle one
  GrowthVerdict verdict = GrowthVerdict::inconclusive;
};

/// bounded_consistent iff slope < tol.slope and last/mid < tol.ratio;
/// inconclusive when the fit window mixes zero and non-zero values.
/// Requires at least 4 strictly increasing positive checkpoints; a reference
/// must cover every checkpoint with non-zero entries.
GrowthDiagnostic growth_diagnostic(const std::vector<Index>& checkpoints, const std::vector<double>& values,
                                   const std::optional<RealSequence>& reference = std::nullopt,
                                   const GrowthTolerances& tol = {});

GrowthDiagnostic growth_diagnostic(const FunctionalTrace& trace,
                                   const std::optional<RealSequence>& reference = std::nullopt,
                                   const GrowthTolerances& tol = {});

/// The sequences a theorem quantifies over, on a common range 1..N.
/// Q is the majorant of |Δλ| and delta its quasi-monotonicity slack; both are
/// required by the main theorem only. lambda may extend past N, which lets
/// Δλ_N and Δ²λ_N be formed.
struct FamilyBundle {
  Index N = 0;
  RealSequence a;
  RealSequence lambda;
  RealSequence X;
  WeightSpec weight;
  std::optional<RealSequence> Q;
  std::optional<RealSequence> delta;
  CesaroParams params;

  /// Throws InvalidArgument when a sequence does not cover 1..N.
  void validate() const;
};

enum class ConditionVerdict { pass, fail, bounded_consistent, growth_detected, inconclusive };

const char* to_string(ConditionVerdict v) noexcept;

struct ConditionRecord {
  std::string id;
  ConditionVerdict verdict = ConditionVerdict::inconclusive;
  std::optional<Index> first_violation;
  std::optional<double> slope;
  std::string notes;
  std::optional<GrowthDiagnostic> growth;
  std::optional<FunctionalTrace> trace;

  bool passed() const noexcept {
    return verdict == ConditionVerdict::pass || verdict == ConditionVerdict::bounded_consistent;
  }
};

struct HypothesisOptions {
  GrowthTolerances growth;
  double inf_ratio_floor = 1e-6;
  std::optional<std::vector<Index>> checkpoints;  // default: dyadic over 1..N
};

struct HypothesisReport {
  std::string theorem;  // "main" or "theorem_a"
  std::vector<ConditionRecord> records;
  HypothesisOptions options;

  bool all_passed() const noexcept;
  /// Throws InvalidArgument for an unknown id.
  const ConditionRecord& record(const std::string& id) const;
};

/// Eight records in fixed order: X_class, cond7, majorant, quasi_monotone,
/// series_nQX, weight_monotone, param_gate, cond11. Requires Q and delta and
/// 0 < alpha <= 1.
HypothesisReport check_main_theorem(const FamilyBundle& bundle, const HypothesisOptions& options = {});

/// Five records in fixed order: X_class, cond7, cond8, weight_monotone,
/// cond9. Always evaluated at alpha = 1; Q and delta are ignored.
HypothesisReport check_theorem_a(const FamilyBundle& bundle, const HypothesisOptions& options = {});

struct ConclusionDiagnostic {
  FunctionalTrace trace;
  GrowthDiagnostic growth;
};

/// Partial sums of n^{-k} |phi_n T_n|^k with T the order-alpha mean of
/// (n a_n λ_n), diagnosed for boundedness.
ConclusionDiagnostic conclusion_diagnostic(const FamilyBundle& bundle, const HypothesisOptions& options = {});

}  // namespace summa
