#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "summa/hypothesis.hpp"
#include "summa/serialize.hpp"

namespace summa {

inline constexpr std::string_view kVersion = "0.1.0";

enum class Mode { check_main, check_theorem_a, oracle, transform_dump };

const char* to_string(Mode mode) noexcept;

struct OracleTrials {
  std::uint64_t abel = 200;
  std::uint64_t lemma = 10000;
  std::uint64_t decomposition = 1000;
  std::uint64_t power = 10000;

  bool operator==(const OracleTrials&) const = default;
};

struct ExperimentConfig {
  Mode mode = Mode::check_main;

  // Bundle: either a built-in family (family + n + overrides) or explicit
  // sequence specs per role ("a", "lambda", "X", "Q", "delta", "phi").
  std::optional<std::string> family;
  Index n = 0;
  std::map<std::string, double> overrides;
  std::map<std::string, SequenceSpec> sequences;
  std::optional<std::string> weight;  // classic | indexed | explicit_phi
  std::optional<CesaroParams> params;

  std::optional<std::vector<Index>> checkpoints;
  GrowthTolerances tolerances;
  double inf_ratio_floor = 1e-6;

  std::uint64_t seed = 42;
  OracleTrials trials;

  std::string out_dir = "out";
  std::string report_name = "report.json";

  bool operator==(const ExperimentConfig&) const = default;
};

/// Validates and parses a configuration; throws ConfigError naming the
/// offending field.
ExperimentConfig parse_config(const Json& j);
Json config_to_json(const ExperimentConfig& config, bool include_output = true);

ExperimentConfig load_config(const std::filesystem::path& path);

struct BuiltinFamilyInfo {
  std::string_view name;
  std::string_view description;
};

std::span<const BuiltinFamilyInfo> builtin_families() noexcept;

/// Fully populated bundle for a named family on 1..N. Overrides may set the
/// Cesàro parameters (alpha, k, beta, epsilon) and family-specific exponents.
FamilyBundle builtin_family(const std::string& name, Index N, const std::map<std::string, double>& overrides = {});

/// Q_n = |Δλ_n| + (n+1)^{-pad_power} for n = 1..N; needs λ on 1..N+1.
RealSequence padded_majorant(const RealSequence& lambda, Index N, double pad_power = 2.0);

struct RunReport {
  Json document;  // the report written to disk
  int exit_status = 0;
  std::string summary;  // human-readable lines for standard output
  std::map<std::string, std::string> files;  // file name -> content (CSV traces)
};

/// Executes the configured pipeline without touching the filesystem.
RunReport run(const ExperimentConfig& config);

/// Serialized report bytes (pretty JSON with a trailing newline).
std::string render_report(const RunReport& report);

/// Writes the report and any CSV files under config.out_dir.
void write_outputs(const ExperimentConfig& config, const RunReport& report);

/// CSV with header checkpoint,partial_sum,reference,ratio; the last two
/// columns are empty without a reference.
std::string trace_csv(const FunctionalTrace& trace, const std::optional<std::vector<double>>& reference);

}  // namespace summa
