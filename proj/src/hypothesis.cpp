#include "summa/hypothesis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "summa/cesaro.hpp"
#include "summa/classes.hpp"
#include "summa/errors.hpp"
#include "summa/format.hpp"

namespace summa {

const char* to_string(GrowthVerdict v) noexcept {
  switch (v) {
    case GrowthVerdict::bounded_consistent:
      return "bounded_consistent";
    case GrowthVerdict::growth_detected:
      return "growth_detected";
    case GrowthVerdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

const char* to_string(ConditionVerdict v) noexcept {
  switch (v) {
    case ConditionVerdict::pass:
      return "pass";
    case ConditionVerdict::fail:
      return "fail";
    case ConditionVerdict::bounded_consistent:
      return "bounded_consistent";
    case ConditionVerdict::growth_detected:
      return "growth_detected";
    case ConditionVerdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

GrowthDiagnostic growth_diagnostic(const std::vector<Index>& checkpoints, const std::vector<double>& values,
                                   const std::optional<RealSequence>& reference, const GrowthTolerances& tol) {
  if (checkpoints.size() < 4) throw InvalidArgument("growth_diagnostic: at least 4 checkpoints required");
  if (values.size() != checkpoints.size()) {
    throw InvalidArgument("growth_diagnostic: values and checkpoints differ in length");
  }
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < 1 || (i > 0 && checkpoints[i] <= checkpoints[i - 1])) {
      throw InvalidArgument("growth_diagnostic: checkpoints must be positive and strictly increasing");
    }
  }

  GrowthDiagnostic d;
  d.checkpoints = checkpoints;
  d.values.reserve(values.size());
  if (reference) {
    d.reference.emplace();
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double r = reference->at(checkpoints[i]);
      if (r == 0.0) {
        throw InvalidArgument("growth_diagnostic: zero reference entry at index " + std::to_string(checkpoints[i]));
      }
      d.reference->push_back(r);
      d.values.push_back(std::abs(values[i]) / std::abs(r));
    }
  } else {
    for (double v : values) d.values.push_back(std::abs(v));
  }

  const std::size_t count = d.values.size();
  const std::size_t lo = count / 2;
  const std::size_t mid = (count - 1) / 2;

  const bool all_zero = std::all_of(d.values.begin() + static_cast<std::ptrdiff_t>(std::min(lo, mid)),
                                    d.values.end(), [](double v) { return v == 0.0; });
  if (all_zero) {
    d.slope = 0.0;
    d.last_mid_ratio = 1.0;
    d.verdict = GrowthVerdict::bounded_consistent;
    return d;
  }
  const bool any_zero = std::any_of(d.values.begin() + static_cast<std::ptrdiff_t>(std::min(lo, mid)),
                                    d.values.end(), [](double v) { return v == 0.0; });
  if (any_zero) {
    d.verdict = GrowthVerdict::inconclusive;
    return d;
  }

  // Ordinary least squares of log(value) on log(checkpoint) over [lo, count).
  const auto n = static_cast<double>(count - lo);
  double mx = 0.0, my = 0.0;
  for (std::size_t i = lo; i < count; ++i) {
    mx += std::log(static_cast<double>(d.checkpoints[i]));
    my += std::log(d.values[i]);
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = lo; i < count; ++i) {
    const double dx = std::log(static_cast<double>(d.checkpoints[i])) - mx;
    sxy += dx * (std::log(d.values[i]) - my);
    sxx += dx * dx;
  }
  d.slope = sxy / sxx;
  d.last_mid_ratio = d.values.back() / d.values[mid];
  d.verdict = (d.slope < tol.slope && d.last_mid_ratio < tol.ratio) ? GrowthVerdict::bounded_consistent
                                                                    : GrowthVerdict::growth_detected;
  return d;
}

GrowthDiagnostic growth_diagnostic(const FunctionalTrace& trace, const std::optional<RealSequence>& reference,
                                   const GrowthTolerances& tol) {
  return growth_diagnostic(trace.checkpoints, trace.partial_sums, reference, tol);
}

void FamilyBundle::validate() const {
  if (N < 1) throw InvalidArgument("bundle: N must be >= 1");
  auto need = [&](const RealSequence& s, const char* name) {
    if (!s.covers(1, N)) {
      throw InvalidArgument(std::string("bundle: ") + name + " must cover indices 1.." + std::to_string(N));
    }
  };
  need(a, "a");
  need(lambda, "lambda");
  need(X, "X");
  if (Q) need(*Q, "Q");
  if (delta) need(*delta, "delta");
  weight.validate();
  if (weight.kind == WeightSpec::Kind::explicit_phi) need(*weight.phi, "phi");
  params.validate();
}

bool HypothesisReport::all_passed() const noexcept {
  return std::all_of(records.begin(), records.end(), [](const ConditionRecord& r) { return r.passed(); });
}

const ConditionRecord& HypothesisReport::record(const std::string& id) const {
  for (const auto& r : records) {
    if (r.id == id) return r;
  }
  throw InvalidArgument("no condition record '" + id + "'");
}

namespace {

std::vector<Index> checkpoints_up_to(Index limit, const HypothesisOptions& options) {
  if (!options.checkpoints) return dyadic_checkpoints(limit, options.growth.levels);
  std::vector<Index> out;
  for (Index m : *options.checkpoints) {
    if (m <= limit) out.push_back(m);
  }
  return out;
}

ConditionVerdict from_growth(GrowthVerdict v) {
  switch (v) {
    case GrowthVerdict::bounded_consistent:
      return ConditionVerdict::bounded_consistent;
    case GrowthVerdict::growth_detected:
      return ConditionVerdict::growth_detected;
    case GrowthVerdict::inconclusive:
      break;
  }
  return ConditionVerdict::inconclusive;
}

ConditionRecord growth_record(std::string id, const FunctionalTrace& trace,
                              const std::optional<RealSequence>& reference, const HypothesisOptions& options,
                              std::string notes) {
  ConditionRecord r;
  r.id = std::move(id);
  auto g = growth_diagnostic(trace, reference, options.growth);
  r.verdict = from_growth(g.verdict);
  r.slope = g.slope;
  r.notes = std::move(notes);
  r.growth = std::move(g);
  r.trace = trace;
  return r;
}

// |λ_m| X_m sampled at the checkpoints.
ConditionRecord cond7_record(const FamilyBundle& b, const std::vector<Index>& cps, const HypothesisOptions& o) {
  FunctionalTrace samples;
  samples.checkpoints = cps;
  for (Index m : cps) samples.partial_sums.push_back(std::abs(b.lambda[m]) * b.X[m]);
  return growth_record("cond7", samples, std::nullopt, o, "|lambda_m| X_m at checkpoints; bounded at this scale");
}

ConditionRecord weight_record(const FamilyBundle& b) {
  ConditionRecord r;
  r.id = "weight_monotone";
  const auto phi = b.weight.magnitudes(b.N, b.params.k);
  const auto v = power_weight_monotonicity_check(phi, b.params.epsilon, b.params.k);
  r.verdict = v.holds ? ConditionVerdict::pass : ConditionVerdict::fail;
  r.first_violation = v.first_violation;
  r.notes = std::string("n^(epsilon-k) |phi_n|^k non-increasing on 1..N, weight ") + to_string(b.weight.kind);
  return r;
}

RealSequence prefix(const RealSequence& s, Index N) { return s.slice(s.start(), N); }

}  // namespace

HypothesisReport check_main_theorem(const FamilyBundle& b, const HypothesisOptions& options) {
  b.validate();
  if (!b.Q || !b.delta) throw InvalidArgument("check_main_theorem: bundle requires Q and delta");
  const double alpha = b.params.alpha;
  if (!(alpha > 0.0 && alpha <= 1.0)) throw InvalidArgument("check_main_theorem: alpha must lie in (0, 1]");

  const Index N = b.N;
  const auto cps = checkpoints_up_to(N, options);
  HypothesisReport report{"main", {}, options};

  {
    ConditionRecord r;
    r.id = "X_class";
    const auto X = b.X.slice(1, N);
    Index nonpositive = 0;
    for (Index n = 1; n <= N && nonpositive == 0; ++n) {
      if (!(X[n] > 0.0)) nonpositive = n;
    }
    if (nonpositive != 0) {
      r.verdict = ConditionVerdict::fail;
      r.first_violation = nonpositive;
      r.notes = "X is not positive";
    } else {
      const auto w = almost_increasing_diagnostic(X, options.inf_ratio_floor);
      r.verdict = w.almost_increasing_at_scale ? ConditionVerdict::pass : ConditionVerdict::fail;
      r.notes = "almost increasing at this scale: inf_ratio=" + format_number(w.inf_ratio) +
                " floor=" + format_number(w.floor) + " A=" + format_number(w.A) + " B=" + format_number(w.B);
    }
    report.records.push_back(std::move(r));
  }

  report.records.push_back(cond7_record(b, cps, options));

  {
    ConditionRecord r;
    r.id = "majorant";
    const Index last = std::min(N, b.lambda.last() - 1);
    r.verdict = ConditionVerdict::pass;
    for (Index n = 1; n <= last; ++n) {
      if (std::abs(b.lambda[n] - b.lambda[n + 1]) > std::abs((*b.Q)[n])) {
        r.verdict = ConditionVerdict::fail;
        r.first_violation = n;
        break;
      }
    }
    r.notes = "|Delta lambda_n| <= |Q_n| for n = 1.." + std::to_string(last);
    report.records.push_back(std::move(r));
  }

  {
    ConditionRecord r;
    r.id = "quasi_monotone";
    const auto v = quasi_monotone_check(b.Q->slice(1, N), b.delta->slice(1, N));
    r.verdict = v.holds_on_range ? ConditionVerdict::pass : ConditionVerdict::fail;
    r.first_violation = v.first_violation;
    std::ostringstream notes;
    notes << "Delta Q_n >= -delta_n on 1.." << N - 1 << "; positive from index "
          << (v.positivity_from ? std::to_string(*v.positivity_from) : std::string("none"))
          << " at this scale; tail/head mean ratio " << format_number(v.trend_ratio)
          << (v.decaying_at_scale ? " (decaying at this scale)" : " (not decaying at this scale)");
    r.notes = notes.str();
    report.records.push_back(std::move(r));
  }

  {
    std::vector<double> signed_terms(static_cast<std::size_t>(N)), abs_terms(static_cast<std::size_t>(N));
    for (Index n = 1; n <= N; ++n) {
      const double term = static_cast<double>(n) * (*b.Q)[n] * b.X[n];
      signed_terms[static_cast<std::size_t>(n - 1)] = term;
      abs_terms[static_cast<std::size_t>(n - 1)] = std::abs(term);
    }
    const auto trace = partial_sum_trace(RealSequence(1, std::move(signed_terms)), cps);
    const auto abs_trace = partial_sum_trace(RealSequence(1, std::move(abs_terms)), cps);
    const auto abs_growth = growth_diagnostic(abs_trace, std::nullopt, options.growth);
    report.records.push_back(growth_record(
        "series_nQX", trace, std::nullopt, options,
        "partial sums of n Q_n X_n; bounded_consistent means convergent at this scale. absolute series: sum=" +
            format_number(abs_trace.partial_sums.back()) + " verdict=" + to_string(abs_growth.verdict)));
  }

  report.records.push_back(weight_record(b));

  {
    ConditionRecord r;
    r.id = "param_gate";
    const double gate = b.params.k * alpha + b.params.epsilon;
    r.verdict = gate > 1.0 ? ConditionVerdict::pass : ConditionVerdict::fail;
    r.notes = "k*alpha + epsilon = " + format_number(gate) + " (must exceed 1)";
    report.records.push_back(std::move(r));
  }

  {
    const auto t = cesaro_t(prefix(b.a, N), alpha);
    const auto w = w_sequence(t, alpha);
    const auto trace = functional_partial_sums_from(w, b.params.k, b.weight, cps);
    report.records.push_back(growth_record("cond11", trace, b.X, options,
                                           "sum n^-k (w_n |phi_n|)^k divided by X_m; O(X_m) at this scale"));
  }
  return report;
}

HypothesisReport check_theorem_a(const FamilyBundle& b, const HypothesisOptions& options) {
  b.validate();
  const Index N = b.N;
  const auto cps = checkpoints_up_to(N, options);
  HypothesisReport report{"theorem_a", {}, options};

  {
    ConditionRecord r;
    r.id = "X_class";
    r.verdict = ConditionVerdict::pass;
    for (Index n = 1; n <= N; ++n) {
      if (!(b.X[n] > 0.0) || (n < N && b.X[n + 1] < b.X[n])) {
        r.verdict = ConditionVerdict::fail;
        r.first_violation = n;
        break;
      }
    }
    r.notes = "X positive and non-decreasing on 1.." + std::to_string(N);
    report.records.push_back(std::move(r));
  }

  report.records.push_back(cond7_record(b, cps, options));

  {
    const Index available = std::min(N, b.lambda.last() - 2);
    if (available < 1) throw InvalidArgument("check_theorem_a: lambda too short for second differences");
    const auto d2 = forward_difference(b.lambda.slice(1, available + 2), 2);
    std::vector<double> terms(static_cast<std::size_t>(available));
    for (Index v = 1; v <= available; ++v) {
      terms[static_cast<std::size_t>(v - 1)] = static_cast<double>(v) * b.X[v] * std::abs(d2[v]);
    }
    const auto trace = partial_sum_trace(RealSequence(1, std::move(terms)), checkpoints_up_to(available, options));
    report.records.push_back(
        growth_record("cond8", trace, std::nullopt, options, "partial sums of v X_v |Delta^2 lambda_v|"));
  }

  report.records.push_back(weight_record(b));

  {
    const auto t = cesaro_t(prefix(b.a, N), 1.0);
    const auto trace = functional_partial_sums_from(t, b.params.k, b.weight, cps);
    report.records.push_back(
        growth_record("cond9", trace, b.X, options, "sum v^-k |phi_v t_v|^k (alpha = 1) divided by X_n"));
  }
  return report;
}

ConclusionDiagnostic conclusion_diagnostic(const FamilyBundle& b, const HypothesisOptions& options) {
  b.validate();
  const auto product = pointwise_product(prefix(b.a, b.N), b.lambda.slice(1, b.N));
  const auto T = cesaro_t(product, b.params.alpha);
  auto trace = functional_partial_sums_from(T, b.params.k, b.weight, checkpoints_up_to(b.N, options));
  auto growth = growth_diagnostic(trace, std::nullopt, options.growth);
  return {std::move(trace), std::move(growth)};
}

}  // namespace summa
