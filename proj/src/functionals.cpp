#include "summa/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "summa/cesaro.hpp"
#include "summa/compensated.hpp"
#include "summa/errors.hpp"
#include "summa/format.hpp"

namespace summa {

void WeightSpec::validate() const {
  switch (kind) {
    case Kind::explicit_phi:
      if (!phi) throw InvalidArgument("weight: explicit_phi requires phi values");
      break;
    case Kind::indexed:
      if (!beta) throw InvalidArgument("weight: indexed requires beta");
      if (!(*beta >= 0.0) || !std::isfinite(*beta)) throw InvalidArgument("weight: beta must be finite and >= 0");
      break;
    case Kind::classic:
      break;
  }
}

double WeightSpec::magnitude_at(Index n, double k) const {
  const auto x = static_cast<double>(n);
  switch (kind) {
    case Kind::classic:
      return std::pow(x, 1.0 - 1.0 / k);
    case Kind::indexed:
      return std::pow(x, *beta + 1.0 - 1.0 / k);
    case Kind::explicit_phi:
      return std::abs(phi->at(n));
  }
  return 0.0;
}

RealSequence WeightSpec::magnitudes(Index N, double k) const {
  validate();
  if (N < 1) throw InvalidArgument("weight: N must be >= 1");
  if (kind == Kind::explicit_phi && !phi->covers(1, N)) {
    throw InvalidArgument("weight: phi must cover indices 1.." + std::to_string(N));
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(N));
  for (Index n = 1; n <= N; ++n) out.push_back(magnitude_at(n, k));
  return RealSequence(1, std::move(out));
}

const char* to_string(WeightSpec::Kind kind) noexcept {
  switch (kind) {
    case WeightSpec::Kind::explicit_phi:
      return "explicit_phi";
    case WeightSpec::Kind::classic:
      return "classic";
    case WeightSpec::Kind::indexed:
      return "indexed";
  }
  return "?";
}

WeightSpec::Kind weight_kind_from_string(const std::string& name) {
  if (name == "explicit_phi") return WeightSpec::Kind::explicit_phi;
  if (name == "classic") return WeightSpec::Kind::classic;
  if (name == "indexed") return WeightSpec::Kind::indexed;
  throw InvalidArgument("unknown weight kind '" + name + "'");
}

std::vector<Index> dyadic_checkpoints(Index N, int levels) {
  if (N < 1) throw InvalidArgument("dyadic_checkpoints: N must be >= 1");
  std::vector<Index> out;
  for (int j = levels; j >= 0; --j) {
    const Index m = N >> j;
    if (m >= 1 && (out.empty() || out.back() != m)) out.push_back(m);
  }
  return out;
}

namespace {

void check_checkpoints(const std::vector<Index>& checkpoints, const RealSequence& terms) {
  if (checkpoints.empty()) throw InvalidArgument("trace: no checkpoints");
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (i > 0 && checkpoints[i] <= checkpoints[i - 1]) {
      throw InvalidArgument("trace: checkpoints must be strictly increasing");
    }
  }
  if (checkpoints.front() < terms.start()) {
    throw InvalidArgument("trace: checkpoint " + std::to_string(checkpoints.front()) + " precedes the series start");
  }
  if (checkpoints.back() > terms.last()) {
    throw InvalidArgument("trace: checkpoint " + std::to_string(checkpoints.back()) +
                          " exceeds available prefix length " + std::to_string(terms.last()));
  }
}

}  // namespace

FunctionalTrace partial_sum_trace(const RealSequence& terms, const std::vector<Index>& checkpoints) {
  check_checkpoints(checkpoints, terms);
  FunctionalTrace trace;
  trace.checkpoints = checkpoints;
  trace.partial_sums.reserve(checkpoints.size());
  CompensatedSum acc;
  Index n = terms.start();
  for (const Index m : checkpoints) {
    for (; n <= m; ++n) acc += terms[n];
    trace.partial_sums.push_back(acc.value());
  }
  return trace;
}

RealSequence weighted_power_terms(const RealSequence& x, double k, const WeightSpec& weight) {
  if (!(k >= 1.0)) throw InvalidArgument("functional: k must be >= 1");
  if (x.start() != 1) throw InvalidArgument("functional: input must start at index 1");
  weight.validate();
  if (weight.kind == WeightSpec::Kind::explicit_phi && !weight.phi->covers(1, x.last())) {
    throw InvalidArgument("functional: phi must cover indices 1.." + std::to_string(x.last()));
  }
  std::vector<double> terms(x.size());
  for (Index n = 1; n <= x.last(); ++n) {
    const double scaled = weight.magnitude_at(n, k) * std::abs(x[n]) / static_cast<double>(n);
    terms[static_cast<std::size_t>(n - 1)] = std::pow(scaled, k);
  }
  return RealSequence(1, std::move(terms));
}

FunctionalTrace functional_partial_sums_from(const RealSequence& t, double k, const WeightSpec& weight,
                                             const std::vector<Index>& checkpoints) {
  return partial_sum_trace(weighted_power_terms(t, k, weight), checkpoints);
}

FunctionalTrace functional_partial_sums(const RealSequence& a, const CesaroParams& params,
                                        const WeightSpec& weight, const std::vector<Index>& checkpoints) {
  params.validate();
  return functional_partial_sums_from(cesaro_t(a, params.alpha), params.k, weight, checkpoints);
}

double relative_deviation(double x, double y) noexcept {
  const double scale = std::max(std::abs(x), std::abs(y));
  return scale == 0.0 ? 0.0 : std::abs(x - y) / scale;
}

ReductionReport reduction_identity_check(const RealSequence& a, const CesaroParams& params, Index m) {
  params.validate();
  if (m < 1) throw InvalidArgument("reduction_identity_check: m must be >= 1");
  if (!a.covers(1, m)) throw InvalidArgument("reduction_identity_check: a must cover indices 1..m");

  const RealSequence t = cesaro_t(a.slice(std::max<Index>(a.start(), 0), m), params.alpha);
  const double k = params.k;

  const auto classic = weighted_power_terms(t, k, WeightSpec::classic());
  const auto indexed = weighted_power_terms(t, k, WeightSpec::indexed(params.beta));
  std::vector<double> plain(t.size()), indexed_plain(t.size());
  for (Index n = 1; n <= m; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    const double tk = std::pow(std::abs(t[n]), k);
    plain[i] = tk / static_cast<double>(n);
    indexed_plain[i] = std::pow(static_cast<double>(n), params.beta * k - 1.0) * tk;
  }
  const RealSequence plain_seq(1, std::move(plain));
  const RealSequence indexed_plain_seq(1, std::move(indexed_plain));

  ReductionReport report;
  report.m = m;
  for (Index n = 1; n <= m; ++n) {
    report.max_classic_deviation =
        std::max(report.max_classic_deviation, relative_deviation(classic[n], plain_seq[n]));
    report.max_indexed_deviation =
        std::max(report.max_indexed_deviation, relative_deviation(indexed[n], indexed_plain_seq[n]));
  }
  const auto checkpoints = dyadic_checkpoints(m, 62);
  report.classic = partial_sum_trace(classic, checkpoints);
  report.plain = partial_sum_trace(plain_seq, checkpoints);
  report.indexed = partial_sum_trace(indexed, checkpoints);
  report.indexed_plain = partial_sum_trace(indexed_plain_seq, checkpoints);
  return report;
}

std::string to_csv(const FunctionalTrace& trace) {
  std::ostringstream out;
  out << "checkpoint,partial_sum\n";
  for (std::size_t i = 0; i < trace.checkpoints.size(); ++i) {
    out << trace.checkpoints[i] << ',' << format_number(trace.partial_sums[i]) << '\n';
  }
  return out.str();
}

}  // namespace summa
