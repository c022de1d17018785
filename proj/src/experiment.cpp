#include "summa/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "summa/cesaro.hpp"
#include "summa/errors.hpp"
#include "summa/format.hpp"

namespace summa {

const char* to_string(Mode mode) noexcept {
  switch (mode) {
    case Mode::check_main:
      return "check_main";
    case Mode::check_theorem_a:
      return "check_theorem_a";
    case Mode::oracle:
      return "oracle";
    case Mode::transform_dump:
      return "transform_dump";
  }
  return "?";
}

namespace {

Mode mode_from_string(const std::string& s, const std::string& pointer) {
  for (Mode m : {Mode::check_main, Mode::check_theorem_a, Mode::oracle, Mode::transform_dump}) {
    if (s == to_string(m)) return m;
  }
  throw ConfigError(pointer, "unknown mode '" + s + "'");
}

std::uint64_t unsigned_at(const Json& j, const std::string& pointer) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0)) {
    throw ConfigError(pointer, "expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

double number_at(const Json& j, const std::string& pointer) {
  if (!j.is_number()) throw ConfigError(pointer, "expected a number");
  return j.get<double>();
}

void reject_unknown(const Json& j, const std::string& pointer, std::initializer_list<std::string_view> known) {
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (auto k : known) ok = ok || key == k;
    if (!ok) throw ConfigError(pointer + "/" + key, "unknown field");
  }
}

bool is_dyadic_chain(const std::vector<Index>& c) {
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] != 2 * c[i - 1] && c[i] != 2 * c[i - 1] + 1) return false;
  }
  return true;
}

}  // namespace

ExperimentConfig parse_config(const Json& j) {
  if (!j.is_object()) throw ConfigError("", "configuration must be a JSON object");
  reject_unknown(j, "", {"mode", "family", "n", "overrides", "sequences", "weight", "params", "checkpoints",
                         "tolerances", "seed", "trials", "output"});
  ExperimentConfig c;
  if (!j.contains("mode") || !j["mode"].is_string()) throw ConfigError("/mode", "expected a string");
  c.mode = mode_from_string(j["mode"].get<std::string>(), "/mode");

  if (j.contains("family")) {
    if (!j["family"].is_string()) throw ConfigError("/family", "expected a string");
    c.family = j["family"].get<std::string>();
  }
  if (j.contains("n")) {
    if (!j["n"].is_number_integer()) throw ConfigError("/n", "expected an integer");
    c.n = j["n"].get<Index>();
    if (c.n < 1) throw ConfigError("/n", "must be >= 1");
  }
  if (j.contains("overrides")) {
    if (!j["overrides"].is_object()) throw ConfigError("/overrides", "expected an object");
    for (const auto& [name, value] : j["overrides"].items()) {
      c.overrides[name] = number_at(value, "/overrides/" + name);
    }
  }
  if (j.contains("sequences")) {
    if (!j["sequences"].is_object()) throw ConfigError("/sequences", "expected an object");
    reject_unknown(j["sequences"], "/sequences", {"a", "lambda", "X", "Q", "delta", "phi"});
    for (const auto& [role, spec] : j["sequences"].items()) {
      c.sequences[role] = parse_sequence_spec(spec, "/sequences/" + role);
    }
  }
  if (j.contains("weight")) {
    if (!j["weight"].is_string()) throw ConfigError("/weight", "expected a string");
    c.weight = j["weight"].get<std::string>();
    try {
      weight_kind_from_string(*c.weight);
    } catch (const InvalidArgument& e) {
      throw ConfigError("/weight", e.what());
    }
  }
  if (j.contains("params")) c.params = parse_params(j["params"], "/params");

  if (j.contains("checkpoints")) {
    const auto& cp = j["checkpoints"];
    if (!cp.is_array()) throw ConfigError("/checkpoints", "expected an array");
    std::vector<Index> list;
    for (std::size_t i = 0; i < cp.size(); ++i) {
      if (!cp[i].is_number_integer() || cp[i].get<Index>() < 1) {
        throw ConfigError("/checkpoints/" + std::to_string(i), "expected a positive integer");
      }
      list.push_back(cp[i].get<Index>());
    }
    if (list.size() < 4) throw ConfigError("/checkpoints", "at least 4 checkpoints required");
    if (!is_dyadic_chain(list)) throw ConfigError("/checkpoints", "checkpoints must form a dyadic chain");
    c.checkpoints = std::move(list);
  }

  if (j.contains("tolerances")) {
    const auto& t = j["tolerances"];
    if (!t.is_object()) throw ConfigError("/tolerances", "expected an object");
    reject_unknown(t, "/tolerances", {"slope", "ratio", "levels", "inf_ratio_floor"});
    if (t.contains("slope")) c.tolerances.slope = number_at(t["slope"], "/tolerances/slope");
    if (t.contains("ratio")) c.tolerances.ratio = number_at(t["ratio"], "/tolerances/ratio");
    if (t.contains("levels")) {
      const auto levels = unsigned_at(t["levels"], "/tolerances/levels");
      if (levels < 3 || levels > 40) throw ConfigError("/tolerances/levels", "must lie in [3, 40]");
      c.tolerances.levels = static_cast<int>(levels);
    }
    if (t.contains("inf_ratio_floor")) {
      c.inf_ratio_floor = number_at(t["inf_ratio_floor"], "/tolerances/inf_ratio_floor");
    }
  }

  if (j.contains("seed")) c.seed = unsigned_at(j["seed"], "/seed");
  if (j.contains("trials")) {
    const auto& t = j["trials"];
    if (!t.is_object()) throw ConfigError("/trials", "expected an object");
    reject_unknown(t, "/trials", {"abel", "lemma", "decomposition", "power"});
    if (t.contains("abel")) c.trials.abel = unsigned_at(t["abel"], "/trials/abel");
    if (t.contains("lemma")) c.trials.lemma = unsigned_at(t["lemma"], "/trials/lemma");
    if (t.contains("decomposition")) c.trials.decomposition = unsigned_at(t["decomposition"], "/trials/decomposition");
    if (t.contains("power")) c.trials.power = unsigned_at(t["power"], "/trials/power");
  }
  if (j.contains("output")) {
    const auto& o = j["output"];
    if (!o.is_object()) throw ConfigError("/output", "expected an object");
    reject_unknown(o, "/output", {"dir", "report"});
    if (o.contains("dir")) {
      if (!o["dir"].is_string()) throw ConfigError("/output/dir", "expected a string");
      c.out_dir = o["dir"].get<std::string>();
    }
    if (o.contains("report")) {
      if (!o["report"].is_string()) throw ConfigError("/output/report", "expected a string");
      c.report_name = o["report"].get<std::string>();
    }
  }

  // Mode-required fields.
  switch (c.mode) {
    case Mode::check_main:
    case Mode::check_theorem_a: {
      if (c.n < 1) throw ConfigError("/n", "required for hypothesis checks");
      if (!c.family) {
        for (const char* role : {"a", "lambda", "X"}) {
          if (!c.sequences.contains(role)) {
            throw ConfigError(std::string("/sequences/") + role, "required without a built-in family");
          }
        }
        if (c.mode == Mode::check_main && !c.sequences.contains("delta")) {
          throw ConfigError("/sequences/delta", "required for check_main without a built-in family");
        }
      }
      if (c.checkpoints && c.checkpoints->back() > c.n) throw ConfigError("/checkpoints", "checkpoint exceeds n");
      break;
    }
    case Mode::transform_dump:
      if (!c.sequences.contains("a")) throw ConfigError("/sequences/a", "required for transform_dump");
      if (c.sequences.at("a").start != 0) throw ConfigError("/sequences/a/start", "transform_dump input must start at 0");
      if (c.sequences.at("a").n < 2) throw ConfigError("/sequences/a/n", "transform_dump needs at least two terms");
      break;
    case Mode::oracle:
      break;
  }
  if (c.weight == "explicit_phi" && !c.sequences.contains("phi")) {
    throw ConfigError("/sequences/phi", "required for weight explicit_phi");
  }
  return c;
}

Json config_to_json(const ExperimentConfig& c, bool include_output) {
  Json j;
  j["mode"] = to_string(c.mode);
  if (c.family) j["family"] = *c.family;
  if (c.n > 0) j["n"] = c.n;
  if (!c.overrides.empty()) {
    j["overrides"] = Json::object();
    for (const auto& [k, v] : c.overrides) j["overrides"][k] = v;
  }
  if (!c.sequences.empty()) {
    j["sequences"] = Json::object();
    for (const auto& [role, spec] : c.sequences) j["sequences"][role] = spec;
  }
  if (c.weight) j["weight"] = *c.weight;
  if (c.params) j["params"] = *c.params;
  if (c.checkpoints) j["checkpoints"] = *c.checkpoints;
  j["tolerances"] = Json{{"slope", c.tolerances.slope},
                         {"ratio", c.tolerances.ratio},
                         {"levels", c.tolerances.levels},
                         {"inf_ratio_floor", c.inf_ratio_floor}};
  j["seed"] = c.seed;
  j["trials"] = Json{{"abel", c.trials.abel},
                     {"lemma", c.trials.lemma},
                     {"decomposition", c.trials.decomposition},
                     {"power", c.trials.power}};
  if (include_output) j["output"] = Json{{"dir", c.out_dir}, {"report", c.report_name}};
  return j;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("", std::string("malformed JSON: ") + e.what());
  }
  return parse_config(j);
}

namespace {

constexpr BuiltinFamilyInfo kBuiltins[] = {
    {"F1",
     "main theorem instance: a=(-1)^n, lambda=(n+2)^-2, X=log(n+2), Q=|Delta lambda|+(n+1)^-3, "
     "delta=(n+1)^-1.5, classic weight, alpha=1, k=1.5, epsilon=1"},
    {"F2", "Theorem A instance: a=(-1)^n, lambda=1/(n+2), X=log(n+2), classic weight, alpha=1, k=1.5, epsilon=1"},
    {"F3", "negative control: lambda=1 with X=log(n+2) violates |lambda_n| X_n = O(1)"},
};

double take(std::map<std::string, double>& m, const std::string& key, double fallback) {
  const auto it = m.find(key);
  if (it == m.end()) return fallback;
  const double v = it->second;
  m.erase(it);
  return v;
}

SequenceSpec spec(std::string family, Index n, std::map<std::string, double> params = {}) {
  return SequenceSpec{std::move(family), std::move(params), n, 1};
}

}  // namespace

std::span<const BuiltinFamilyInfo> builtin_families() noexcept { return kBuiltins; }

RealSequence padded_majorant(const RealSequence& lambda, Index N, double pad_power) {
  if (!lambda.covers(1, N + 1)) throw InvalidArgument("padded_majorant: lambda must cover 1..N+1");
  std::vector<double> q(static_cast<std::size_t>(N));
  for (Index n = 1; n <= N; ++n) {
    q[static_cast<std::size_t>(n - 1)] =
        std::abs(lambda[n] - lambda[n + 1]) + std::pow(static_cast<double>(n + 1), -pad_power);
  }
  return RealSequence(1, std::move(q));
}

FamilyBundle builtin_family(const std::string& name, Index N, const std::map<std::string, double>& overrides) {
  if (N < 1) throw InvalidArgument("builtin_family: N must be >= 1");
  auto o = overrides;
  CesaroParams params{take(o, "alpha", 1.0), take(o, "k", 1.5), take(o, "beta", 0.0), take(o, "epsilon", 1.0)};
  params.validate();

  const auto a = materialize(spec("alternating_unit", N));
  const auto X = materialize(spec("log_shift", N, {{"shift", 2.0}}));
  std::optional<FamilyBundle> bundle;

  if (name == "F1") {
    const double lambda_p = take(o, "lambda_p", 2.0);
    const double pad = take(o, "q_pad_p", 3.0);
    const double delta_p = take(o, "delta_p", 1.5);
    auto lambda = materialize(spec("power_decay", N + 2, {{"c", 1.0}, {"c0", 2.0}, {"p", lambda_p}}));
    auto Q = padded_majorant(lambda, N, pad);
    auto delta = materialize(spec("power_decay", N, {{"c", 1.0}, {"c0", 1.0}, {"p", delta_p}}));
    bundle = FamilyBundle{N, a, std::move(lambda), X, WeightSpec::classic(), std::move(Q), std::move(delta), params};
  } else if (name == "F2") {
    const double lambda_p = take(o, "lambda_p", 1.0);
    auto lambda = materialize(spec("power_decay", N + 2, {{"c", 1.0}, {"c0", 2.0}, {"p", lambda_p}}));
    bundle = FamilyBundle{N, a, std::move(lambda), X, WeightSpec::classic(), std::nullopt, std::nullopt, params};
  } else if (name == "F3") {
    const double pad = take(o, "q_pad_p", 2.0);
    const double delta_p = take(o, "delta_p", 1.5);
    auto lambda = materialize(spec("power_decay", N + 2, {{"c", 1.0}, {"c0", 1.0}, {"p", 0.0}}));
    auto Q = padded_majorant(lambda, N, pad);
    auto delta = materialize(spec("power_decay", N, {{"c", 1.0}, {"c0", 1.0}, {"p", delta_p}}));
    bundle = FamilyBundle{N, a, std::move(lambda), X, WeightSpec::classic(), std::move(Q), std::move(delta), params};
  } else {
    throw InvalidArgument("unknown built-in family '" + name + "'");
  }
  if (!o.empty()) {
    throw InvalidArgument("built-in family '" + name + "': unknown override '" + o.begin()->first + "'");
  }
  return *bundle;
}

std::string trace_csv(const FunctionalTrace& trace, const std::optional<std::vector<double>>& reference) {
  std::ostringstream out;
  out << "checkpoint,partial_sum,reference,ratio\n";
  for (std::size_t i = 0; i < trace.checkpoints.size(); ++i) {
    out << trace.checkpoints[i] << ',' << format_number(trace.partial_sums[i]) << ',';
    if (reference) {
      const double r = (*reference)[i];
      out << format_number(r) << ',' << format_number(std::abs(trace.partial_sums[i]) / std::abs(r));
    } else {
      out << ',';
    }
    out << '\n';
  }
  return out.str();
}

namespace {

FamilyBundle assemble_bundle(const ExperimentConfig& c) {
  FamilyBundle bundle = [&] {
    if (c.family) return builtin_family(*c.family, c.n, c.overrides);
    const auto& seq = c.sequences;
    auto lambda = materialize(seq.at("lambda"));
    std::optional<RealSequence> Q;
    if (seq.contains("Q")) {
      Q = materialize(seq.at("Q"));
    } else if (c.mode == Mode::check_main) {
      const auto it = c.overrides.find("q_pad_p");
      Q = padded_majorant(lambda, c.n, it == c.overrides.end() ? 2.0 : it->second);
    }
    std::optional<RealSequence> delta;
    if (seq.contains("delta")) delta = materialize(seq.at("delta"));
    return FamilyBundle{c.n,
                        materialize(seq.at("a")),
                        std::move(lambda),
                        materialize(seq.at("X")),
                        WeightSpec::classic(),
                        std::move(Q),
                        std::move(delta),
                        CesaroParams{}};
  }();
  if (c.params) bundle.params = *c.params;
  if (c.weight) {
    switch (weight_kind_from_string(*c.weight)) {
      case WeightSpec::Kind::classic:
        bundle.weight = WeightSpec::classic();
        break;
      case WeightSpec::Kind::indexed:
        bundle.weight = WeightSpec::indexed(bundle.params.beta);
        break;
      case WeightSpec::Kind::explicit_phi:
        bundle.weight = WeightSpec::explicit_values(materialize(c.sequences.at("phi")));
        break;
    }
  }
  bundle.validate();
  return bundle;
}

std::string pad_right(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

void run_hypotheses(const ExperimentConfig& c, RunReport& out, Json& results) {
  FamilyBundle bundle = assemble_bundle(c);
  HypothesisOptions options{c.tolerances, c.inf_ratio_floor, c.checkpoints};
  const bool main = c.mode == Mode::check_main;
  if (!main) bundle.params.alpha = 1.0;
  const HypothesisReport report = main ? check_main_theorem(bundle, options) : check_theorem_a(bundle, options);
  const ConclusionDiagnostic conclusion = conclusion_diagnostic(bundle, options);

  Json hyp = report;
  std::ostringstream summary;
  summary << "theorem " << report.theorem << " (N=" << bundle.N << ")\n";
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const auto& r = report.records[i];
    summary << "  " << pad_right(r.id, 16) << pad_right(to_string(r.verdict), 20);
    if (r.first_violation) summary << "first_violation=" << *r.first_violation;
    if (r.slope) summary << "slope=" << format_number(*r.slope);
    summary << '\n';
    if (r.trace) {
      const std::string file = report.theorem + "_" + r.id + ".csv";
      out.files[file] = trace_csv(*r.trace, r.growth ? r.growth->reference : std::nullopt);
      hyp["records"][i]["trace_file"] = file;
    }
  }
  out.files["conclusion.csv"] = trace_csv(conclusion.trace, std::nullopt);
  summary << "  " << pad_right("conclusion", 16) << pad_right(to_string(conclusion.growth.verdict), 20)
          << "slope=" << format_number(conclusion.growth.slope) << '\n';

  results["hypotheses"] = std::move(hyp);
  results["conclusion"] = Json{{"growth", conclusion.growth}, {"trace_file", "conclusion.csv"}};
  const bool ok = report.all_passed() && conclusion.growth.verdict == GrowthVerdict::bounded_consistent;
  out.exit_status = ok ? 0 : 1;
  out.summary = summary.str();
}

void run_oracle(const ExperimentConfig& c, RunReport& out, Json& results) {
  OracleSuiteConfig suite{c.seed, c.trials.abel, c.trials.lemma, c.trials.decomposition, c.trials.power};
  const auto verdicts = run_oracle_suites(suite);
  std::ostringstream summary;
  summary << "oracle suites (seed " << c.seed << ")\n";
  bool ok = true;
  for (const auto& v : verdicts) {
    summary << "  " << pad_right(v.check, 22) << v.violations << " violations / " << v.trials << " trials\n";
    ok = ok && v.violations == 0;
  }
  results["suites"] = verdicts;
  out.exit_status = ok ? 0 : 1;
  out.summary = summary.str();
}

void run_transform_dump(const ExperimentConfig& c, RunReport& out, Json& results) {
  const auto a = materialize(c.sequences.at("a"));
  const double alpha = c.params ? c.params->alpha : 1.0;
  const auto tr = cesaro_transforms(a, alpha);
  std::ostringstream csv;
  csv << "n,A,sigma,t,w\n";
  for (Index n = 0; n <= a.last(); ++n) {
    csv << n << ',' << format_number(tr.coefficients[static_cast<std::size_t>(n)]) << ','
        << format_number(tr.sigma[n]) << ',';
    if (n >= 1) csv << format_number(tr.t[n]);
    csv << ',';
    if (n >= 1 && tr.w) csv << format_number((*tr.w)[n]);
    csv << '\n';
  }
  out.files["transforms.csv"] = csv.str();
  results["transforms_file"] = "transforms.csv";
  results["n"] = a.last();
  results["alpha"] = alpha;
  out.exit_status = 0;
  out.summary = "transform_dump: wrote transforms.csv (" + std::to_string(a.size()) + " rows)\n";
}

}  // namespace

RunReport run(const ExperimentConfig& config) {
  RunReport out;
  Json results = Json::object();
  switch (config.mode) {
    case Mode::check_main:
    case Mode::check_theorem_a:
      run_hypotheses(config, out, results);
      break;
    case Mode::oracle:
      run_oracle(config, out, results);
      break;
    case Mode::transform_dump:
      run_transform_dump(config, out, results);
      break;
  }
  out.document = Json{{"mode", to_string(config.mode)},
                      {"config", config_to_json(config, false)},
                      {"environment", Json{{"version", std::string(kVersion)}, {"seed", config.seed}}},
                      {"results", std::move(results)},
                      {"exit_status", out.exit_status}};
  out.summary += out.exit_status == 0 ? "PASS\n" : "FAIL\n";
  return out;
}

std::string render_report(const RunReport& report) { return report.document.dump(2) + "\n"; }

void write_outputs(const ExperimentConfig& config, const RunReport& report) {
  const std::filesystem::path dir(config.out_dir);
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& content) {
    std::ofstream f(dir / name, std::ios::binary);
    if (!f) throw Error("cannot write " + (dir / name).string());
    f << content;
  };
  write(config.report_name, render_report(report));
  for (const auto& [name, content] : report.files) write(name, content);
}

}  // namespace summa
