#include "summa/serialize.hpp"

#include "summa/errors.hpp"

namespace summa {

namespace {

double number_at(const Json& j, const std::string& pointer) {
  if (!j.is_number()) throw ConfigError(pointer, "expected a number");
  return j.get<double>();
}

Index integer_at(const Json& j, const std::string& pointer) {
  if (!j.is_number_integer()) throw ConfigError(pointer, "expected an integer");
  return j.get<Index>();
}

template <typename T>
void put_optional(Json& j, const char* key, const std::optional<T>& v) {
  if (v) {
    j[key] = *v;
  } else {
    j[key] = nullptr;
  }
}

}  // namespace

SequenceSpec parse_sequence_spec(const Json& j, const std::string& pointer) {
  if (!j.is_object()) throw ConfigError(pointer, "expected a sequence spec object");
  for (const auto& [key, _] : j.items()) {
    if (key != "family" && key != "params" && key != "n" && key != "start") {
      throw ConfigError(pointer + "/" + key, "unknown field");
    }
  }
  SequenceSpec spec;
  if (!j.contains("family") || !j["family"].is_string()) throw ConfigError(pointer + "/family", "expected a string");
  spec.family = j["family"].get<std::string>();
  if (!j.contains("n")) throw ConfigError(pointer + "/n", "missing");
  spec.n = integer_at(j["n"], pointer + "/n");
  if (spec.n < 1) throw ConfigError(pointer + "/n", "must be >= 1");
  if (j.contains("start")) {
    spec.start = integer_at(j["start"], pointer + "/start");
    if (spec.start < 0) throw ConfigError(pointer + "/start", "must be >= 0");
  }
  if (j.contains("params")) {
    if (!j["params"].is_object()) throw ConfigError(pointer + "/params", "expected an object");
    for (const auto& [name, value] : j["params"].items()) {
      spec.params[name] = number_at(value, pointer + "/params/" + name);
    }
  }
  return spec;
}

CesaroParams parse_params(const Json& j, const std::string& pointer) {
  if (!j.is_object()) throw ConfigError(pointer, "expected a params object");
  CesaroParams p;
  for (const auto& [key, value] : j.items()) {
    const double x = number_at(value, pointer + "/" + key);
    if (key == "alpha") {
      p.alpha = x;
    } else if (key == "k") {
      p.k = x;
    } else if (key == "beta") {
      p.beta = x;
    } else if (key == "epsilon") {
      p.epsilon = x;
    } else {
      throw ConfigError(pointer + "/" + key, "unknown parameter");
    }
  }
  try {
    p.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(pointer, e.what());
  }
  return p;
}

void to_json(Json& j, const SequenceSpec& spec) {
  j = Json{{"family", spec.family}, {"params", Json::object()}, {"n", spec.n}, {"start", spec.start}};
  for (const auto& [name, value] : spec.params) j["params"][name] = value;
}

void from_json(const Json& j, SequenceSpec& spec) { spec = parse_sequence_spec(j); }

void to_json(Json& j, const CesaroParams& p) {
  j = Json{{"alpha", p.alpha}, {"k", p.k}, {"beta", p.beta}, {"epsilon", p.epsilon}};
}

void from_json(const Json& j, CesaroParams& p) { p = parse_params(j); }

void to_json(Json& j, const RealSequence& s) {
  j = Json{{"start", s.start()}, {"values", Json(std::vector<double>(s.values().begin(), s.values().end()))}};
}

void to_json(Json& j, const FunctionalTrace& t) {
  j = Json{{"checkpoints", t.checkpoints}, {"partial_sums", t.partial_sums}};
}

void to_json(Json& j, const QuasiMonotoneVerdict& v) {
  j = Json::object();
  j["holds_on_range"] = v.holds_on_range;
  put_optional(j, "first_violation", v.first_violation);
  put_optional(j, "positivity_from", v.positivity_from);
  j["trend_ratio"] = v.trend_ratio;
  j["decaying_at_scale"] = v.decaying_at_scale;
}

void to_json(Json& j, const AlmostIncreasingWitness& w) {
  j = Json{{"inf_ratio", w.inf_ratio},
           {"A", w.A},
           {"B", w.B},
           {"floor", w.floor},
           {"almost_increasing_at_scale", w.almost_increasing_at_scale}};
}

void to_json(Json& j, const WeightMonotoneVerdict& v) {
  j = Json::object();
  j["holds"] = v.holds;
  put_optional(j, "first_violation", v.first_violation);
}

void to_json(Json& j, const GrowthTolerances& t) {
  j = Json{{"slope", t.slope}, {"ratio", t.ratio}, {"levels", t.levels}};
}

void to_json(Json& j, const GrowthDiagnostic& d) {
  j = Json{{"checkpoints", d.checkpoints}, {"values", d.values}};
  put_optional(j, "reference", d.reference);
  j["slope"] = d.slope;
  j["last_mid_ratio"] = d.last_mid_ratio;
  j["verdict"] = to_string(d.verdict);
}

void to_json(Json& j, const ConditionRecord& r) {
  j = Json{{"id", r.id}, {"verdict", to_string(r.verdict)}};
  put_optional(j, "first_violation", r.first_violation);
  put_optional(j, "slope", r.slope);
  j["notes"] = r.notes;
  if (r.growth) j["growth"] = *r.growth;
}

void to_json(Json& j, const HypothesisReport& r) {
  j = Json{{"theorem", r.theorem},
           {"tolerances", r.options.growth},
           {"inf_ratio_floor", r.options.inf_ratio_floor},
           {"all_passed", r.all_passed()},
           {"records", r.records}};
}

void to_json(Json& j, const OracleVerdict& v) {
  j = Json{{"check", v.check}, {"trials", v.trials}, {"violations", v.violations}};
  put_optional(j, "first_violation_input", v.first_violation_input);
  j["seed"] = v.seed;
}

}  // namespace summa
