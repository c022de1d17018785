#pragma once

#include <json.hpp>
#include <string>

#include "summa/classes.hpp"
#include "summa/functionals.hpp"
#include "summa/hypothesis.hpp"
#include "summa/oracle.hpp"
#include "summa/sequence.hpp"

namespace summa {

using Json = nlohmann::ordered_json;

/// Parses {"family", "params", "n", "start"}; `pointer` prefixes error locations.
SequenceSpec parse_sequence_spec(const Json& j, const std::string& pointer = "");
CesaroParams parse_params(const Json& j, const std::string& pointer = "");

void to_json(Json& j, const SequenceSpec& spec);
void from_json(const Json& j, SequenceSpec& spec);
void to_json(Json& j, const CesaroParams& p);
void from_json(const Json& j, CesaroParams& p);
void to_json(Json& j, const RealSequence& s);
void to_json(Json& j, const FunctionalTrace& t);
void to_json(Json& j, const QuasiMonotoneVerdict& v);
void to_json(Json& j, const AlmostIncreasingWitness& w);
void to_json(Json& j, const WeightMonotoneVerdict& v);
void to_json(Json& j, const GrowthTolerances& t);
void to_json(Json& j, const GrowthDiagnostic& d);
void to_json(Json& j, const ConditionRecord& r);
void to_json(Json& j, const HypothesisReport& r);
void to_json(Json& j, const OracleVerdict& v);

}  // namespace summa
