#pragma once

#include "looijenga/period.hpp"
#include "looijenga/torelli.hpp"

#include <json.hpp>

#include <string>

namespace looijenga {

using Json = nlohmann::ordered_json;

Json gm_to_json(const GmElem& g);
GmElem gm_from_json(const Json& j);

Json fan_to_json(const Fan2D& f);
Fan2D fan_from_json(const Json& j);

// Canonical pair document: {"name"?, "fan", "blowups", "marking"?}.
Json pair_to_json(const PairModel& p, const std::string& name = "");
PairModel pair_from_json(const Json& j);

Json class_to_json(const ClassVec& v);
ClassVec class_from_json(const Json& j);
Json ratvec_to_json(const RatVec& v);

Json period_to_json(const PeriodPoint& pp);

Json config_to_json(const ExceptionalConfiguration& c);
ExceptionalConfiguration config_from_json(const Json& j);

Json verdict_to_json(const TorelliVerdict& v);

Json matrix_to_json(const IntMat& m);
IntMat matrix_from_json(const Json& j);

// Canonical serialization used by every command: two-space indent, ordered
// keys, trailing newline.
std::string dump_canonical(const Json& j);

}  // namespace looijenga
