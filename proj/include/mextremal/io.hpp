#pragma once

#include <json.hpp>

#include "mextremal/cplane.hpp"
#include "mextremal/domains.hpp"
#include "mextremal/policy.hpp"

namespace mextremal {

using json = nlohmann::json;

// Complex numbers travel as [re, im] pairs.
json to_json(cplx z);
cplx complex_from_json(const json& j);
json to_json(const cvec& v);
cvec cvec_from_json(const json& j);

json to_json(const NumericPolicy& p);
// Fields missing from j keep their values from base.
NumericPolicy policy_from_json(const json& j, NumericPolicy base = {});

json to_json(const DomainModel& dom);
DomainModel domain_from_json(const json& j);

json to_json(const BlaschkeProduct& b);
BlaschkeProduct blaschke_from_json(const json& j);

// Schema errors carry the offending key.
const json& require_key(const json& j, const char* key);

}  // namespace mextremal
