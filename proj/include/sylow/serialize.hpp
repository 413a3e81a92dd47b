#pragma once

// JSON forms. Rationals are always "n/d" strings; integers are JSON numbers when
// they fit in 64 bits and decimal strings otherwise.

#include <json.hpp>

#include "sylow/certify.hpp"
#include "sylow/compensation.hpp"
#include "sylow/profile.hpp"
#include "sylow/sylow_engine.hpp"

namespace sylow {

using Json = nlohmann::ordered_json;

Json to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);

Json to_json(const SylowProfile& p);  // [{"p":2,"nu":5,"sigma":8}, ...] sorted by p
SylowProfile profile_from_json(const Json& j);

Json to_json(const SylowPolynomial& poly);  // [{"prime":..,"nu":..,"sigma":..}, ...]

Json to_json(const DefectReport& r);
DefectReport report_from_json(const Json& j);

/// Certificate together with its partition witness.
Json to_json(const Certificate& c);
/// Re-verifies; throws CrossCheckFailure when the recorded witness is wrong.
Certificate certificate_from_json(const Json& j);

}  // namespace sylow
