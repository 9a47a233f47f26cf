#pragma once

#include "ldp/identity.hpp"
#include "ldp/reduction.hpp"

#include <json.hpp>

namespace ldp {

// Wire formats. Lattice coordinates are JSON integers, rationals are
// strings "p/q" in lowest terms ("p" when the denominator is 1), rational
// points are 2-element string arrays.

nlohmann::json to_json(const LatticePoint& p);
nlohmann::json to_json(const RationalPoint& p);
nlohmann::json to_json(const LatticePolygon& p);   // {"vertices": [[x, y], ...]}
nlohmann::json to_json(const RationalPolygon& p);  // {"vertices": [["p/q", "r/s"], ...]}
nlohmann::json to_json(const Cone& c);  // {"u1":[..],"u2":[..],"V":int,"a":int,"w":[..]}
nlohmann::json to_json(const Sail& s);
nlohmann::json to_json(const ConeCheck& c);
nlohmann::json to_json(const ReductionStep& s);
nlohmann::json to_json(const DecompositionCheck& d);
nlohmann::json to_json(const VerificationReport& r);

LatticePoint point_from_json(const nlohmann::json& j);
LatticePolygon polygon_from_json(const nlohmann::json& j);

}  // namespace ldp
