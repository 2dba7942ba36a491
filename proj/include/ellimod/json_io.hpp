#pragma once

#include "json.hpp"

#include "ellimod/bundles.hpp"
#include "ellimod/moduli.hpp"
#include "ellimod/spectral.hpp"

namespace ellimod {

using Json = nlohmann::json;

// ["a", "b"] with reduced rational strings.
Json to_json(const EPoint& p);
EPoint epoint_from_json(const Json& j);

// {"group":"Sp","n":3,"summands":[{"d":2,"lambda":["1/2","0"]}, ...]}
Json to_json(const BundleDecomp& v);
BundleDecomp bundle_decomp_from_json(const Json& j);

// {"degree":n,"points":[{"e":[..],"mult":m},...]} plus "involution_fixed"
// and "involution_closed" when with_involution is set.
Json to_json(const SpectralFiber& fiber, bool with_involution);

Json to_json(const AdjointShape& shape);
Json to_json(const SubsystemReport& report, const RootSystem& system);
Json to_json(const ParabolicData& data, const RootSystem& system);
Json to_json(const FamilyTable& table);
Json to_json(const OrbitCanonicalForm& form);
Json to_json(const IntVector& v);

}  // namespace ellimod
