#pragma once

#include "json.hpp"

#include "hitorb/classify.hpp"
#include "hitorb/hitchin.hpp"
#include "hitorb/orbifold.hpp"

namespace hitorb {

nlohmann::json to_json(const OrbifoldSignature& sig);
OrbifoldSignature signature_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BaseProfile& profile);

nlohmann::json to_json(const DimensionPolynomial& poly);

nlohmann::json to_json(const SignatureFamily& fam, int stabilization_order);
SignatureFamily family_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FamilySet& fs);
FamilySet family_set_from_json(const nlohmann::json& j);

}  // namespace hitorb
