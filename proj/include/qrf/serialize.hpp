#pragma once

#include <json.hpp>

#include "qrf/hilbert.hpp"
#include "qrf/transform.hpp"

namespace qrf {

/// Machine formats use ordered JSON so documents have stable key order and
/// deterministic bytes. Doubles round-trip exactly.
using ojson = nlohmann::ordered_json;

ojson spec_to_json(const FactorSpec& spec);
FactorSpec spec_from_json(const ojson& j);

ojson state_to_json(const PureState& psi);
PureState state_from_json(const ojson& j);

ojson density_to_json(const DensityOp& rho);
DensityOp density_from_json(const ojson& j);

/// Dense export of a frame-change operator for external verification.
ojson transform_to_json(const QrfTransform& t);

}  // namespace qrf
