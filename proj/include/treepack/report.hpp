#pragma once

#include <json.hpp>

#include <vector>

#include "treepack/graph.hpp"
#include "treepack/packing.hpp"
#include "treepack/property_p.hpp"
#include "treepack/spectral.hpp"
#include "treepack/theorems.hpp"

namespace treepack {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);
Json edges_json(const Graph& g, const EdgeSet& edges);
Json spectrum_json(const Spectrum& s);
Json certificate_json(const PartitionCertificate& c);
Json decomposition_json(const Graph& g, const ForestDecomposition& d);
Json verdict_json(const Graph& g, const PQuery& q, const PVerdict& v);
Json theorem_json(const Graph& g, const TheoremReport& r);
Json validation_json(const ValidationReport& r);
Json repro_json(const std::vector<ReproRow>& rows);

/// Missing keys keep their defaults; unknown keys are rejected.
ValidationConfig validation_config_from_json(const Json& j);
Json validation_config_json(const ValidationConfig& c);

}  // namespace treepack
