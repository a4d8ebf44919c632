#pragma once

#include "tsilab/dual.hpp"
#include "tsilab/lp.hpp"
#include "tsilab/separation.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace tsilab {

/// Wire format for vectors: {"entries": [[index, "p/q"], ...]} with strictly
/// increasing indices. Zero-valued entries are accepted on input and dropped.
nlohmann::json vector_to_json(const FiniteVector& x);
FiniteVector vector_from_json(const nlohmann::json& j);

nlohmann::json family_to_json(const std::vector<FiniteVector>& family);
std::vector<FiniteVector> family_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const NormCertificate& certificate);

nlohmann::json functionals_to_json(const std::vector<NormingFunctional>& functionals);

/// `approx_digits` < 0 suppresses decimal renderings (the default);
/// otherwise "*_approx" fields with that many fractional digits are added.
nlohmann::json report_to_json(const SeparationReport& report, int approx_digits = -1);

nlohmann::json extraction_to_json(const ExtractionResult& result, int approx_digits = -1);

/// CSV pair table: header "i,j,diff_norm,sum_norm", one row per pair.
std::string report_to_csv(const SeparationReport& report);

} // namespace tsilab
