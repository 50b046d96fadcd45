#pragma once

// JSON and CSV forms of the library's results. Key order is fixed by
// nlohmann::ordered_json so equal values always serialize to equal bytes.

#include <nlohmann/json.hpp>
#include <string>

#include "skcert/certify.hpp"
#include "skcert/experiment.hpp"
#include "skcert/modpoly.hpp"
#include "skcert/polygon.hpp"
#include "skcert/smooth.hpp"

namespace skcert {

using Json = nlohmann::ordered_json;

/// {"degree", "prime", "vertices": [[j, v], ...], "slopes": ["-1/8", ...]}
Json polygon_to_json(const NewtonPolygon& np, u64 prime);

Json certificate_to_json(const Certificate& cert);

/// {"confirmed_sk", "primes_tried", "evidence": [{"r", "cycle_type"}, ...], "seed", ...}
Json verdict_to_json(const OracleVerdict& verdict);

/// {"x", "k", "psi", "bound"}
Json psi_to_json(const SmoothCount& count);

Json report_to_json(const ExperimentReport& report);
ExperimentReport report_from_json(const Json& j);

/// Header comment lines, then one row per (x, k, family) cell.
std::string report_to_csv(const ExperimentReport& report);

Json smooth_report_to_json(const SmoothExperimentReport& report);

Json agreement_to_json(const AgreementReport& report);

}  // namespace skcert
