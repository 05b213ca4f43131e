#pragma once

#include <nlohmann/json.hpp>

#include "witt/centralizer.hpp"
#include "witt/laws.hpp"
#include "witt/rigidity.hpp"

namespace witt {

/// JSON forms used by the command-line tool. Elements and scalars appear
/// in their canonical text form; nlohmann::json keeps object keys sorted.
nlohmann::json to_json_value(const ScalarMatrix& a);
nlohmann::json to_json_value(const CentralizerResult& c);
nlohmann::json to_json_value(const VerificationReport& r);
nlohmann::json to_json_value(const RigidityReport& r);
nlohmann::json to_json_value(const LawReport& r);
nlohmann::json to_json_value(const CertificateEntry& e);

}  // namespace witt
