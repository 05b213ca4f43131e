#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "witt/element.hpp"

namespace witt {

/// Outcome of one lemma verifier. `details` carries verifier-specific data
/// (coefficients, ranks, violating terms).
struct VerificationReport {
  std::string lemma;
  nlohmann::json parameters = nlohmann::json::object();
  bool pass = false;
  std::size_t dimension = 0;
  std::vector<WittElement> basis;
  std::vector<std::string> failures;
  nlohmann::json details = nlohmann::json::object();
};

}  // namespace witt
