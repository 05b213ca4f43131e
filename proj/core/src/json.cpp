#include "witt/json.hpp"

#include "witt/format.hpp"

namespace witt {

namespace {

nlohmann::json elements(std::span<const WittElement> xs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

}  // namespace

nlohmann::json to_json_value(const ScalarMatrix& a) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (const auto& [c, v] : a.row(r)) entries.push_back({r, c, to_string(v)});
  }
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"entries", entries}};
}

nlohmann::json to_json_value(const CentralizerResult& c) {
  return {{"dimension", c.dimension}, {"basis", elements(c.basis)}};
}

nlohmann::json to_json_value(const VerificationReport& r) {
  return {{"lemma", r.lemma},     {"parameters", r.parameters}, {"pass", r.pass},
          {"dimension", r.dimension}, {"basis", elements(r.basis)}, {"failures", r.failures},
          {"details", r.details}};
}

nlohmann::json to_json_value(const CertificateEntry& e) {
  return {{"constraint", e.constraint},
          {"exponent", std::vector<int>(e.exponent.entries().begin(), e.exponent.entries().end())},
          {"direction", e.direction + 1},
          {"weight", to_string(e.weight)}};
}

nlohmann::json to_json_value(const RigidityReport& r) {
  nlohmann::json residuals = nlohmann::json::array();
  for (const auto& c : r.residuals) {
    residuals.push_back({{"probe", to_string(c.probe)}, {"value", to_string(c.value)}, {"pass", c.pass}});
  }
  nlohmann::json certificate = nlohmann::json::array();
  for (const auto& e : r.certificate) certificate.push_back(to_json_value(e));
  nlohmann::json traces = nlohmann::json::array();
  for (const auto& t : r.lemma_traces) traces.push_back(to_json_value(t));
  return {{"verdict", r.verdict},
          {"recovered_a", r.recovered_a ? nlohmann::json(to_string(*r.recovered_a)) : nlohmann::json(nullptr)},
          {"common_centralizer", elements(r.common_centralizer)},
          {"residuals", residuals},
          {"certificate", certificate},
          {"lemma_traces", traces}};
}

nlohmann::json to_json_value(const LawReport& r) {
  return {{"law", std::string(to_string(r.law))},
          {"checked", r.checked},
          {"passed", r.passed},
          {"pass", r.pass()},
          {"first_failure", r.first_failure ? nlohmann::json(*r.first_failure) : nlohmann::json(nullptr)}};
}

}  // namespace witt
