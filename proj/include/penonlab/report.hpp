#pragma once

#include <string>

#include "json.hpp"

namespace penonlab::verify {

// Structured verdict of a verification scenario. Deterministic for a fixed
// seed; a fail always carries at least one witness.
struct Report {
  enum class Verdict { Pass, Fail, Error };

  std::string scenario;
  Verdict verdict = Verdict::Error;
  nlohmann::json config = nlohmann::json::object();
  nlohmann::json witnesses = nlohmann::json::array();
  nlohmann::json details = nlohmann::json::object();
};

std::string to_string(Report::Verdict v);
nlohmann::json to_json(const Report& r);

// Structural check against the published report schema
// (docs/report.schema.json). Returns false and explains in `why` on the
// first deviation.
bool matches_report_schema(const nlohmann::json& j, std::string* why = nullptr);

}  // namespace penonlab::verify
