#include "penonlab/report.hpp"

namespace penonlab::verify {

std::string to_string(Report::Verdict v) {
  switch (v) {
    case Report::Verdict::Pass: return "pass";
    case Report::Verdict::Fail: return "fail";
    case Report::Verdict::Error: return "error";
  }
  return "?";
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json j;
  j["scenario"] = r.scenario;
  j["verdict"] = to_string(r.verdict);
  j["config"] = r.config;
  j["witnesses"] = r.witnesses;
  j["details"] = r.details;
  return j;
}

bool matches_report_schema(const nlohmann::json& j, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!j.is_object()) return fail("report is not an object");
  for (const char* field : {"scenario", "verdict", "config", "witnesses", "details"})
    if (!j.contains(field)) return fail(std::string("missing field '") + field + "'");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::string(it.key()) != "scenario" && it.key() != "verdict" && it.key() != "config" &&
        it.key() != "witnesses" && it.key() != "details")
      return fail("unknown field '" + it.key() + "'");
  if (!j["scenario"].is_string()) return fail("'scenario' must be a string");
  const std::string v = j["verdict"].is_string() ? j["verdict"].get<std::string>() : "";
  if (v != "pass" && v != "fail" && v != "error")
    return fail("'verdict' must be pass|fail|error");
  if (!j["config"].is_object()) return fail("'config' must be an object");
  if (!j["witnesses"].is_array()) return fail("'witnesses' must be an array");
  if (!j["details"].is_object()) return fail("'details' must be an object");
  if (v == "fail" && j["witnesses"].empty()) return fail("a fail report must carry a witness");
  return true;
}

}  // namespace penonlab::verify
