#include "ncgeo/report.hpp"

#include <sstream>

namespace ncgeo {

nlohmann::json Report::to_json() const {
  nlohmann::json out;
  out["schema_version"] = schema_version;
  out["task"] = task;
  out["config"] = config_echo;
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json cj{{"name", c.name}, {"status", c.status},
                      {"max_deviation", c.max_deviation}};
    if (!c.witness.empty()) cj["witness"] = c.witness;
    cs.push_back(cj);
  }
  out["checks"] = cs;
  out["artifacts"] = artifacts;
  out["wall_clock_ms"] = wall_clock_ms;
  out["version"] = version;
  return out;
}

std::string Report::summary() const {
  std::ostringstream os;
  int pass = 0, fail = 0, skip = 0;
  for (const auto& c : checks) {
    if (c.status == "PASS") ++pass;
    else if (c.status == "FAIL") ++fail;
    else ++skip;
  }
  os << task << ": " << pass << " pass, " << fail << " fail, " << skip
     << " skip";
  for (const auto& c : checks)
    if (c.status == "FAIL")
      os << "\n  FAIL " << c.name
         << (c.witness.empty() ? "" : " [" + c.witness + "]");
  return os.str();
}

} // namespace ncgeo
