#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace ncgeo {

struct CheckRecord {
  std::string name;
  std::string status; // PASS | FAIL | SKIP
  double max_deviation = 0;
  std::string witness;
};

struct Report {
  std::string schema_version = "1";
  std::string task;
  nlohmann::json config_echo;
  std::vector<CheckRecord> checks;
  nlohmann::json artifacts = nlohmann::json::object();
  double wall_clock_ms = 0;
  std::string version;

  void add(const std::string& name, bool pass, double dev = 0,
           const std::string& witness = "") {
    checks.push_back({name, pass ? "PASS" : "FAIL", dev, witness});
  }
  void skip(const std::string& name, const std::string& why) {
    checks.push_back({name, "SKIP", 0, why});
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (c.status == "FAIL") return false;
    return true;
  }
  nlohmann::json to_json() const;
  std::string summary() const;
};

} // namespace ncgeo
