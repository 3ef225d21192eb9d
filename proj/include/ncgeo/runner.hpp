#pragma once

#include <optional>

#include "ncgeo/json_io.hpp"
#include "ncgeo/report.hpp"

namespace ncgeo {

inline constexpr const char* kToolVersion = "0.1.0";

struct RunConfig {
  std::string kind; // torus | crossed | liecw | dynfree | localize | suite
  json body;
  std::uint64_t seed = 0;
  bool seed_set = false;
  double eps = kDefaultEps;
  int jobs = 1;
};

// validated config or a located schema error (config_error)
RunConfig parse_config(const json& doc);
RunConfig parse_config_file(const std::string& path);

// dispatch to the module checks; deterministic for fixed (config, seed)
Report run(const RunConfig& config);

} // namespace ncgeo
