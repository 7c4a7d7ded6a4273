#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "wellspring/isw.hpp"

namespace wellspring::cli {

using isw::WellConfig;

struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TimeGrid {
  double t_start = 0.0;
  double t_end = 0.0;  // 0 means "one beat period of the well"
  unsigned samples = 201;

  friend bool operator==(const TimeGrid&, const TimeGrid&) = default;
};

struct RunConfig {
  WellConfig well;
  std::vector<std::complex<double>> packet;
  TimeGrid times;
  double grid_h = 0.0;  // 0 means L/2000
  double tol_symbolic = 1e-12;
  double tol_oracle = 1e-4;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// Config with every default made explicit (two-mode packet, one beat period,
// h = L/2000).
RunConfig default_config();

// Parses a JSON document into a RunConfig.  Unknown keys are rejected by
// name; missing keys get defaults.  Complex coefficients are [re, im] pairs.
RunConfig parse_config(const std::string& text);

// Compact JSON round-trip inverse of parse_config.
std::string serialize_config(const RunConfig& cfg);

}  // namespace wellspring::cli
