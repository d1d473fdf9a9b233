#pragma once

#include <string>
#include <vector>

#include "bakerlab/config.hpp"

namespace bakerlab {

inline constexpr const char* kVersion = "0.1.0";

struct RunResult {
  std::vector<std::string> outputs;
  std::string summary;  // one-line human text printed by the CLI
};

// Executes a validated experiment config; writes artifacts plus a manifest.
// Throws config_error for schema problems (CLI exit 2) and bakerlab::error
// for numerical failures (CLI exit 3). Not-found results are data, not
// errors: they produce empty-but-valid CSV and a zero exit.
RunResult run_experiment(const ExperimentConfig& cfg);

// Boundary samples of the rendered Julia set: grid scan of probe classes
// over the window, bisection-refined across class changes.
std::vector<cplx> raster_boundary_samples(const EntireMapSpec& map,
                                          double re_lo, double re_hi,
                                          double im_lo, double im_hi,
                                          int count);

}  // namespace bakerlab
