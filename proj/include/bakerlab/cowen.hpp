#pragma once

#include <string>
#include <vector>

#include "bakerlab/catalog.hpp"

namespace bakerlab {

// Budgeted Fatou-side proxy classes used by the boundary-gap probe:
// baker_interior orbits reach the map's absorbing region and stay (or
// explode through it); fast_escape orbits blow up elsewhere.
enum class ProbeClass { baker_interior, fast_escape, undecided };

struct ProbeBudgets {
  int n_probe = 400;      // iterations per probe
  int streak = 8;         // consecutive in-region steps to call interior
  int gap_levels = 16;    // dyadic radii per gap estimate
  int directions = 64;
  long probe_budget = 4096;  // max probe classifications per gap call
};

ProbeClass probe_class(const EntireMapSpec& map, cplx z,
                       const ProbeBudgets& b = {});

// Radius of the largest probed disk around z whose sampled points all share
// z's class; dyadic descent from max(64, 4|z|). Throws when z itself is not
// interior, when no level is uniform, or when the budget runs out.
double boundary_gap(const EntireMapSpec& map, cplx z,
                    const ProbeBudgets& b = {});

// Same probe machinery without the interior precondition: upper-bound
// estimate of the distance from z to the rendered Julia set.
double boundary_witness(const EntireMapSpec& map, cplx z,
                        const ProbeBudgets& b = {});

struct IncrementSeries {
  cplx start;
  std::vector<cplx> orbit;
  std::vector<double> increments;     // d_k, length depth-1
  std::vector<double> boundary_gaps;  // gap at z_k, aligned with increments
};

IncrementSeries increment_series(const EntireMapSpec& map, cplx z0, int depth,
                                 const ProbeBudgets& b = {});

struct ClassifyResult {
  BakerType decision = BakerType::doubly_parabolic;
  bool undecided = false;
  std::vector<cplx> starts;
  std::vector<double> L;  // median of the last quartile of d_k, per start
  std::vector<IncrementSeries> series;
};

// Decision rule over the per-start statistic L:
//   (i)  every L < 0.05                         -> doubly_parabolic
//   (ii) min L > 0.2 and spread < 3             -> hyperbolic
//   (iii) L strictly decreasing, spread >= 3    -> simply_parabolic
// anything else -> undecided with the raw series attached.
ClassifyResult classify_baker_type(const EntireMapSpec& map,
                                   const std::vector<cplx>& starts, int depth,
                                   const ProbeBudgets& b = {});

std::vector<cplx> default_classify_starts(const EntireMapSpec& map);

}  // namespace bakerlab
