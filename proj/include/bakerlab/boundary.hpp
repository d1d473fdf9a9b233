#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bakerlab/branches.hpp"
#include "bakerlab/cowen.hpp"

namespace bakerlab {

struct SearchBudgets {
  double scan_half_width = 8.0;  // preimage window per pullback level
  int boundary_samples = 16;     // disk boundary samples for containment
  double containment_factor = 0.95;
  int fixed_point_iters = 200;
  double fixed_point_tol = 1e-12;
};

struct PeriodicPointResult {
  bool found = false;
  cplx point;
  int period = 0;
  cplx multiplier;
  double residual = 0;          // |f^period(p) - p|
  double boundary_witness = 0;  // probe-based distance bound to the Julia set
  BranchChain chain;
  double best_margin = -1e300;  // best containment margin seen (found or not)
  std::string note;
};

// Branch-chain contraction search for a repelling periodic point whose chain
// returns target_region strictly into itself; the final verification is
// plain forward iteration.
PeriodicPointResult find_periodic_point(const EntireMapSpec& map,
                                        const SingularData& sd,
                                        Disk target_region, int max_period,
                                        const SearchBudgets& budgets = {},
                                        const ProbeBudgets& probes = {});

struct Rect {
  double re_lo = 0, re_hi = 0, im_lo = 0, im_hi = 0;
};

struct CensusResult {
  std::vector<PeriodicPointResult> points;  // deduplicated, grid order
  int disks_probed = 0;
  int disks_hit = 0;
  double coverage = 0;  // disks_hit / disks_probed
};

CensusResult periodic_census(const EntireMapSpec& map, const SingularData& sd,
                             Rect region, int count, int max_period,
                             int grid_nx = 4, int grid_ny = 8,
                             const SearchBudgets& budgets = {},
                             const ProbeBudgets& probes = {});

enum class TriState { yes, no, undecided };
std::string tristate_name(TriState t);

struct OrbitClassBudgets {
  double spherical_radius = 1e6;  // |z| beyond this counts as near infinity
  double bounded_radius = 1e3;
  double access_threshold = 20.0;  // access coordinate must pass this level
};

struct BoundaryOrbitClass {
  cplx start;
  TriState dw_set_member = TriState::undecided;
  TriState caratheodory_member = TriState::undecided;
  double sup_radius = 0;
  double tail_min_radius = 0;
  int steps = 0;
  bool overflowed = false;
};

BoundaryOrbitClass classify_boundary_orbit(const EntireMapSpec& map, cplx x,
                                           int horizon,
                                           const OrbitClassBudgets& radii = {},
                                           const ProbeBudgets& probes = {});

}  // namespace bakerlab
