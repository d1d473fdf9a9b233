#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bakerlab/catalog.hpp"
#include "bakerlab/singular.hpp"

namespace bakerlab {

struct Disk {
  cplx center;
  double radius = 0;
};

// Newton solve of f(w) = target from `seed`; throws branch_error on
// derivative underflow (|f'| < 1e-8) or non-convergence within 100 steps.
cplx newton_preimage(const EntireMapSpec& map, cplx target, cplx seed,
                     double tol = 1e-12);

// All preimages of `target` found by a 32x32 seed scan of the square window
// around `center`, Newton-refined and deduplicated; sorted by (Re, Im).
std::vector<cplx> preimages_in_window(const EntireMapSpec& map, cplx target,
                                      cplx center, double half_width,
                                      double tol = 1e-12);

struct LiftControl {
  double tol = 1e-10;
  double min_step = 1e-12;   // halving floor on the curve parameter
  double max_jump = 1.0;     // absolute cap on one continuation step
  bool check_critical_values = true;
};

// Analytic continuation of the inverse branch with f(w_start) = path[0]
// along the polyline. Throws obstruction_error (with the blocking curve
// parameter in [0,1]) when step halving underflows or the path meets the
// critical-value exclusion zone.
std::vector<cplx> lift_path(const EntireMapSpec& map, const SingularData& sd,
                            const std::vector<cplx>& path, cplx w_start,
                            const LiftControl& ctrl = {});

struct BranchChain {
  Disk base;
  std::vector<cplx> endpoints;    // pulled-back centers, one per step
  std::vector<double> per_step;   // quasi-hyperbolic contraction estimates
  double cumulative = 1.0;
  bool valid = true;
  std::string reason;
};

enum class ChoiceRule { nearest_to_previous };

BranchChain chain_contraction(const EntireMapSpec& map, const SingularData& sd,
                              Disk base, int n,
                              ChoiceRule rule = ChoiceRule::nearest_to_previous,
                              double scan_half_width = 8.0);

// Chain along a caller-supplied endpoint path (used by the periodic-point
// search, which picks branches by tree search rather than the nearest rule).
BranchChain chain_along(const EntireMapSpec& map, const SingularData& sd,
                        Disk base, const std::vector<cplx>& endpoints);

struct StolzRegion {
  double vertex = 0;  // boundary point x of the half-plane
  double height = 0;  // rho
  double opening = 0; // alpha in (0, pi/2)
  bool contains(cplx w) const {
    return w.imag() > 0 && w.imag() < height &&
           std::abs(w.real() - vertex) / w.imag() < opening;
  }
};

struct StolzReport {
  bool pass = false;
  bool inconclusive = false;  // branch failure along the pullback
  double worst_ratio = 0;     // max over samples of the containment ratios
  int samples = 0;
};

// Pulls `samples` points of the radial segment R_rho(x) back n steps along
// the branch fixing the base point and checks membership in the Stolz angle
// at H_n(x).
StolzReport stolz_containment(const InnerFunctionSpec& inner, double x,
                              double rho, double alpha, int n, int samples);

// Downward dyadic search for a height at which the containment test passes;
// returns 0 when none is found above the floor.
double stolz_rho_search(const InnerFunctionSpec& inner, double x, double rho0,
                        double alpha, int n, int samples,
                        double floor = 1e-4);

}  // namespace bakerlab
