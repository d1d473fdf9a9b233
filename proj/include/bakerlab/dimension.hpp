#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bakerlab/branches.hpp"

namespace bakerlab {

// Unique s > 0 with b1^s + b2^s = 1; equal factors use the closed form
// log 2 / log(1/b), the rest bisection plus Newton polish to 1e-12.
double moran_exponent(double b1, double b2);

struct DimensionBound {
  double s = 0;
  double b1 = 0, b2 = 0;
  double containment_margin1 = 0, containment_margin2 = 0;
  double disjointness_margin = 0;
  bool capped = false;  // bisection wanted s > 2 (planar cap, estimation noise)
  std::string label = "numerical lower-bound estimate";
};

// Core estimator over two sampled contractions of a shared disk: b_i is the
// min pairwise stretch over boundary sample pairs, shrunk by the 0.9 safety
// factor. Throws when containment or disjointness fails.
DimensionBound ifs_bound_from_contractions(
    const std::function<cplx(cplx)>& phi1, const std::function<cplx(cplx)>& phi2,
    Disk base, int boundary_points = 32, int pairs = 256);

// BranchChain front-end: both chains must share the base disk and be valid.
DimensionBound ifs_lower_bound(const EntireMapSpec& map, const SingularData& sd,
                               const BranchChain& chain1,
                               const BranchChain& chain2);

}  // namespace bakerlab
