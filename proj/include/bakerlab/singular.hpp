#pragma once

#include <vector>

#include "bakerlab/catalog.hpp"

namespace bakerlab {

// Singular data of a catalog map: the 2 pi i - periodic critical lattice,
// critical values, and finite forward-orbit samples of the singular values.
struct SingularData {
  cplx critical_base;     // lattice: critical_base + 2 pi i k
  cplx critical_value_base;
  int lattice_k_min = -4;
  int lattice_k_max = 4;
  std::vector<cplx> critical_points;
  std::vector<cplx> critical_values;
  std::vector<cplx> postsingular_samples;  // forward-closed up to the budget
  double exclusion_radius = 1e-3;
};

// Forward orbits of the singular values to `depth`, truncated at modulus 1e8.
SingularData build_singular_data(const EntireMapSpec& map, int lattice_k = 4,
                                 int depth = 50);

double dist_to_postsingular(const SingularData& sd, cplx z);
double dist_to_critical_points(const SingularData& sd, cplx z);
double dist_to_critical_values(const SingularData& sd, cplx z);

}  // namespace bakerlab
