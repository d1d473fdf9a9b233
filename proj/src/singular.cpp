#include "bakerlab/singular.hpp"

#include <cmath>
#include <limits>

#include "bakerlab/error.hpp"

namespace bakerlab {

SingularData build_singular_data(const EntireMapSpec& map, int lattice_k,
                                 int depth) {
  SingularData sd;
  sd.lattice_k_min = -lattice_k;
  sd.lattice_k_max = lattice_k;
  switch (map.formula_kind) {
    case FormulaKind::baker_abel:  // f' = 1 - e^-z
      sd.critical_base = cplx(0, 0);
      sd.critical_value_base = cplx(1, 0);
      break;
    case FormulaKind::fatou:  // f' = 1 - e^-z
      sd.critical_base = cplx(0, 0);
      sd.critical_value_base = cplx(2, 0);
      break;
    case FormulaKind::herman:  // f' = 1 + e^z, critical points i pi (2k+1)
      sd.critical_base = cplx(0, kPi);
      sd.critical_value_base = cplx(-1, kPi + 2 * kPi * map.alpha);
      break;
    case FormulaKind::bergweiler:  // f' = 2 - e^z
      sd.critical_base = cplx(std::log(2.0), 0);
      sd.critical_value_base = cplx(std::log(2.0), 0);  // fixed critical point
      break;
    case FormulaKind::bargmann:  // f' = 2 + e^z
      sd.critical_base = cplx(std::log(2.0), kPi);
      sd.critical_value_base = cplx(2 * std::log(2.0) - 5, 2 * kPi);
      break;
  }
  for (int k = sd.lattice_k_min; k <= sd.lattice_k_max; ++k) {
    cplx shift(0, 2 * kPi * k);
    sd.critical_points.push_back(sd.critical_base + shift);
    // critical values inherit the same 2 pi i translation structure
    // (f commutes with z -> z + 2 pi i k up to the formula's own shift
    //  structure; verified against eval_map in the unit tests)
    cplx cv;
    switch (map.formula_kind) {
      case FormulaKind::baker_abel: cv = cplx(1, 0) + shift; break;
      case FormulaKind::fatou: cv = cplx(2, 0) + shift; break;
      case FormulaKind::herman:
        cv = cplx(-1, (2 * k + 1) * kPi + 2 * kPi * map.alpha);
        break;
      case FormulaKind::bergweiler:
        cv = cplx(std::log(2.0), 4 * kPi * k);
        break;
      case FormulaKind::bargmann:
        cv = cplx(2 * std::log(2.0) - 5, (2 * k + 1) * 2 * kPi);
        break;
    }
    sd.critical_values.push_back(cv);
  }
  for (cplx v : sd.critical_values) {
    cplx z = v;
    for (int n = 0; n < depth; ++n) {
      sd.postsingular_samples.push_back(z);
      if (std::abs(z) > 1e8) break;
      try {
        z = eval_map(map, z);
      } catch (const overflow_error&) {
        break;
      }
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) break;
    }
  }
  return sd;
}

namespace {
double min_dist(const std::vector<cplx>& pts, cplx z) {
  double d = std::numeric_limits<double>::infinity();
  for (cplx p : pts) d = std::min(d, std::abs(z - p));
  return d;
}
}  // namespace

double dist_to_postsingular(const SingularData& sd, cplx z) {
  return min_dist(sd.postsingular_samples, z);
}
double dist_to_critical_points(const SingularData& sd, cplx z) {
  return min_dist(sd.critical_points, z);
}
double dist_to_critical_values(const SingularData& sd, cplx z) {
  return min_dist(sd.critical_values, z);
}

}  // namespace bakerlab
