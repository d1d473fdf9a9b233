#include "bakerlab/cowen.hpp"

#include <algorithm>
#include <cmath>

#include "bakerlab/error.hpp"

namespace bakerlab {

ProbeClass probe_class(const EntireMapSpec& map, cplx z, const ProbeBudgets& b) {
  const AbsorbingHint& region = map.baker_meta.absorbing_hint;
  int streak = 0;
  for (int k = 0; k < b.n_probe; ++k) {
    bool in_region = region.contains(z);
    streak = in_region ? streak + 1 : 0;
    if (streak >= b.streak) return ProbeClass::baker_interior;
    bool finite = std::isfinite(z.real()) && std::isfinite(z.imag());
    if (!finite || std::abs(z) > 1e250)
      return in_region ? ProbeClass::baker_interior : ProbeClass::fast_escape;
    try {
      z = eval_map(map, z);
    } catch (const overflow_error&) {
      return in_region ? ProbeClass::baker_interior : ProbeClass::fast_escape;
    }
  }
  return ProbeClass::undecided;
}

namespace {

struct GapScan {
  double uniform_radius = -1;  // largest radius with all probes matching
  bool budget_out = false;
};

GapScan gap_scan(const EntireMapSpec& map, cplx z, ProbeClass want,
                 const ProbeBudgets& b) {
  GapScan out;
  double r = std::max(64.0, 4.0 * std::abs(z));
  long used = 0;
  for (int level = 0; level < b.gap_levels; ++level, r /= 2) {
    bool all_same = true;
    for (int d = 0; d < b.directions; ++d) {
      if (++used > b.probe_budget) {
        out.budget_out = true;
        return out;
      }
      cplx p = z + std::polar(r, 2 * kPi * d / b.directions);
      if (probe_class(map, p, b) != want) {
        all_same = false;
        break;
      }
    }
    if (all_same) {
      out.uniform_radius = r;
      return out;
    }
  }
  return out;
}

}  // namespace

double boundary_gap(const EntireMapSpec& map, cplx z, const ProbeBudgets& b) {
  if (b.probe_budget < 1)
    throw budget_error("boundary_gap requires a positive probe budget");
  if (probe_class(map, z, b) != ProbeClass::baker_interior)
    throw precondition_error(
        "boundary_gap expects a point classified inside the Baker domain");
  GapScan s = gap_scan(map, z, ProbeClass::baker_interior, b);
  if (s.budget_out)
    throw budget_error("probe budget exhausted; retry with a larger budget");
  if (s.uniform_radius < 0)
    throw budget_error(
        "no uniform neighborhood found; retry with larger budgets");
  return s.uniform_radius;
}

double boundary_witness(const EntireMapSpec& map, cplx z, const ProbeBudgets& b) {
  ProbeClass c = probe_class(map, z, b);
  GapScan s = gap_scan(map, z, c, b);
  if (s.uniform_radius >= 0) return s.uniform_radius;
  // classes disagree down to the smallest probed radius
  return std::max(64.0, 4.0 * std::abs(z)) * std::pow(0.5, b.gap_levels - 1);
}

IncrementSeries increment_series(const EntireMapSpec& map, cplx z0, int depth,
                                 const ProbeBudgets& b) {
  if (depth < 2) throw precondition_error("increment series needs depth >= 2");
  if (probe_class(map, z0, b) != ProbeClass::baker_interior)
    throw precondition_error(
        "increment series start is not inside the Baker domain at this budget");
  IncrementSeries s;
  s.start = z0;
  s.orbit.push_back(z0);
  cplx z = z0;
  for (int k = 1; k < depth; ++k) {
    try {
      z = eval_map(map, z);
    } catch (const overflow_error&) {
      break;
    }
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) break;
    s.orbit.push_back(z);
  }
  for (size_t k = 0; k + 1 < s.orbit.size(); ++k) {
    double g = boundary_gap(map, s.orbit[k], b);
    s.boundary_gaps.push_back(g);
    s.increments.push_back(std::abs(s.orbit[k + 1] - s.orbit[k]) / g);
  }
  return s;
}

namespace {
double last_quartile_median(std::vector<double> d) {
  size_t lo = (3 * d.size()) / 4;
  std::vector<double> tail(d.begin() + lo, d.end());
  std::sort(tail.begin(), tail.end());
  return tail.empty() ? 0.0 : tail[tail.size() / 2];
}
}  // namespace

ClassifyResult classify_baker_type(const EntireMapSpec& map,
                                   const std::vector<cplx>& starts, int depth,
                                   const ProbeBudgets& b) {
  if (starts.size() < 3)
    throw precondition_error("classification needs at least 3 starts");
  ClassifyResult res;
  res.starts = starts;
  for (cplx z0 : starts) {
    res.series.push_back(increment_series(map, z0, depth, b));
    res.L.push_back(last_quartile_median(res.series.back().increments));
  }
  double mx = *std::max_element(res.L.begin(), res.L.end());
  double mn = *std::min_element(res.L.begin(), res.L.end());
  double spread = mn > 0 ? mx / mn : std::numeric_limits<double>::infinity();
  bool decreasing = true;
  for (size_t i = 1; i < res.L.size(); ++i)
    decreasing &= res.L[i] < res.L[i - 1];
  if (mx < 0.05) {
    res.decision = BakerType::doubly_parabolic;
  } else if (mn > 0.2 && spread < 3.0) {
    res.decision = BakerType::hyperbolic;
  } else if (mn > 0 && decreasing && spread >= 3.0) {
    res.decision = BakerType::simply_parabolic;
  } else {
    res.undecided = true;
  }
  return res;
}

std::vector<cplx> default_classify_starts(const EntireMapSpec& map) {
  switch (map.formula_kind) {
    case FormulaKind::baker_abel: return {cplx(3, 0), cplx(6, 0), cplx(12, 0)};
    case FormulaKind::fatou: return {cplx(20, 0), cplx(50, 0), cplx(100, 0)};
    case FormulaKind::herman:
      return {cplx(-20, 0), cplx(-60, 0), cplx(-200, 0)};
    case FormulaKind::bergweiler:
      return {cplx(-10, 0), cplx(-30, 0), cplx(-100, 0)};
    case FormulaKind::bargmann:
      return {cplx(-10, 0), cplx(-30, 0), cplx(-100, 0)};
  }
  return {};
}

}  // namespace bakerlab
