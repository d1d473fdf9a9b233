#include "bakerlab/boundary.hpp"

#include <algorithm>
#include <cmath>

#include "bakerlab/error.hpp"

namespace bakerlab {

namespace {

// Pull one point back through the chain of branch endpoints; seeds follow
// the linearized prediction so the continuation stays on the chosen branch.
std::optional<cplx> pull_point(const EntireMapSpec& map, cplx x,
                               const std::vector<cplx>& chain, cplx base) {
  cplx prev_center = base;
  cplx cur = x;
  for (cplx e : chain) {
    cplx d = eval_derivative(map, e);
    cplx seed = std::abs(d) > 1e-8 ? e + (cur - prev_center) / d : e;
    cplx w;
    try {
      w = newton_preimage(map, cur, seed);
    } catch (const branch_error&) {
      return std::nullopt;
    }
    prev_center = e;
    cur = w;
  }
  return cur;
}

struct ChainCandidate {
  std::vector<cplx> endpoints;
  double margin = -1e300;
};

cplx forward_k(const EntireMapSpec& map, cplx z, int k, cplx* deriv) {
  cplx d = 1.0;
  for (int i = 0; i < k; ++i) {
    d *= eval_derivative(map, z);
    z = eval_map(map, z);
  }
  if (deriv) *deriv = d;
  return z;
}

}  // namespace

PeriodicPointResult find_periodic_point(const EntireMapSpec& map,
                                        const SingularData& sd,
                                        Disk target_region, int max_period,
                                        const SearchBudgets& budgets,
                                        const ProbeBudgets& probes) {
  if (dist_to_postsingular(sd, target_region.center) <=
      target_region.radius + sd.exclusion_radius)
    throw precondition_error("target region is not postsingular-free");
  if (max_period < 1) throw precondition_error("max_period >= 1 required");

  PeriodicPointResult best;
  best.note = "no contracting chain within budgets";

  std::vector<cplx> boundary;
  for (int i = 0; i < budgets.boundary_samples; ++i)
    boundary.push_back(target_region.center +
                       std::polar(target_region.radius,
                                  2 * kPi * i / budgets.boundary_samples));

  for (int period = 1; period <= max_period; ++period) {
    // enumerate branch chains of this length by breadth-first preimage scans
    std::vector<std::vector<cplx>> chains = {{}};
    for (int level = 0; level < period; ++level) {
      std::vector<std::vector<cplx>> next;
      for (const auto& c : chains) {
        cplx at = c.empty() ? target_region.center : c.back();
        for (cplx w :
             preimages_in_window(map, at, at, budgets.scan_half_width)) {
          auto ext = c;
          ext.push_back(w);
          next.push_back(std::move(ext));
        }
      }
      chains = std::move(next);
      if (chains.empty()) break;
    }

    for (const auto& chain : chains) {
      if (chain.size() != static_cast<size_t>(period)) continue;
      if (std::abs(chain.back() - target_region.center) > target_region.radius)
        continue;  // the pulled center must land inside the disk
      // strict containment of the pulled disk, checked on boundary samples
      double maxdist = 0;
      bool ok = true;
      for (cplx x : boundary) {
        auto w = pull_point(map, x, chain, target_region.center);
        if (!w) { ok = false; break; }
        maxdist = std::max(maxdist, std::abs(*w - target_region.center));
      }
      if (!ok) continue;
      double margin =
          (budgets.containment_factor * target_region.radius - maxdist) /
          target_region.radius;
      best.best_margin = std::max(best.best_margin, margin);
      if (margin <= 0) continue;

      // fixed-point iteration of the chain map
      cplx p = chain.back();
      bool converged = false;
      for (int it = 0; it < budgets.fixed_point_iters; ++it) {
        auto q = pull_point(map, p, chain, target_region.center);
        if (!q) break;
        double step = std::abs(*q - p);
        p = *q;
        if (step < budgets.fixed_point_tol) { converged = true; break; }
      }
      if (!converged) continue;

      // independent forward verification
      cplx deriv;
      cplx fp = forward_k(map, p, period, &deriv);
      double residual = std::abs(fp - p);
      if (residual >= 1e-9) continue;
      if (std::abs(deriv) <= 1.0) continue;  // boundary cycles must repel
      bool minimal = true;
      for (int d = 1; d < period; ++d) {
        if (period % d != 0) continue;
        if (std::abs(forward_k(map, p, d, nullptr) - p) < 1e-6) {
          minimal = false;
          break;
        }
      }
      if (!minimal) continue;

      PeriodicPointResult res;
      res.found = true;
      res.point = p;
      res.period = period;
      res.multiplier = deriv;
      res.residual = residual;
      res.boundary_witness = boundary_witness(map, p, probes);
      res.chain = chain_along(map, sd, target_region, chain);
      res.best_margin = margin;
      return res;
    }
  }
  return best;
}

CensusResult periodic_census(const EntireMapSpec& map, const SingularData& sd,
                             Rect region, int count, int max_period,
                             int grid_nx, int grid_ny,
                             const SearchBudgets& budgets,
                             const ProbeBudgets& probes) {
  CensusResult out;
  auto finish = [](CensusResult& r) {
    r.coverage = r.disks_probed > 0
                     ? static_cast<double>(r.disks_hit) / r.disks_probed
                     : 0.0;
    return r;
  };
  double dx = (region.re_hi - region.re_lo) / grid_nx;
  double dy = (region.im_hi - region.im_lo) / grid_ny;
  double radius = 0.6 * std::min(dx, dy);
  for (int i = 0; i < grid_nx; ++i) {
    for (int j = 0; j < grid_ny; ++j) {
      if (static_cast<int>(out.points.size()) >= count) return finish(out);
      Disk d{cplx(region.re_lo + (i + 0.5) * dx, region.im_lo + (j + 0.5) * dy),
             radius};
      if (dist_to_postsingular(sd, d.center) <= d.radius + sd.exclusion_radius)
        continue;  // skip disks that are not postsingular-free
      ++out.disks_probed;
      PeriodicPointResult r =
          find_periodic_point(map, sd, d, max_period, budgets, probes);
      if (!r.found) continue;
      ++out.disks_hit;
      bool dup = false;
      for (const auto& q : out.points)
        if (std::abs(q.point - r.point) < 1e-6) { dup = true; break; }
      if (!dup) out.points.push_back(std::move(r));
    }
  }
  return finish(out);
}

std::string tristate_name(TriState t) {
  switch (t) {
    case TriState::yes: return "yes";
    case TriState::no: return "no";
    case TriState::undecided: return "undecided";
  }
  return "?";
}

BoundaryOrbitClass classify_boundary_orbit(const EntireMapSpec& map, cplx x,
                                           int horizon,
                                           const OrbitClassBudgets& radii,
                                           const ProbeBudgets& probes) {
  if (boundary_witness(map, x, probes) > 1e-3)
    throw precondition_error(
        "classify_boundary_orbit expects a sample within 1e-3 of the Julia set");
  BoundaryOrbitClass out;
  out.start = x;

  std::vector<cplx> orbit = {x};
  cplx z = x;
  for (int k = 0; k < horizon; ++k) {
    try {
      z = eval_map(map, z);
    } catch (const overflow_error&) {
      out.overflowed = true;
      break;
    }
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      out.overflowed = true;
      break;
    }
    orbit.push_back(z);
  }
  out.steps = static_cast<int>(orbit.size()) - 1;

  size_t tail_start = (3 * orbit.size()) / 4;
  double tail_min = 1e300, tail_max = 0;
  for (size_t k = 0; k < orbit.size(); ++k) {
    double r = std::abs(orbit[k]);
    out.sup_radius = std::max(out.sup_radius, r);
    if (k >= tail_start) {
      tail_min = std::min(tail_min, r);
      tail_max = std::max(tail_max, r);
    }
  }
  out.tail_min_radius = tail_min;

  if (out.overflowed || tail_min >= radii.spherical_radius)
    out.dw_set_member = TriState::yes;
  else if (tail_max <= radii.bounded_radius)
    out.dw_set_member = TriState::no;

  // access coordinate per the map's predicate
  auto coord = [&](cplx w) {
    switch (map.baker_meta.access_predicate_id) {
      case AccessKind::re_plus: return w.real();
      case AccessKind::re_minus: return -w.real();
      case AccessKind::abs_im: return std::abs(w.imag());
    }
    return 0.0;
  };
  auto in_strip = [&](cplx w) {
    return map.baker_meta.access_predicate_id != AccessKind::re_plus ||
           map.baker_meta.absorbing_hint.im_half_width > 1e299 ||
           std::abs(w.imag()) < kPi;
  };
  bool monotone = orbit.size() >= 6;
  for (size_t k = std::max<size_t>(tail_start, 1); k < orbit.size(); ++k) {
    if (coord(orbit[k]) < coord(orbit[k - 1]) - 1e-12 || !in_strip(orbit[k]))
      monotone = false;
  }
  bool passed = !orbit.empty() && coord(orbit.back()) >= radii.access_threshold;
  if (monotone && passed && orbit.size() >= 6)
    out.caratheodory_member = TriState::yes;
  else if (out.dw_set_member == TriState::no)
    out.caratheodory_member = TriState::no;
  return out;
}

}  // namespace bakerlab
