#include "bakerlab/branches.hpp"

#include <algorithm>
#include <cmath>

#include "bakerlab/error.hpp"

namespace bakerlab {

cplx newton_preimage(const EntireMapSpec& map, cplx target, cplx seed,
                     double tol) {
  cplx w = seed;
  for (int it = 0; it < 100; ++it) {
    cplx fw, dw;
    try {
      fw = eval_map(map, w);
      dw = eval_derivative(map, w);
    } catch (const overflow_error&) {
      throw branch_error("evaluation overflow during newton run");
    }
    if (std::abs(fw - target) < tol) return w;
    if (std::abs(dw) < 1e-8)
      throw branch_error("derivative underflow near a critical point");
    cplx step = (fw - target) / dw;
    double m = std::abs(step);
    if (m > 10.0) step *= 10.0 / m;
    w -= step;
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
      throw branch_error("newton iterate left the finite plane");
  }
  throw branch_error("newton did not converge in 100 steps");
}

std::vector<cplx> preimages_in_window(const EntireMapSpec& map, cplx target,
                                      cplx center, double half_width,
                                      double tol) {
  std::vector<cplx> sols;
  for (int i = 0; i < 32; ++i) {
    for (int j = 0; j < 32; ++j) {
      cplx seed = center + cplx(((i + 0.5) / 32.0 * 2 - 1) * half_width,
                                ((j + 0.5) / 32.0 * 2 - 1) * half_width);
      cplx w;
      try {
        w = newton_preimage(map, target, seed, tol);
      } catch (const branch_error&) {
        continue;
      }
      if (std::abs(w.real() - center.real()) > 1.2 * half_width ||
          std::abs(w.imag() - center.imag()) > 1.2 * half_width)
        continue;
      bool dup = false;
      for (cplx s : sols)
        if (std::abs(w - s) < 1e-7) { dup = true; break; }
      if (!dup) sols.push_back(w);
    }
  }
  std::sort(sols.begin(), sols.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return sols;
}

std::vector<cplx> lift_path(const EntireMapSpec& map, const SingularData& sd,
                            const std::vector<cplx>& path, cplx w_start,
                            const LiftControl& ctrl) {
  if (path.empty()) throw precondition_error("empty path");
  {
    cplx f0;
    try {
      f0 = eval_map(map, w_start);
    } catch (const overflow_error&) {
      throw precondition_error("w_start overflows the map");
    }
    if (std::abs(f0 - path.front()) > std::max(ctrl.tol * 10, 1e-8))
      throw precondition_error("f(w_start) does not match the path start");
  }
  std::vector<cplx> lifted = {w_start};
  cplx w = w_start;
  size_t segs = path.size() - 1;
  for (size_t k = 0; k < segs; ++k) {
    cplx a = path[k], b = path[k + 1];
    double s = 0.0, h = 0.25;
    cplx t_now = a;
    while (s < 1.0) {
      h = std::min(h, 1.0 - s);
      cplx t_next = a + (s + h) * (b - a);
      if (ctrl.check_critical_values &&
          dist_to_critical_values(sd, t_next) < sd.exclusion_radius) {
        throw obstruction_error("path enters the critical-value exclusion zone",
                                (k + s + h) / segs);
      }
      bool ok = false;
      cplx w2;
      try {
        w2 = newton_preimage(map, t_next, w, ctrl.tol);
        double dw = std::abs(eval_derivative(map, w2));
        double pred = 4.0 * std::abs(t_next - t_now) /
                          std::max(std::abs(eval_derivative(map, w)), 1e-300) +
                      1e-12;
        ok = dw >= 1e-8 && std::abs(w2 - w) <= std::min(ctrl.max_jump, pred);
      } catch (const branch_error&) {
        ok = false;
      } catch (const overflow_error&) {
        ok = false;
      }
      if (ok) {
        w = w2;
        t_now = t_next;
        s += h;
        h = std::min(h * 2, 0.25);
      } else {
        h /= 2;
        if (h < ctrl.min_step)
          throw obstruction_error("step halving underflow (monodromy obstruction)",
                                  (k + s) / segs);
      }
    }
    lifted.push_back(w);
  }
  return lifted;
}

namespace {

// per-step quasi-hyperbolic contraction estimate and exclusion-zone check
void push_step(const EntireMapSpec& map, const SingularData& sd,
               BranchChain& ch, cplx next, double& radius) {
  double gap_prev = dist_to_postsingular(sd, ch.endpoints.empty()
                                                 ? ch.base.center
                                                 : ch.endpoints.back());
  double gap_next = dist_to_postsingular(sd, next);
  double dmod = std::abs(eval_derivative(map, next));
  double step = (1.0 / dmod) * (gap_prev / gap_next);
  radius *= (1.0 / dmod) * 1.5;  // pulled-disk radius with distortion slack
  ch.endpoints.push_back(next);
  ch.per_step.push_back(step);
  ch.cumulative *= step;
  if (gap_next - radius <= sd.exclusion_radius) {
    ch.valid = false;
    ch.reason = "pullback meets the postsingular exclusion zone";
  }
}

void enforce_schwarz_pick(BranchChain& ch) {
  if (ch.valid && ch.cumulative > 1.0 + 1e-9) {
    ch.valid = false;
    ch.reason = "cumulative estimate exceeds the Schwarz-Pick bound";
  }
}

}  // namespace

BranchChain chain_contraction(const EntireMapSpec& map, const SingularData& sd,
                              Disk base, int n, ChoiceRule rule,
                              double scan_half_width) {
  (void)rule;  // single rule for now
  if (dist_to_postsingular(sd, base.center) <= base.radius + sd.exclusion_radius)
    throw precondition_error(
        "base disk overlaps the postsingular exclusion neighborhoods");
  BranchChain ch;
  ch.base = base;
  double radius = base.radius;
  cplx c = base.center;
  for (int k = 0; k < n && ch.valid; ++k) {
    auto pre = preimages_in_window(map, c, c, scan_half_width);
    if (pre.empty()) {
      ch.valid = false;
      ch.reason = "branch failure: no preimage in the scan window";
      break;
    }
    cplx pick = pre.front();
    for (cplx w : pre)
      if (std::abs(w - c) < std::abs(pick - c)) pick = w;
    push_step(map, sd, ch, pick, radius);
    c = pick;
  }
  enforce_schwarz_pick(ch);
  return ch;
}

BranchChain chain_along(const EntireMapSpec& map, const SingularData& sd,
                        Disk base, const std::vector<cplx>& endpoints) {
  if (dist_to_postsingular(sd, base.center) <= base.radius + sd.exclusion_radius)
    throw precondition_error(
        "base disk overlaps the postsingular exclusion neighborhoods");
  BranchChain ch;
  ch.base = base;
  double radius = base.radius;
  for (cplx e : endpoints) {
    push_step(map, sd, ch, e, radius);
    if (!ch.valid) break;
  }
  enforce_schwarz_pick(ch);
  return ch;
}

namespace {

// finite postsingular samples of the fatou_inner model: forward orbits of
// the critical values k pi + i (y_c + coth(y_c)/2)
std::vector<cplx> fatou_inner_postsingular(const InnerFunctionSpec& inner,
                                           int k_range, int depth) {
  std::vector<cplx> out;
  double yc = std::asinh(1.0 / std::sqrt(2.0));
  double iv = yc + 0.5 / std::tanh(yc);
  for (int k = -k_range; k <= k_range; ++k) {
    cplx z(k * kPi, iv);
    for (int n = 0; n < depth; ++n) {
      out.push_back(z);
      if (std::abs(z) > 1e8) break;
      try {
        z = eval_inner(inner, z);
      } catch (const pole_error&) {
        break;
      }
    }
  }
  return out;
}

cplx inner_newton(const InnerFunctionSpec& inner, cplx target, cplx seed,
                  double tol = 1e-12) {
  cplx w = seed;
  for (int it = 0; it < 100; ++it) {
    cplx fw, dw;
    try {
      fw = eval_inner(inner, w);
      dw = eval_inner_derivative(inner, w);
    } catch (const pole_error&) {
      throw branch_error("pole during inner newton run");
    }
    if (std::abs(fw - target) < tol) return w;
    if (std::abs(dw) < 1e-8) throw branch_error("derivative underflow");
    cplx step = (fw - target) / dw;
    double m = std::abs(step);
    if (m > 2.0) step *= 2.0 / m;
    w -= step;
  }
  throw branch_error("inner newton did not converge");
}

}  // namespace

StolzReport stolz_containment(const InnerFunctionSpec& inner, double x,
                              double rho, double alpha, int n, int samples) {
  if (inner.domain_model != Model::upper_half_plane)
    throw precondition_error("stolz containment needs a half-plane model");
  if (!(alpha > 0 && alpha < kPi / 2) || !(rho > 0))
    throw precondition_error("need alpha in (0, pi/2) and rho > 0");
  if (inner.formula_kind == InnerKind::fatou_inner) {
    if (std::abs(std::sin(x)) < 1e-6)
      throw precondition_error("x too close to a cot pole");
    auto ps = fatou_inner_postsingular(inner, 8, 20);
    for (cplx p : ps)
      if (std::abs(p - cplx(x, 0)) <= rho)
        throw precondition_error("no postsingular-free disk of height rho at x");
  }
  StolzReport rep;
  rep.samples = samples;
  if (n == 0) {
    // the radial segment is the angle's axis
    rep.pass = true;
    rep.worst_ratio = 0;
    for (int j = 0; j < samples; ++j) {
      double t = rho * (j + 1) / (samples + 1);
      rep.worst_ratio = std::max(rep.worst_ratio, t / rho);
    }
    return rep;
  }
  std::vector<cplx> pts(samples);
  for (int j = 0; j < samples; ++j) pts[j] = cplx(x, rho * (j + 1) / (samples + 1));
  cplx base(x, 0);
  try {
    for (int level = 0; level < n; ++level) {
      cplx base_img = inner_newton(inner, base, base);
      cplx seed = base_img;
      for (auto& p : pts) {
        cplx w = inner_newton(inner, p, seed);
        seed = w;
        p = w;
      }
      base = base_img;
    }
  } catch (const branch_error&) {
    rep.inconclusive = true;
    return rep;
  }
  StolzRegion region{base.real(), rho, alpha};
  rep.pass = true;
  for (cplx w : pts) {
    if (w.imag() <= 0) {
      rep.pass = false;
      rep.worst_ratio = std::numeric_limits<double>::infinity();
      continue;
    }
    double r1 = (std::abs(w.real() - base.real()) / w.imag()) / alpha;
    double r2 = w.imag() / rho;
    rep.worst_ratio = std::max({rep.worst_ratio, r1, r2});
    if (!region.contains(w)) rep.pass = false;
  }
  return rep;
}

double stolz_rho_search(const InnerFunctionSpec& inner, double x, double rho0,
                        double alpha, int n, int samples, double floor) {
  for (double rho = rho0; rho >= floor; rho /= 2) {
    StolzReport r;
    try {
      r = stolz_containment(inner, x, rho, alpha, n, samples);
    } catch (const precondition_error&) {
      continue;  // shrink until the postsingular-free disk fits
    }
    if (r.pass) return rho;
  }
  return 0.0;
}

}  // namespace bakerlab
