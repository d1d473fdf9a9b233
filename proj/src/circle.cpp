#include "bakerlab/circle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "bakerlab/error.hpp"
#include "bakerlab/parallel.hpp"
#include "bakerlab/rng.hpp"

namespace bakerlab {

namespace {

double wrap_to_half(double d) {
  d = wrap_turn(d);
  return d <= 0.5 ? d : d - 1.0;
}

// circle self-map in turns for disk-model inners
double circle_step(const InnerFunctionSpec& s, double t) {
  cplx w = eval_inner(s, std::polar(1.0, 2 * kPi * t));
  return wrap_turn(std::arg(w) / (2 * kPi));
}

bool is_dw(const InnerFunctionSpec& s, const BoundaryPoint& p) {
  if (s.dw_at_infinity) return p.at_infinity;
  return p.model == Model::unit_disk && turn_distance(p.coordinate, s.dw_turn) < 1e-15;
}

struct StepResult {
  BoundaryPoint p;
  bool pole = false;
};

StepResult boundary_step(const InnerFunctionSpec& s, const BoundaryPoint& p) {
  switch (s.formula_kind) {
    case InnerKind::blaschke_baker:
      return {BoundaryPoint::disk(circle_step(s, p.coordinate)), false};
    case InnerKind::fatou_inner: {
      if (p.at_infinity) return {p, false};  // Denjoy-Wolff point
      double x = p.coordinate;
      double sx = std::sin(x);
      if (std::abs(sx) < 1e-12) return {p, true};
      return {BoundaryPoint::half_plane(x - 0.5 * std::cos(x) / sx), false};
    }
    case InnerKind::moebius_hyperbolic:
      if (p.at_infinity) return {p, false};
      return {BoundaryPoint::half_plane(s.lambda * p.coordinate), false};
    case InnerKind::moebius_parabolic:
      if (p.at_infinity) return {p, false};
      return {BoundaryPoint::half_plane(p.coordinate + s.shift), false};
  }
  throw error("unreachable inner kind");
}

Model native_model(const InnerFunctionSpec& s) { return s.domain_model; }

bool near_dw(const InnerFunctionSpec& s, const BoundaryPoint& p, double arc_eps) {
  if (s.dw_at_infinity) {
    // spherical proxy at the half-plane boundary point at infinity
    return p.at_infinity || std::abs(p.coordinate) > 1.0 / arc_eps;
  }
  if (p.at_infinity) return false;
  cplx a = std::polar(1.0, 2 * kPi * p.coordinate);
  cplx b = std::polar(1.0, 2 * kPi * s.dw_turn);
  return std::abs(a - b) < arc_eps;  // chord metric on the circle
}

}  // namespace

BoundaryPoint convert(const BoundaryPoint& p, Model target) {
  if (p.model == target) return p;
  if (target == Model::upper_half_plane) {
    if (turn_distance(p.coordinate, 0.0) < 1e-300 || p.at_infinity)
      return BoundaryPoint::infinity();
    return BoundaryPoint::half_plane(turn_to_real(p.coordinate));
  }
  if (p.at_infinity) return BoundaryPoint::disk(0.0);
  return BoundaryPoint::disk(real_to_turn(p.coordinate));
}

MeasureEstimate bernoulli_estimate(long hits, long samples, long iterations) {
  MeasureEstimate m;
  m.samples = samples;
  m.iterations = iterations;
  m.value = samples > 0 ? static_cast<double>(hits) / samples : 0.0;
  m.stderr_ = samples > 0 ? std::sqrt(m.value * (1 - m.value) / samples) : 0.0;
  return m;
}

CircleOrbit iterate_circle(const InnerFunctionSpec& inner, BoundaryPoint p0,
                           int n) {
  CircleOrbit orbit;
  BoundaryPoint p = convert(p0, native_model(inner));
  orbit.points.push_back(p);
  for (int k = 0; k < n; ++k) {
    StepResult r = boundary_step(inner, p);
    if (r.pole) {
      orbit.pole_hit = true;
      return orbit;
    }
    p = r.p;
    orbit.points.push_back(p);
  }
  return orbit;
}

ConvergenceStat dw_convergence_fraction(const InnerFunctionSpec& inner,
                                        long samples, int n, double arc_eps,
                                        uint64_t seed, unsigned threads) {
  if (samples < 1) throw precondition_error("samples >= 1 required");
  std::atomic<long> hits{0}, poles{0};
  parallel_for(static_cast<size_t>(samples), threads, [&](size_t i) {
    BoundaryPoint p = convert(BoundaryPoint::disk(counter_uniform(seed, i)),
                              native_model(inner));
    for (int k = 0; k < n; ++k) {
      StepResult r = boundary_step(inner, p);
      if (r.pole) {
        poles.fetch_add(1, std::memory_order_relaxed);
        return;
      }
      p = r.p;
    }
    if (near_dw(inner, p, arc_eps)) hits.fetch_add(1, std::memory_order_relaxed);
  });
  ConvergenceStat st;
  st.estimate = bernoulli_estimate(hits.load(), samples, n);
  st.pole_hits = poles.load();
  return st;
}

ConvergenceStat recurrence_fraction(const InnerFunctionSpec& inner, Arc arc,
                                    long samples, int n, uint64_t seed,
                                    unsigned threads) {
  if (!(arc.hi > arc.lo)) throw precondition_error("arc must have positive length");
  if (native_model(inner) == Model::unit_disk) {
    if (arc.lo < 0 || arc.hi > 1)
      throw precondition_error("disk arc must lie within [0,1) turns");
    if (inner.dw_turn >= arc.lo && inner.dw_turn <= arc.hi)
      throw precondition_error("arc must exclude the Denjoy-Wolff point");
  }
  std::atomic<long> hits{0}, poles{0};
  parallel_for(static_cast<size_t>(samples), threads, [&](size_t i) {
    double u = counter_uniform(seed, i);
    double x0 = arc.lo + u * (arc.hi - arc.lo);
    BoundaryPoint p = native_model(inner) == Model::unit_disk
                          ? BoundaryPoint::disk(x0)
                          : BoundaryPoint::half_plane(x0);
    for (int k = 1; k <= n; ++k) {
      StepResult r = boundary_step(inner, p);
      if (r.pole) {
        poles.fetch_add(1, std::memory_order_relaxed);
        return;
      }
      p = r.p;
      if (!p.at_infinity && p.coordinate >= arc.lo && p.coordinate <= arc.hi) {
        hits.fetch_add(1, std::memory_order_relaxed);
        return;
      }
    }
  });
  ConvergenceStat st;
  st.estimate = bernoulli_estimate(hits.load(), samples, n);
  st.pole_hits = poles.load();
  return st;
}

std::pair<MeasureEstimate, MeasureEstimate> invariant_halves_measure(
    const InnerFunctionSpec& inner, long samples, uint64_t seed) {
  if (inner.formula_kind != InnerKind::moebius_hyperbolic)
    throw precondition_error("invariant halves require the hyperbolic half-plane model");
  if (!(inner.lambda > 1.0))
    throw precondition_error("moebius_hyperbolic requires lambda > 1");
  long pos = 0, neg = 0;
  for (long i = 0; i < samples; ++i) {
    double x = turn_to_real(counter_uniform(seed, static_cast<uint64_t>(i)));
    if (x > 0) ++pos;
    else if (x < 0) ++neg;
  }
  return {bernoulli_estimate(pos, samples, 0), bernoulli_estimate(neg, samples, 0)};
}

namespace {

// Preimages of one boundary target under a disk-model inner function:
// bracketing on a fixed grid of the (monotone, degree-d) boundary lift,
// bisection refined in turn coordinates.
std::vector<double> disk_preimages(const InnerFunctionSpec& s, double target,
                                   const std::vector<double>& grid_vals,
                                   int grid_n) {
  std::vector<double> roots;
  auto diff = [&](double w) { return wrap_to_half(w - target); };
  for (int i = 0; i < grid_n; ++i) {
    double d0 = diff(grid_vals[i]);
    double d1 = diff(grid_vals[i + 1]);
    if (std::abs(d0) + std::abs(d1) >= 0.5) continue;  // aliasing guard
    if (d0 == 0.0) {
      roots.push_back(static_cast<double>(i) / grid_n);
      continue;
    }
    if ((d0 < 0) == (d1 < 0)) continue;
    double lo = static_cast<double>(i) / grid_n;
    double hi = static_cast<double>(i + 1) / grid_n;
    double dlo = d0;
    for (int it = 0; it < 60 && hi - lo > 1e-13; ++it) {
      double mid = 0.5 * (lo + hi);
      double dm = diff(circle_step(s, mid));
      if (dm == 0.0) { lo = hi = mid; break; }
      if ((dm < 0) == (dlo < 0)) { lo = mid; dlo = dm; }
      else hi = mid;
    }
    roots.push_back(0.5 * (lo + hi));
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](double a, double b) { return turn_distance(a, b) < 1e-11; }),
              roots.end());
  return roots;
}

// One solution of g(x) = target in each pole interval (k pi, (k+1) pi) of
// the fatou_inner boundary map; g is strictly increasing there.
std::vector<double> line_preimages_fatou(const InnerFunctionSpec& s,
                                         double target, int k_lo, int k_hi) {
  std::vector<double> roots;
  auto g = [&](double x) { return x - 0.5 * std::cos(x) / std::sin(x); };
  (void)s;
  for (int k = k_lo; k <= k_hi; ++k) {
    double a = k * kPi, b = (k + 1) * kPi;
    double pad = 1e-9 * std::max(1.0, std::abs(a));
    double lo = a + pad, hi = b - pad;
    if (g(lo) > target || g(hi) < target) continue;  // target beyond the padding
    for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, std::abs(lo)); ++it) {
      double mid = 0.5 * (lo + hi);
      if (g(mid) < target) lo = mid;
      else hi = mid;
    }
    roots.push_back(0.5 * (lo + hi));
  }
  return roots;
}

}  // namespace

PreimageTree preimage_tree(const InnerFunctionSpec& inner, BoundaryPoint target,
                           int depth, long budget) {
  BoundaryPoint t0 = convert(target, native_model(inner));
  if (is_dw(inner, t0))
    throw precondition_error("preimage tree target must not be the Denjoy-Wolff point");
  PreimageTree tree;
  tree.points.push_back(t0);
  if (depth <= 0) return tree;

  constexpr int kGridN = 4096;
  std::vector<double> grid_vals;
  if (inner.formula_kind == InnerKind::blaschke_baker) {
    grid_vals.resize(kGridN + 1);
    for (int i = 0; i <= kGridN; ++i)
      grid_vals[i] = circle_step(inner, static_cast<double>(i) / kGridN);
  }

  std::vector<BoundaryPoint> level = {t0};
  for (int d = 0; d < depth; ++d) {
    std::vector<BoundaryPoint> next;
    for (const auto& p : level) {
      std::vector<double> pre;
      switch (inner.formula_kind) {
        case InnerKind::blaschke_baker:
          pre = disk_preimages(inner, p.coordinate, grid_vals, kGridN);
          break;
        case InnerKind::fatou_inner:
          pre = line_preimages_fatou(inner, p.coordinate, -32, 31);
          break;
        case InnerKind::moebius_hyperbolic:
          pre = {p.coordinate / inner.lambda};
          break;
        case InnerKind::moebius_parabolic:
          pre = {p.coordinate - inner.shift};
          break;
      }
      for (double x : pre) {
        if (static_cast<long>(tree.points.size()) >= budget) {
          tree.budget_exhausted = true;
          return tree;
        }
        BoundaryPoint q = native_model(inner) == Model::unit_disk
                              ? BoundaryPoint::disk(x)
                              : BoundaryPoint::half_plane(x);
        next.push_back(q);
        tree.points.push_back(q);
      }
    }
    level = std::move(next);
    if (level.empty()) break;
  }
  return tree;
}

double max_gap_turns(const std::vector<BoundaryPoint>& pts) {
  std::vector<double> turns;
  turns.reserve(pts.size());
  for (const auto& p : pts)
    turns.push_back(p.model == Model::unit_disk
                        ? p.coordinate
                        : convert(p, Model::unit_disk).coordinate);
  if (turns.empty()) return 1.0;
  std::sort(turns.begin(), turns.end());
  double gap = turns.front() + 1.0 - turns.back();
  for (size_t i = 1; i < turns.size(); ++i)
    gap = std::max(gap, turns[i] - turns[i - 1]);
  return gap;
}

}  // namespace bakerlab
