#pragma once

#include <cstdint>
#include <vector>

#include "bakerlab/catalog.hpp"

namespace bakerlab {

// Boundary point of the model domain. For the disk the coordinate is the
// angle in turns in [0,1); for the half-plane it is a point of R u {inf}.
struct BoundaryPoint {
  Model model = Model::unit_disk;
  double coordinate = 0.0;
  bool at_infinity = false;

  static BoundaryPoint disk(double turn) {
    return {Model::unit_disk, wrap_turn(turn), false};
  }
  static BoundaryPoint half_plane(double x) {
    return {Model::upper_half_plane, x, false};
  }
  static BoundaryPoint infinity() {
    return {Model::upper_half_plane, 0.0, true};
  }
};

BoundaryPoint convert(const BoundaryPoint& p, Model target);

struct MeasureEstimate {
  double value = 0;
  double stderr_ = 0;
  long samples = 0;
  long iterations = 0;
};

MeasureEstimate bernoulli_estimate(long hits, long samples, long iterations);

struct CircleOrbit {
  std::vector<BoundaryPoint> points;
  bool pole_hit = false;  // orbit truncated at a cot pole
};

CircleOrbit iterate_circle(const InnerFunctionSpec& inner, BoundaryPoint p0,
                           int n);

struct ConvergenceStat {
  MeasureEstimate estimate;
  long pole_hits = 0;  // counted as non-convergent, reported separately
};

// fraction of uniform random boundary starts whose n-th iterate lies within
// boundary distance arc_eps of the Denjoy-Wolff point (chord metric on the
// circle; |x| > 1/arc_eps for the half-plane point at infinity)
ConvergenceStat dw_convergence_fraction(const InnerFunctionSpec& inner,
                                        long samples, int n, double arc_eps,
                                        uint64_t seed, unsigned threads = 0);

struct Arc {
  double lo = 0, hi = 0;  // turns for the disk, plain reals for the half-plane
};

ConvergenceStat recurrence_fraction(const InnerFunctionSpec& inner, Arc arc,
                                    long samples, int n, uint64_t seed,
                                    unsigned threads = 0);

// Monte Carlo lambda-measures (disk pullback) of the T-invariant half-lines
// {x>0} and {x<0} of the hyperbolic half-plane model
std::pair<MeasureEstimate, MeasureEstimate> invariant_halves_measure(
    const InnerFunctionSpec& inner, long samples, uint64_t seed);

struct PreimageTree {
  std::vector<BoundaryPoint> points;  // all depths <= requested, target included
  bool budget_exhausted = false;
};

PreimageTree preimage_tree(const InnerFunctionSpec& inner, BoundaryPoint target,
                           int depth, long budget);

// largest cyclic gap between consecutive tree points, in turns
double max_gap_turns(const std::vector<BoundaryPoint>& pts);

}  // namespace bakerlab
