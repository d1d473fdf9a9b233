#include "bakerlab/dimension.hpp"

#include <algorithm>
#include <cmath>

#include "bakerlab/error.hpp"

namespace bakerlab {

double moran_exponent(double b1, double b2) {
  if (!(b1 > 0 && b1 < 1 && b2 > 0 && b2 < 1))
    throw precondition_error("moran exponent needs b1, b2 in (0,1)");
  if (b1 == b2) return std::log(2.0) / std::log(1.0 / b1);
  auto phi = [&](double s) { return std::pow(b1, s) + std::pow(b2, s) - 1.0; };
  double lo = 0.0, hi = 1.0;
  while (phi(hi) > 0) hi *= 2;  // phi is strictly decreasing, phi(0) = 1
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    double mid = 0.5 * (lo + hi);
    (phi(mid) > 0 ? lo : hi) = mid;
  }
  double s = 0.5 * (lo + hi);
  for (int it = 0; it < 4; ++it) {  // Newton polish
    double f = phi(s);
    double df = std::pow(b1, s) * std::log(b1) + std::pow(b2, s) * std::log(b2);
    if (df == 0) break;
    s -= f / df;
  }
  return s;
}

DimensionBound ifs_bound_from_contractions(
    const std::function<cplx(cplx)>& phi1, const std::function<cplx(cplx)>& phi2,
    Disk base, int boundary_points, int pairs) {
  std::vector<cplx> xs(boundary_points);
  for (int i = 0; i < boundary_points; ++i)
    xs[i] = base.center + std::polar(base.radius, 2 * kPi * i / boundary_points);

  std::vector<cplx> im1(boundary_points), im2(boundary_points);
  for (int i = 0; i < boundary_points; ++i) {
    im1[i] = phi1(xs[i]);
    im2[i] = phi2(xs[i]);
  }

  auto hull = [&](const std::vector<cplx>& im, cplx& center, double& radius) {
    center = 0;
    for (cplx w : im) center += w;
    center /= static_cast<double>(im.size());
    radius = 0;
    for (cplx w : im) radius = std::max(radius, std::abs(w - center));
  };
  cplx c1, c2;
  double r1, r2;
  hull(im1, c1, r1);
  hull(im2, c2, r2);

  DimensionBound out;
  out.containment_margin1 = base.radius - (std::abs(c1 - base.center) + r1);
  out.containment_margin2 = base.radius - (std::abs(c2 - base.center) + r2);
  out.disjointness_margin = std::abs(c1 - c2) - (r1 + r2);
  if (out.containment_margin1 <= 0)
    throw precondition_error("first contraction image is not inside the base disk");
  if (out.containment_margin2 <= 0)
    throw precondition_error("second contraction image is not inside the base disk");
  if (out.disjointness_margin <= 0)
    throw precondition_error("contraction images overlap");

  auto lower_lipschitz = [&](const std::function<cplx(cplx)>& phi,
                             const std::vector<cplx>& im) {
    double b = 1e300;
    int n = boundary_points, counted = 0;
    for (int d = 1; d < n && counted < pairs; ++d) {
      for (int i = 0; i < n && counted < pairs; ++i) {
        int j = (i + d) % n;
        double num = std::abs(im[i] - im[j]);
        double den = std::abs(xs[i] - xs[j]);
        if (den > 0) {
          b = std::min(b, num / den);
          ++counted;
        }
      }
    }
    (void)phi;
    return 0.9 * b;  // sampling is optimistic; shrink before reporting
  };
  out.b1 = lower_lipschitz(phi1, im1);
  out.b2 = lower_lipschitz(phi2, im2);
  if (!(out.b1 > 0 && out.b1 < 1 && out.b2 > 0 && out.b2 < 1))
    throw precondition_error("bi-Lipschitz estimates left (0,1)");
  out.s = moran_exponent(out.b1, out.b2);
  if (out.s > 2.0) {
    out.s = 2.0;
    out.capped = true;
  }
  return out;
}

DimensionBound ifs_lower_bound(const EntireMapSpec& map, const SingularData& sd,
                               const BranchChain& chain1,
                               const BranchChain& chain2) {
  if (!chain1.valid || !chain2.valid)
    throw precondition_error("both chains must be valid");
  if (std::abs(chain1.base.center - chain2.base.center) > 1e-12 ||
      std::abs(chain1.base.radius - chain2.base.radius) > 1e-12)
    throw precondition_error("chains must share the base disk");
  auto apply_chain = [&](const BranchChain& ch) {
    return [&map, &ch](cplx x) {
      cplx prev = ch.base.center;
      cplx cur = x;
      for (cplx e : ch.endpoints) {
        cplx d = eval_derivative(map, e);
        cplx seed = std::abs(d) > 1e-8 ? e + (cur - prev) / d : e;
        cur = newton_preimage(map, cur, seed);
        prev = e;
      }
      return cur;
    };
  };
  (void)sd;
  return ifs_bound_from_contractions(apply_chain(chain1), apply_chain(chain2),
                                     chain1.base);
}

}  // namespace bakerlab
