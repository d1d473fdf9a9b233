#pragma once

#include <complex>
#include <cstdint>

namespace bakerlab {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Cayley transform D -> H, z -> i(1+z)/(1-z), and its inverse.
inline cplx cayley_disk_to_half(cplx z) {
  return cplx(0, 1) * (1.0 + z) / (1.0 - z);
}
inline cplx cayley_half_to_disk(cplx w) {
  return (w - cplx(0, 1)) / (w + cplx(0, 1));
}

// Boundary correspondence: turn t in [0,1) on the circle maps to the
// extended real x = -cot(pi t); t = 0 corresponds to infinity.
double turn_to_real(double t);
double real_to_turn(double x);

inline double wrap_turn(double t) {
  t -= static_cast<int64_t>(t);
  if (t < 0) t += 1.0;
  return t;
}

// cyclic distance on the circle, in turns
inline double turn_distance(double a, double b) {
  double d = wrap_turn(a - b);
  return d <= 0.5 ? d : 1.0 - d;
}

}  // namespace bakerlab
