#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bakerlab/types.hpp"

namespace bakerlab {

enum class FormulaKind {
  baker_abel,  // f(z) = z + e^{-z}
  fatou,       // f(z) = z + 1 + e^{-z}
  herman,      // f(z) = z + 2 pi i alpha + e^z
  bergweiler,  // f(z) = 2 - log 2 + 2z - e^z
  bargmann,    // f(z) = 2z - 3 + e^z
};

enum class BakerType { doubly_parabolic, hyperbolic, simply_parabolic };

enum class AccessKind {
  re_plus,   // Re f^n(x) -> +inf through the absorbing strip/half-plane
  re_minus,  // Re f^n(x) -> -inf
  abs_im,    // |Im f^n(x)| -> inf, monotone beyond a threshold
};

// Region the orbit of an interior point is known to reach and escape through.
struct AbsorbingHint {
  double re_lo = -1e300;
  double re_hi = 1e300;
  double im_half_width = 1e300;  // finite for the strip example
  bool contains(cplx z) const {
    return z.real() > re_lo && z.real() < re_hi &&
           std::abs(z.imag()) < im_half_width;
  }
};

struct BakerMeta {
  BakerType known_type;
  bool univalent;
  AbsorbingHint absorbing_hint;
  AccessKind access_predicate_id;
};

struct EntireMapSpec {
  std::string id;
  FormulaKind formula_kind;
  double alpha = 0.0;           // herman rotation parameter
  double overflow_guard = 700;  // |Re(exp argument)| bound
  BakerMeta baker_meta;
};

cplx eval_map(const EntireMapSpec& spec, cplx z);
cplx eval_derivative(const EntireMapSpec& spec, cplx z);

// throws catalog_error for unknown ids; known ids: baker_abel, fatou,
// herman, bergweiler, bargmann
const EntireMapSpec& get_map(const std::string& id);
EntireMapSpec get_map_with_alpha(const std::string& id, double alpha);
std::vector<std::string> map_ids();
std::string formula_text(FormulaKind k);
std::string baker_type_name(BakerType t);

enum class InnerKind {
  blaschke_baker,      // g(z) = (3z^2+1)/(3+z^2) on D
  fatou_inner,         // g(z) = z - cot(z)/2 on H
  moebius_hyperbolic,  // T(z) = lambda z on H, lambda > 1
  moebius_parabolic,   // T(z) = z +- 1 on H
};

enum class Model { unit_disk, upper_half_plane };
enum class CowenType { doubly_parabolic, hyperbolic, simply_parabolic };

struct InnerFunctionSpec {
  std::string id;
  InnerKind formula_kind;
  Model domain_model;
  // Denjoy-Wolff point: angle in turns for the disk; for the half-plane
  // models it is infinity (dw_at_infinity).
  double dw_turn = 0.0;
  bool dw_at_infinity = false;
  CowenType cowen_type;
  std::vector<double> singular_turns;  // boundary singularities, disk side
  bool singular_at_infinity = false;
  double lambda = 2.0;  // moebius_hyperbolic dilation factor
  double shift = 1.0;   // moebius_parabolic translation, +-1
};

cplx eval_inner(const InnerFunctionSpec& spec, cplx z);
cplx eval_inner_derivative(const InnerFunctionSpec& spec, cplx z);

const InnerFunctionSpec& get_inner(const std::string& id);
InnerFunctionSpec make_moebius_hyperbolic(double lambda);
InnerFunctionSpec make_moebius_parabolic(double shift);
std::vector<std::string> inner_ids();

}  // namespace bakerlab
