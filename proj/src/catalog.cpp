#include "bakerlab/catalog.hpp"

#include <cmath>
#include <sstream>

#include "bakerlab/error.hpp"

namespace bakerlab {

namespace {

constexpr double kGoldenMean = 0.61803398874989484820;  // (sqrt 5 - 1)/2

// e^w with the spec's guard on Re w
cplx guarded_exp(cplx w, double guard, cplx at) {
  if (std::abs(w.real()) > guard) {
    if (w.real() > guard)
      throw overflow_error("exp overflow in map evaluation", at);
    return cplx(0, 0);  // underflow is harmless
  }
  return std::exp(w);
}

EntireMapSpec make_map_spec(FormulaKind k) {
  EntireMapSpec s;
  s.formula_kind = k;
  switch (k) {
    case FormulaKind::baker_abel:
      s.id = "baker_abel";
      s.baker_meta = {BakerType::doubly_parabolic, false,
                      {2.0, 1e300, 2.8}, AccessKind::re_plus};
      break;
    case FormulaKind::fatou:
      s.id = "fatou";
      s.baker_meta = {BakerType::doubly_parabolic, false,
                      {1.0, 1e300, 1e300}, AccessKind::re_plus};
      break;
    case FormulaKind::herman:
      s.id = "herman";
      s.alpha = kGoldenMean;
      s.baker_meta = {BakerType::simply_parabolic, true,
                      {-1e300, -3.0, 1e300}, AccessKind::re_minus};
      break;
    case FormulaKind::bergweiler:
      s.id = "bergweiler";
      s.baker_meta = {BakerType::hyperbolic, true,
                      {-1e300, -3.0, 1e300}, AccessKind::re_minus};
      break;
    case FormulaKind::bargmann:
      s.id = "bargmann";
      s.baker_meta = {BakerType::hyperbolic, false,
                      {-1e300, -3.0, 1e300}, AccessKind::abs_im};
      break;
  }
  return s;
}

const std::vector<EntireMapSpec>& map_table() {
  static const std::vector<EntireMapSpec> t = {
      make_map_spec(FormulaKind::baker_abel), make_map_spec(FormulaKind::fatou),
      make_map_spec(FormulaKind::herman), make_map_spec(FormulaKind::bergweiler),
      make_map_spec(FormulaKind::bargmann)};
  return t;
}

InnerFunctionSpec make_inner_spec(InnerKind k) {
  InnerFunctionSpec s;
  s.formula_kind = k;
  switch (k) {
    case InnerKind::blaschke_baker:
      s.id = "blaschke_baker";
      s.domain_model = Model::unit_disk;
      s.dw_turn = 0.0;
      s.cowen_type = CowenType::doubly_parabolic;
      break;
    case InnerKind::fatou_inner:
      s.id = "fatou_inner";
      s.domain_model = Model::upper_half_plane;
      s.dw_at_infinity = true;
      s.cowen_type = CowenType::doubly_parabolic;
      s.singular_at_infinity = true;
      break;
    case InnerKind::moebius_hyperbolic:
      s.id = "moebius_hyperbolic";
      s.domain_model = Model::upper_half_plane;
      s.dw_at_infinity = true;
      s.cowen_type = CowenType::hyperbolic;
      s.lambda = 2.0;
      break;
    case InnerKind::moebius_parabolic:
      s.id = "moebius_parabolic";
      s.domain_model = Model::upper_half_plane;
      s.dw_at_infinity = true;
      s.cowen_type = CowenType::simply_parabolic;
      s.shift = 1.0;
      break;
  }
  return s;
}

const std::vector<InnerFunctionSpec>& inner_table() {
  static const std::vector<InnerFunctionSpec> t = {
      make_inner_spec(InnerKind::blaschke_baker),
      make_inner_spec(InnerKind::fatou_inner),
      make_inner_spec(InnerKind::moebius_hyperbolic),
      make_inner_spec(InnerKind::moebius_parabolic)};
  return t;
}

}  // namespace

double turn_to_real(double t) {
  return -1.0 / std::tan(kPi * t);
}

double real_to_turn(double x) {
  // inverse of -cot(pi t) on (0,1)
  double t = std::atan2(1.0, -x) / kPi;
  return wrap_turn(t);
}

cplx eval_map(const EntireMapSpec& s, cplx z) {
  switch (s.formula_kind) {
    case FormulaKind::baker_abel:
      return z + guarded_exp(-z, s.overflow_guard, z);
    case FormulaKind::fatou:
      return z + 1.0 + guarded_exp(-z, s.overflow_guard, z);
    case FormulaKind::herman:
      return z + cplx(0, 2 * kPi * s.alpha) + guarded_exp(z, s.overflow_guard, z);
    case FormulaKind::bergweiler:
      return 2.0 - std::log(2.0) + 2.0 * z - guarded_exp(z, s.overflow_guard, z);
    case FormulaKind::bargmann:
      return 2.0 * z - 3.0 + guarded_exp(z, s.overflow_guard, z);
  }
  throw error("unreachable formula kind");
}

cplx eval_derivative(const EntireMapSpec& s, cplx z) {
  switch (s.formula_kind) {
    case FormulaKind::baker_abel:
      return 1.0 - guarded_exp(-z, s.overflow_guard, z);
    case FormulaKind::fatou:
      return 1.0 - guarded_exp(-z, s.overflow_guard, z);
    case FormulaKind::herman:
      return 1.0 + guarded_exp(z, s.overflow_guard, z);
    case FormulaKind::bergweiler:
      return 2.0 - guarded_exp(z, s.overflow_guard, z);
    case FormulaKind::bargmann:
      return 2.0 + guarded_exp(z, s.overflow_guard, z);
  }
  throw error("unreachable formula kind");
}

const EntireMapSpec& get_map(const std::string& id) {
  for (const auto& s : map_table())
    if (s.id == id) return s;
  std::ostringstream os;
  os << "unknown map id '" << id << "'; known ids:";
  for (const auto& s : map_table()) os << ' ' << s.id;
  throw catalog_error(os.str());
}

EntireMapSpec get_map_with_alpha(const std::string& id, double alpha) {
  EntireMapSpec s = get_map(id);
  if (s.formula_kind == FormulaKind::herman) s.alpha = alpha;
  return s;
}

std::vector<std::string> map_ids() {
  std::vector<std::string> v;
  for (const auto& s : map_table()) v.push_back(s.id);
  return v;
}

std::string formula_text(FormulaKind k) {
  switch (k) {
    case FormulaKind::baker_abel: return "z + e^-z";
    case FormulaKind::fatou: return "z + 1 + e^-z";
    case FormulaKind::herman: return "z + 2*pi*i*alpha + e^z";
    case FormulaKind::bergweiler: return "2 - log 2 + 2z - e^z";
    case FormulaKind::bargmann: return "2z - 3 + e^z";
  }
  return "?";
}

std::string baker_type_name(BakerType t) {
  switch (t) {
    case BakerType::doubly_parabolic: return "doubly_parabolic";
    case BakerType::hyperbolic: return "hyperbolic";
    case BakerType::simply_parabolic: return "simply_parabolic";
  }
  return "?";
}

cplx eval_inner(const InnerFunctionSpec& s, cplx z) {
  switch (s.formula_kind) {
    case InnerKind::blaschke_baker: {
      cplx den = 3.0 + z * z;
      if (std::abs(den) < 1e-12) throw pole_error("blaschke pole at z^2 = -3");
      return (3.0 * z * z + 1.0) / den;
    }
    case InnerKind::fatou_inner: {
      cplx sz = std::sin(z);
      if (std::abs(sz) < 1e-12) throw pole_error("cot pole near k*pi");
      return z - 0.5 * std::cos(z) / sz;
    }
    case InnerKind::moebius_hyperbolic:
      return s.lambda * z;
    case InnerKind::moebius_parabolic:
      return z + s.shift;
  }
  throw error("unreachable inner kind");
}

cplx eval_inner_derivative(const InnerFunctionSpec& s, cplx z) {
  switch (s.formula_kind) {
    case InnerKind::blaschke_baker: {
      cplx den = 3.0 + z * z;
      if (std::abs(den) < 1e-12) throw pole_error("blaschke pole at z^2 = -3");
      return 16.0 * z / (den * den);
    }
    case InnerKind::fatou_inner: {
      cplx sz = std::sin(z);
      if (std::abs(sz) < 1e-12) throw pole_error("cot pole near k*pi");
      return 1.0 + 0.5 / (sz * sz);
    }
    case InnerKind::moebius_hyperbolic:
      return cplx(s.lambda, 0);
    case InnerKind::moebius_parabolic:
      return cplx(1, 0);
  }
  throw error("unreachable inner kind");
}

const InnerFunctionSpec& get_inner(const std::string& id) {
  for (const auto& s : inner_table())
    if (s.id == id) return s;
  std::ostringstream os;
  os << "unknown inner id '" << id << "'; known ids:";
  for (const auto& s : inner_table()) os << ' ' << s.id;
  throw catalog_error(os.str());
}

InnerFunctionSpec make_moebius_hyperbolic(double lambda) {
  if (!(lambda > 1.0))
    throw precondition_error("moebius_hyperbolic requires lambda > 1");
  InnerFunctionSpec s = get_inner("moebius_hyperbolic");
  s.lambda = lambda;
  return s;
}

InnerFunctionSpec make_moebius_parabolic(double shift) {
  if (shift != 1.0 && shift != -1.0)
    throw precondition_error("moebius_parabolic requires shift = +1 or -1");
  InnerFunctionSpec s = get_inner("moebius_parabolic");
  s.shift = shift;
  return s;
}

std::vector<std::string> inner_ids() {
  std::vector<std::string> v;
  for (const auto& s : inner_table()) v.push_back(s.id);
  return v;
}

}  // namespace bakerlab
