#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bakerlab/catalog.hpp"

namespace bakerlab {

enum class Classification : uint8_t { escaping, bounded, bungee, undecided };

std::string classification_name(Classification c);

struct OrbitBudgets {
  int n_max = 10000;
  double escape_radius = 1e6;
  double bounded_radius = 1e3;
  // consecutive steps beyond escape_radius required to call an orbit escaping
  int persistence = 5;
};

struct OrbitRecord {
  std::vector<cplx> points;  // z_0 .. z_k as far as retained
  Classification classification = Classification::undecided;
  std::optional<int> escape_index;
  double sup_radius = 0.0;
  double inf_tail_radius = 0.0;
  bool overflowed = false;
};

OrbitRecord iterate_orbit(const EntireMapSpec& map, cplx z0, int n_max,
                          double escape_radius, double bounded_radius);

// streaming variant, O(1) memory
Classification classify_point(const EntireMapSpec& map, cplx z0,
                              const OrbitBudgets& budgets);

struct GridRender {
  cplx center;
  double width = 0, height = 0;
  int px_w = 0, px_h = 0;
  std::vector<Classification> cls;  // row-major, px_w * px_h
  std::vector<int32_t> iterations;  // escape index or n_max
};

GridRender render_plane(const EntireMapSpec& map, cplx center, double width,
                        double height, int px_w, int px_h,
                        const OrbitBudgets& budgets, unsigned threads = 0);

// binary P6, palette documented in the README
void write_ppm(const GridRender& g, const OrbitBudgets& budgets,
               const std::string& path);

}  // namespace bakerlab
