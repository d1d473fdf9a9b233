#include "bakerlab/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "bakerlab/error.hpp"
#include "bakerlab/parallel.hpp"

namespace bakerlab {

std::string classification_name(Classification c) {
  switch (c) {
    case Classification::escaping: return "escaping";
    case Classification::bounded: return "bounded";
    case Classification::bungee: return "bungee";
    case Classification::undecided: return "undecided";
  }
  return "?";
}

namespace {

struct StreamState {
  double sup_radius = 0;
  double inf_tail = 0;
  int streak = 0;
  std::optional<int> escape_index;
  bool overflowed = false;
  int steps_done = 0;
};

// Shared iteration core; `keep` collects the orbit when non-null.
Classification run_orbit(const EntireMapSpec& map, cplx z0, int n_max,
                         double escape_radius, double bounded_radius,
                         int persistence, std::vector<cplx>* keep,
                         StreamState& st) {
  cplx z = z0;
  if (keep) keep->push_back(z);
  st.sup_radius = std::abs(z);
  int tail_start = n_max / 2;
  double inf_tail = (tail_start == 0) ? std::abs(z) : 1e308;
  bool sup_exceeded = std::abs(z) > escape_radius;

  for (int k = 1; k <= n_max; ++k) {
    try {
      z = eval_map(map, z);
    } catch (const overflow_error&) {
      st.overflowed = true;
      st.escape_index = k;
      st.steps_done = k;
      st.inf_tail = (inf_tail == 1e308) ? st.sup_radius : inf_tail;
      return Classification::escaping;
    }
    if (keep) keep->push_back(z);
    double r = std::abs(z);
    if (!std::isfinite(r)) {
      st.overflowed = true;
      st.escape_index = k;
      st.steps_done = k;
      st.inf_tail = (inf_tail == 1e308) ? st.sup_radius : inf_tail;
      return Classification::escaping;
    }
    st.sup_radius = std::max(st.sup_radius, r);
    if (k >= tail_start) inf_tail = std::min(inf_tail, r);
    if (r > escape_radius) {
      sup_exceeded = true;
      if (++st.streak >= persistence) {
        st.escape_index = k - persistence + 1;
        st.steps_done = k;
        st.inf_tail = inf_tail;
        return Classification::escaping;
      }
    } else {
      st.streak = 0;
    }
  }
  st.steps_done = n_max;
  st.inf_tail = inf_tail;
  if (sup_exceeded && inf_tail < bounded_radius) return Classification::bungee;
  if (st.sup_radius <= bounded_radius) return Classification::bounded;
  return Classification::undecided;
}

}  // namespace

OrbitRecord iterate_orbit(const EntireMapSpec& map, cplx z0, int n_max,
                          double escape_radius, double bounded_radius) {
  if (n_max < 1) throw precondition_error("iterate_orbit requires n_max >= 1");
  if (!(escape_radius > bounded_radius) || !(bounded_radius > 0))
    throw precondition_error("need escape_radius > bounded_radius > 0");
  OrbitRecord rec;
  StreamState st;
  rec.classification = run_orbit(map, z0, n_max, escape_radius, bounded_radius,
                                 5, &rec.points, st);
  rec.escape_index = st.escape_index;
  rec.sup_radius = st.sup_radius;
  rec.inf_tail_radius = st.inf_tail;
  rec.overflowed = st.overflowed;
  return rec;
}

Classification classify_point(const EntireMapSpec& map, cplx z0,
                              const OrbitBudgets& b) {
  if (b.n_max < 1) return Classification::undecided;
  StreamState st;
  return run_orbit(map, z0, b.n_max, b.escape_radius, b.bounded_radius,
                   b.persistence, nullptr, st);
}

GridRender render_plane(const EntireMapSpec& map, cplx center, double width,
                        double height, int px_w, int px_h,
                        const OrbitBudgets& budgets, unsigned threads) {
  if (px_w < 1 || px_h < 1) throw precondition_error("resolution must be >= 1x1");
  if (static_cast<long long>(px_w) * px_h > 100000000LL)
    throw precondition_error("resolution exceeds 1e8 cells");
  GridRender g;
  g.center = center;
  g.width = width;
  g.height = height;
  g.px_w = px_w;
  g.px_h = px_h;
  g.cls.resize(static_cast<size_t>(px_w) * px_h);
  g.iterations.resize(g.cls.size());

  double x0 = center.real() - width / 2, y0 = center.imag() - height / 2;
  parallel_for(static_cast<size_t>(px_h), threads, [&](size_t row) {
    for (int col = 0; col < px_w; ++col) {
      // pixel centers; row 0 is the top of the window
      double x = x0 + (col + 0.5) * width / px_w;
      double y = y0 + (px_h - row - 0.5) * height / px_h;
      StreamState st;
      Classification c =
          budgets.n_max < 1
              ? Classification::undecided
              : run_orbit(map, cplx(x, y), budgets.n_max, budgets.escape_radius,
                          budgets.bounded_radius, budgets.persistence, nullptr,
                          st);
      size_t idx = row * px_w + col;
      g.cls[idx] = c;
      g.iterations[idx] =
          st.escape_index ? *st.escape_index : budgets.n_max;
    }
  });
  return g;
}

void write_ppm(const GridRender& g, const OrbitBudgets& budgets,
               const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot open " + path + " for writing");
  out << "P6\n" << g.px_w << " " << g.px_h << "\n255\n";
  std::vector<unsigned char> row(static_cast<size_t>(g.px_w) * 3);
  for (int r = 0; r < g.px_h; ++r) {
    for (int c = 0; c < g.px_w; ++c) {
      size_t idx = static_cast<size_t>(r) * g.px_w + c;
      unsigned char* px = &row[static_cast<size_t>(c) * 3];
      switch (g.cls[idx]) {
        case Classification::escaping: {
          double t = std::min(1.0, static_cast<double>(g.iterations[idx]) /
                                       std::max(1, budgets.n_max));
          px[0] = px[1] = static_cast<unsigned char>(std::lround(255 * (1 - t)));
          px[2] = static_cast<unsigned char>(255 - std::lround(75 * t));
          break;
        }
        case Classification::bounded: px[0] = px[1] = px[2] = 0; break;
        case Classification::bungee: px[0] = 220; px[1] = 30; px[2] = 30; break;
        case Classification::undecided: px[0] = px[1] = px[2] = 128; break;
      }
    }
    out.write(reinterpret_cast<const char*>(row.data()), row.size());
  }
}

}  // namespace bakerlab
