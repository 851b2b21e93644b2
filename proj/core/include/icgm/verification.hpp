#pragma once

#include <cmath>
#include <cstdint>

#include "icgm/cgm_engine.hpp"

namespace icgm {

/// Axis-aligned evaluation grid covering a polygon's bounding box.
struct GridSpec {
  double h = 0.0;
  Vec2 lo, hi;

  static GridSpec for_polygon(const FeasiblePolygon& omega, double h);
};

/// Calls fn on every grid point inside the polygon (row-major, lowest index
/// first) and then on every polygon vertex. Deterministic order.
template <typename Fn>
void for_each_feasible_grid_point(const FeasiblePolygon& omega, double h, Fn&& fn) {
  const GridSpec grid = GridSpec::for_polygon(omega, h);
  const int nx = static_cast<int>(std::ceil((grid.hi(0) - grid.lo(0)) / h - 1e-9));
  const int ny = static_cast<int>(std::ceil((grid.hi(1) - grid.lo(1)) / h - 1e-9));
  for (int j = 0; j <= ny; ++j) {
    for (int i = 0; i <= nx; ++i) {
      const Vec2 s(grid.lo(0) + i * h, grid.lo(1) + j * h);
      if (omega.contains(s)) fn(s);
    }
  }
  for (const Vec2& vert : omega.vertices()) fn(vert);
}

/// Brute-force subproblem minimization over the feasible grid points plus
/// the polygon vertices. Upper-bounds the exact theta within ||JV(z)|| * h.
SubproblemResult grid_subproblem_oracle(const SmoothObjective& v,
                                        const SectorCone& c,
                                        const FeasiblePolygon& omega,
                                        const Vec2& z, double h);

/// Grid certificate of stationarity: all grid values of psi_z are at least
/// -||JV(z)|| * h (no feasible direction maps into the negative cone
/// interior beyond grid resolution).
bool check_stationary(const SmoothObjective& v, const SectorCone& c,
                      const FeasiblePolygon& omega, const Vec2& z, double h);

/// Grid certificate of weak Pareto efficiency: no feasible grid point
/// strictly dominates z_bar in the cone order on objective values.
bool check_weakly_efficient(const SmoothObjective& v, const SectorCone& c,
                            const FeasiblePolygon& omega, const Vec2& z_bar,
                            double h);

/// Sampled falsification test of cone-convexity of V on the polygon:
/// lambda V(a) + (1-lambda) V(b) - V(lambda a + (1-lambda) b) must lie in
/// the cone within 1e-9 for every sampled triple. Not a proof.
bool check_c_convex(const SmoothObjective& v, const SectorCone& c,
                    const FeasiblePolygon& omega, int n_samples,
                    std::uint64_t seed = 20260824ULL);

/// Entrywise comparison of the analytic Jacobian against central differences.
bool jacobian_fd_check(const SmoothObjective& v, const Vec2& z, double step,
                       double tol);

}  // namespace icgm
