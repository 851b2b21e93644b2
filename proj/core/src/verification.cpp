#include "icgm/verification.hpp"

#include <cmath>
#include <random>

namespace icgm {

GridSpec GridSpec::for_polygon(const FeasiblePolygon& omega, double h) {
  GridSpec g;
  g.h = h;
  g.lo = omega.bbox_min();
  g.hi = omega.bbox_max();
  return g;
}

SubproblemResult grid_subproblem_oracle(const SmoothObjective& v,
                                        const SectorCone& c,
                                        const FeasiblePolygon& omega,
                                        const Vec2& z, double h) {
  if (!omega.contains(z)) {
    throw PointOutsideFeasibleError("grid_subproblem_oracle: z is not in the polygon");
  }
  const Mat2 j = v.jacobian(z);
  bool have = false;
  Vec2 best;
  double best_val = 0.0;
  for_each_feasible_grid_point(omega, h, [&](const Vec2& s) {
    const double val = oriented_distance(c, j * (s - z));
    if (!have || val < best_val) {
      have = true;
      best = s;
      best_val = val;
    }
  });
  return {best, best_val};
}

bool check_stationary(const SmoothObjective& v, const SectorCone& c,
                      const FeasiblePolygon& omega, const Vec2& z, double h) {
  if (!omega.contains(z)) {
    throw PointOutsideFeasibleError("check_stationary: z is not in the polygon");
  }
  const Mat2 j = v.jacobian(z);
  const double tol = j.norm() * h;  // psi_z is ||J||-Lipschitz in s
  bool stationary = true;
  for_each_feasible_grid_point(omega, h, [&](const Vec2& s) {
    if (oriented_distance(c, j * (s - z)) < -tol) stationary = false;
  });
  return stationary;
}

bool check_weakly_efficient(const SmoothObjective& v, const SectorCone& c,
                            const FeasiblePolygon& omega, const Vec2& z_bar,
                            double h) {
  if (!omega.contains(z_bar)) {
    throw PointOutsideFeasibleError("check_weakly_efficient: point is not in the polygon");
  }
  const Vec2 v_bar = v.eval(z_bar);
  bool efficient = true;
  for_each_feasible_grid_point(omega, h, [&](const Vec2& s) {
    if (order_lt(c, v.eval(s), v_bar)) efficient = false;
  });
  return efficient;
}

bool check_c_convex(const SmoothObjective& v, const SectorCone& c,
                    const FeasiblePolygon& omega, int n_samples,
                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(omega.bbox_min()(0), omega.bbox_max()(0));
  std::uniform_real_distribution<double> uy(omega.bbox_min()(1), omega.bbox_max()(1));
  std::uniform_real_distribution<double> ul(0.0, 1.0);
  const auto sample = [&]() {
    for (;;) {
      const Vec2 s(ux(rng), uy(rng));
      if (omega.contains(s)) return s;
    }
  };
  for (int i = 0; i < n_samples; ++i) {
    const Vec2 a = sample();
    const Vec2 b = sample();
    const double lambda = ul(rng);
    const Vec2 defect =
        lambda * v.eval(a) + (1.0 - lambda) * v.eval(b) - v.eval(lambda * a + (1.0 - lambda) * b);
    if (!contains(c, defect, 1e-9)) return false;
  }
  return true;
}

bool jacobian_fd_check(const SmoothObjective& v, const Vec2& z, double step,
                       double tol) {
  const Mat2 analytic = v.jacobian(z);
  const Mat2 numeric = fd_jacobian(v.eval, z, step);
  return ((analytic - numeric).cwiseAbs().maxCoeff()) <= tol;
}

}  // namespace icgm
