#pragma once

#include <functional>
#include <string>
#include <vector>

#include "icgm/sphere_geometry.hpp"

namespace icgm {

/// Smooth map V: Omega subset of R^2 -> R^2 with Jacobian access.
struct SmoothObjective {
  std::function<Vec2(const Vec2&)> eval;
  std::function<Mat2(const Vec2&)> jacobian;
  std::string label;
};

/// Central finite-difference Jacobian of f at z.
Mat2 fd_jacobian(const std::function<Vec2(const Vec2&)>& f, const Vec2& z,
                 double step = 1e-6);

/// V(z) = A z + b with constant Jacobian A.
SmoothObjective linear_objective(const Mat2& a, const Vec2& b);

/// Sphere-derived objective: V(z) = -coords_y(log_y(exp_p(z))) with p the
/// anchor and y the evaluation point, both charted by their deterministic
/// bases. Reduces to V(z) = -z when eval_point equals the anchor. Jacobian
/// by central finite differences.
SmoothObjective logmap_objective(const SpherePoint& anchor,
                                 const SpherePoint& eval_point);

/// Compact convex feasible region: a convex polygon with counter-clockwise
/// vertices.
class FeasiblePolygon {
 public:
  /// Throws TooFewVerticesError (< 3 vertices) or NonConvexPolygonError
  /// (clockwise or non-convex chain, or all vertices collinear).
  explicit FeasiblePolygon(std::vector<Vec2> vertices);

  const std::vector<Vec2>& vertices() const { return vertices_; }
  double diameter() const { return diameter_; }
  bool contains(const Vec2& s, double tol = 1e-10) const;

  struct Edge {
    Vec2 a, b;
  };
  std::vector<Edge> edges() const;

  Vec2 bbox_min() const { return bbox_min_; }
  Vec2 bbox_max() const { return bbox_max_; }

 private:
  std::vector<Vec2> vertices_;
  double diameter_ = 0.0;
  Vec2 bbox_min_, bbox_max_;
};

}  // namespace icgm
