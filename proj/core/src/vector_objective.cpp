#include "icgm/vector_objective.hpp"

#include <cmath>

namespace icgm {

namespace {

double cross2(const Vec2& a, const Vec2& b) { return a(0) * b(1) - a(1) * b(0); }

}  // namespace

Mat2 fd_jacobian(const std::function<Vec2(const Vec2&)>& f, const Vec2& z,
                 double step) {
  Mat2 j;
  for (int i = 0; i < 2; ++i) {
    Vec2 dz = Vec2::Zero();
    dz(i) = step;
    j.col(i) = (f(z + dz) - f(z - dz)) / (2.0 * step);
  }
  return j;
}

SmoothObjective linear_objective(const Mat2& a, const Vec2& b) {
  SmoothObjective v;
  v.eval = [a, b](const Vec2& z) { return Vec2(a * z + b); };
  v.jacobian = [a](const Vec2&) { return a; };
  v.label = "linear";
  return v;
}

SmoothObjective logmap_objective(const SpherePoint& anchor,
                                 const SpherePoint& eval_point) {
  const TangentBasis basis_p = make_basis(anchor);
  const TangentBasis basis_y = make_basis(eval_point);
  SmoothObjective v;
  v.eval = [basis_p, basis_y, anchor, eval_point](const Vec2& z) {
    const SpherePoint q = exp_map(anchor, from_coords(basis_p, z));
    return Vec2(-to_coords(basis_y, log_map(eval_point, q)));
  };
  v.jacobian = [eval = v.eval](const Vec2& z) { return fd_jacobian(eval, z); };
  v.label = "logmap";
  return v;
}

FeasiblePolygon::FeasiblePolygon(std::vector<Vec2> vertices)
    : vertices_(std::move(vertices)) {
  const size_t n = vertices_.size();
  if (n < 3) {
    throw TooFewVerticesError("polygon needs at least 3 vertices, got " +
                              std::to_string(n));
  }
  double area2 = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const Vec2& a = vertices_[i];
    const Vec2& b = vertices_[(i + 1) % n];
    const Vec2& c = vertices_[(i + 2) % n];
    if (cross2(b - a, c - b) < -1e-12) {
      throw NonConvexPolygonError(
          "polygon vertices must form a convex counter-clockwise chain");
    }
    area2 += cross2(a, b);
  }
  if (area2 <= 1e-12) {
    throw NonConvexPolygonError("polygon is degenerate (collinear or clockwise)");
  }

  diameter_ = 0.0;
  bbox_min_ = bbox_max_ = vertices_[0];
  for (size_t i = 0; i < n; ++i) {
    bbox_min_ = bbox_min_.cwiseMin(vertices_[i]);
    bbox_max_ = bbox_max_.cwiseMax(vertices_[i]);
    for (size_t j = i + 1; j < n; ++j) {
      diameter_ = std::max(diameter_, (vertices_[i] - vertices_[j]).norm());
    }
  }
}

bool FeasiblePolygon::contains(const Vec2& s, double tol) const {
  const size_t n = vertices_.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2& a = vertices_[i];
    const Vec2& b = vertices_[(i + 1) % n];
    if (cross2(b - a, s - a) < -tol) return false;
  }
  return true;
}

std::vector<FeasiblePolygon::Edge> FeasiblePolygon::edges() const {
  std::vector<Edge> out;
  out.reserve(vertices_.size());
  for (size_t i = 0; i < vertices_.size(); ++i) {
    out.push_back({vertices_[i], vertices_[(i + 1) % vertices_.size()]});
  }
  return out;
}

}  // namespace icgm
