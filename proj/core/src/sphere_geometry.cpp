#include "icgm/sphere_geometry.hpp"

#include <algorithm>
#include <cmath>

namespace icgm {

namespace {

constexpr double kPi = 3.14159265358979323846;

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

}  // namespace

SpherePoint::SpherePoint(const Vec3& coords) : coords_(coords) {
  const double n = coords_.norm();
  if (n < kZeroVectorTol) {
    throw std::invalid_argument("SpherePoint: zero vector has no direction");
  }
  coords_ /= n;
}

TangentVector::TangentVector(const SpherePoint& base, const Vec3& vec)
    : base_(base), vec_(vec - base.coords().dot(vec) * base.coords()) {}

double geodesic_distance(const SpherePoint& p, const SpherePoint& q) {
  return std::acos(clamp_unit(p.coords().dot(q.coords())));
}

SpherePoint exp_map(const SpherePoint& p, const TangentVector& v) {
  const double n = v.norm();
  if (n < kZeroVectorTol) return p;
  return SpherePoint(std::cos(n) * p.coords() + std::sin(n) * (v.vec() / n));
}

TangentVector log_map(const SpherePoint& p, const SpherePoint& q) {
  const double c = clamp_unit(p.coords().dot(q.coords()));
  const double d = std::acos(c);
  if (d > kPi - kAntipodalTol) {
    throw AntipodalPointsError("log_map: points are antipodal, geodesic not unique");
  }
  // (I - pp^T) q has norm sin(d); rescale to length d.
  const Vec3 w = q.coords() - c * p.coords();
  const double wn = w.norm();
  if (wn < kZeroVectorTol) return TangentVector(p, Vec3::Zero());
  return TangentVector(p, (d / wn) * w);
}

SpherePoint geodesic_point(const SpherePoint& p, const SpherePoint& q, double t) {
  const TangentVector u = log_map(p, q);
  return exp_map(p, TangentVector(p, t * u.vec()));
}

TangentVector parallel_transport(const SpherePoint& p, const SpherePoint& q,
                                 const TangentVector& v) {
  const TangentVector u = log_map(p, q);
  const double d = u.norm();
  if (d < kZeroVectorTol) return TangentVector(q, v.vec());
  const Vec3 uhat = u.vec() / d;
  const double a = uhat.dot(v.vec());
  const Vec3 moved =
      v.vec() + a * ((std::cos(d) - 1.0) * uhat - std::sin(d) * p.coords());
  return TangentVector(q, moved);
}

TangentBasis make_basis(const SpherePoint& p) {
  // Pick the standard axis least aligned with p (lowest index on ties).
  int best = 0;
  double best_abs = std::abs(p.coords()(0));
  for (int i = 1; i < 3; ++i) {
    const double a = std::abs(p.coords()(i));
    if (a < best_abs) {
      best = i;
      best_abs = a;
    }
  }
  Vec3 axis = Vec3::Zero();
  axis(best) = 1.0;
  const Vec3 e1 = (axis - axis.dot(p.coords()) * p.coords()).normalized();
  const Vec3 e2 = p.coords().cross(e1);
  return TangentBasis(p, e1, e2);
}

Vec2 to_coords(const TangentBasis& b, const TangentVector& v) {
  return Vec2(b.e1().dot(v.vec()), b.e2().dot(v.vec()));
}

TangentVector from_coords(const TangentBasis& b, const Vec2& c) {
  return TangentVector(b.base(), c(0) * b.e1() + c(1) * b.e2());
}

}  // namespace icgm
