#pragma once

#include <Eigen/Dense>

#include "icgm/errors.hpp"

namespace icgm {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;

inline constexpr double kAntipodalTol = 1e-8;
inline constexpr double kZeroVectorTol = 1e-14;

/// A point of the unit sphere S^2, renormalized on construction.
class SpherePoint {
 public:
  explicit SpherePoint(const Vec3& coords);
  const Vec3& coords() const { return coords_; }

 private:
  Vec3 coords_;
};

/// An ambient 3-vector constrained to the tangent plane of its base point.
/// The component along the base is projected out on construction.
class TangentVector {
 public:
  TangentVector(const SpherePoint& base, const Vec3& vec);
  const SpherePoint& base() const { return base_; }
  const Vec3& vec() const { return vec_; }
  double norm() const { return vec_.norm(); }

 private:
  SpherePoint base_;
  Vec3 vec_;
};

/// Right-handed orthonormal chart (base, e1, e2) of a tangent plane.
class TangentBasis {
 public:
  TangentBasis(const SpherePoint& base, const Vec3& e1, const Vec3& e2)
      : base_(base), e1_(e1), e2_(e2) {}
  const SpherePoint& base() const { return base_; }
  const Vec3& e1() const { return e1_; }
  const Vec3& e2() const { return e2_; }

 private:
  SpherePoint base_;
  Vec3 e1_;
  Vec3 e2_;
};

/// Intrinsic distance arccos<p,q>, in [0, pi].
double geodesic_distance(const SpherePoint& p, const SpherePoint& q);

/// exp_p(v) = cos(|v|) p + sin(|v|) v/|v|; returns p for |v| < 1e-14.
SpherePoint exp_map(const SpherePoint& p, const TangentVector& v);

/// Inverse of exp_p. Throws AntipodalPointsError when d(p,q) > pi - 1e-8.
TangentVector log_map(const SpherePoint& p, const SpherePoint& q);

/// Point at parameter t on the minimal geodesic from p to q.
SpherePoint geodesic_point(const SpherePoint& p, const SpherePoint& q, double t);

/// Parallel transport of v along the minimal geodesic from p to q.
TangentVector parallel_transport(const SpherePoint& p, const SpherePoint& q,
                                 const TangentVector& v);

/// Deterministic chart at p: e1 from the standard axis least aligned with p,
/// e2 = p x e1.
TangentBasis make_basis(const SpherePoint& p);

Vec2 to_coords(const TangentBasis& b, const TangentVector& v);
TangentVector from_coords(const TangentBasis& b, const Vec2& c);

}  // namespace icgm
