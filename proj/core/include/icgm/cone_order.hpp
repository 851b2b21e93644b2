#pragma once

#include "icgm/sphere_geometry.hpp"

namespace icgm {

inline constexpr double kConeMembershipTol = 1e-12;

/// Closed, convex, pointed planar sector cone with nonempty interior,
/// spanned by two unit generators in counter-clockwise order. n1 and n2 are
/// the derived facet normals: n1 is orthogonal to g2 with <n1,g1> > 0, n2 is
/// orthogonal to g1 with <n2,g2> > 0, so
///   y in cone(g1,g2)  <=>  <n1,y> >= 0 and <n2,y> >= 0.
class SectorCone {
 public:
  const Vec2& g1() const { return g1_; }
  const Vec2& g2() const { return g2_; }
  const Vec2& n1() const { return n1_; }
  const Vec2& n2() const { return n2_; }
  double opening_angle() const { return opening_angle_; }

  friend SectorCone make_cone(const Vec2& d1, const Vec2& d2);

 private:
  SectorCone() = default;
  Vec2 g1_, g2_, n1_, n2_;
  double opening_angle_ = 0.0;
};

/// Builds a sector cone from two direction vectors, normalizing and
/// reordering them counter-clockwise. Throws DegenerateConeError when the
/// directions are zero, parallel, antiparallel, or span an angle >= pi.
SectorCone make_cone(const Vec2& d1, const Vec2& d2);

bool contains(const SectorCone& c, const Vec2& y, double tol = kConeMembershipTol);
bool strict_contains(const SectorCone& c, const Vec2& y,
                     double tol = kConeMembershipTol);

/// Oriented distance of y to -C: negative inside int(-C), zero on the
/// boundary, positive outside, with |value| the Euclidean distance to the
/// nearer boundary ray.
double oriented_distance(const SectorCone& c, const Vec2& y);

/// a <=_C b  iff  b - a in C; strict version uses the cone interior.
bool order_leq(const SectorCone& c, const Vec2& a, const Vec2& b);
bool order_lt(const SectorCone& c, const Vec2& a, const Vec2& b);

/// Cone at basis_y.base obtained by parallel transport of the generators
/// from basis_p.base; preserves the opening angle.
SectorCone transport_cone(const SectorCone& c, const TangentBasis& basis_p,
                          const TangentBasis& basis_y);

enum class SphereOrder { LeqStrict, Leq, None };

/// Order between sphere points induced by the anchored cone: tests whether
/// log_x(y) lies in the cone transported from the anchor to x.
SphereOrder sphere_order(const SpherePoint& p_anchor, const SectorCone& c_p,
                         const SpherePoint& x, const SpherePoint& y);

}  // namespace icgm
