#include "icgm/cone_order.hpp"

#include <cmath>
#include <random>

namespace icgm {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDegenerateAngleTol = 1e-10;

double cross2(const Vec2& a, const Vec2& b) { return a(0) * b(1) - a(1) * b(0); }

// Distance from y to the ray {t * dir : t >= 0}, dir unit.
double ray_distance(const Vec2& dir, const Vec2& y) {
  const double t = std::max(0.0, y.dot(dir));
  return (y - t * dir).norm();
}

// Cross-checks the generator and facet-normal representations on random
// vectors: a*g1 + b*g2 with a,b >= 0 must pass the normal test, and the
// normal test must agree with the generator coefficients for arbitrary y.
void check_representation(const SectorCone& c) {
  std::mt19937_64 rng(0x5ec70'c0deULL);
  std::uniform_real_distribution<double> coef(0.0, 5.0);
  std::uniform_real_distribution<double> box(-5.0, 5.0);
  Mat2 gens;
  gens.col(0) = c.g1();
  gens.col(1) = c.g2();
  const Mat2 inv = gens.inverse();
  for (int i = 0; i < 1000; ++i) {
    const Vec2 inside = coef(rng) * c.g1() + coef(rng) * c.g2();
    if (!contains(c, inside, 1e-9)) {
      throw DegenerateConeError("make_cone: representation check failed on cone point");
    }
    const Vec2 y(box(rng), box(rng));
    const Vec2 ab = inv * y;
    const bool by_coeffs = ab(0) >= -1e-9 && ab(1) >= -1e-9;
    const bool by_normals = contains(c, y, 1e-9);
    if (by_coeffs != by_normals && std::min(std::abs(ab(0)), std::abs(ab(1))) > 1e-8) {
      throw DegenerateConeError("make_cone: generator/normal representations disagree");
    }
  }
}

}  // namespace

SectorCone make_cone(const Vec2& d1, const Vec2& d2) {
  if (d1.norm() < kZeroVectorTol || d2.norm() < kZeroVectorTol) {
    throw DegenerateConeError("make_cone: zero generator");
  }
  Vec2 u1 = d1.normalized();
  Vec2 u2 = d2.normalized();
  if (cross2(u1, u2) < 0.0) std::swap(u1, u2);
  const double angle = std::atan2(cross2(u1, u2), u1.dot(u2));
  if (angle < kDegenerateAngleTol || angle > kPi - kDegenerateAngleTol) {
    throw DegenerateConeError(
        "make_cone: generators must span an angle in (0, pi), got " +
        std::to_string(angle));
  }
  SectorCone c;
  c.g1_ = u1;
  c.g2_ = u2;
  c.n1_ = Vec2(u2(1), -u2(0));   // perpendicular to g2, positive on g1
  c.n2_ = Vec2(-u1(1), u1(0));   // perpendicular to g1, positive on g2
  c.opening_angle_ = angle;
  check_representation(c);
  return c;
}

bool contains(const SectorCone& c, const Vec2& y, double tol) {
  return c.n1().dot(y) >= -tol && c.n2().dot(y) >= -tol;
}

bool strict_contains(const SectorCone& c, const Vec2& y, double tol) {
  return c.n1().dot(y) > tol && c.n2().dot(y) > tol;
}

double oriented_distance(const SectorCone& c, const Vec2& y) {
  // Boundary of -C is the union of the rays along -g1 and -g2.
  const double r = std::min(ray_distance(-c.g1(), y), ray_distance(-c.g2(), y));
  return contains(c, -y) ? -r : r;
}

bool order_leq(const SectorCone& c, const Vec2& a, const Vec2& b) {
  return contains(c, b - a);
}

bool order_lt(const SectorCone& c, const Vec2& a, const Vec2& b) {
  return strict_contains(c, b - a);
}

SectorCone transport_cone(const SectorCone& c, const TangentBasis& basis_p,
                          const TangentBasis& basis_y) {
  const SpherePoint& p = basis_p.base();
  const SpherePoint& y = basis_y.base();
  const TangentVector t1 = parallel_transport(p, y, from_coords(basis_p, c.g1()));
  const TangentVector t2 = parallel_transport(p, y, from_coords(basis_p, c.g2()));
  return make_cone(to_coords(basis_y, t1), to_coords(basis_y, t2));
}

SphereOrder sphere_order(const SpherePoint& p_anchor, const SectorCone& c_p,
                         const SpherePoint& x, const SpherePoint& y) {
  const TangentBasis basis_x = make_basis(x);
  const SectorCone c_x = transport_cone(c_p, make_basis(p_anchor), basis_x);
  const Vec2 v = to_coords(basis_x, log_map(x, y));
  if (strict_contains(c_x, v)) return SphereOrder::LeqStrict;
  if (contains(c_x, v)) return SphereOrder::Leq;
  return SphereOrder::None;
}

}  // namespace icgm
