#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "icgm/cgm_engine.hpp"
#include "icgm/verification.hpp"
#include "test_util.hpp"

using namespace icgm;
using icgm::testing::Rng;
using icgm::testing::kTestPi;

namespace {

SectorCone orthant() { return make_cone(Vec2(1, 0), Vec2(0, 1)); }
SmoothObjective negate() { return linear_objective(-Mat2::Identity(), Vec2::Zero()); }
FeasiblePolygon unit_square() {
  return FeasiblePolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

}  // namespace

TEST_CASE("solver params validation") {
  SolverParams p;
  CHECK_NOTHROW(p.validate());
  p.beta = 1.2;
  CHECK_THROWS_AS(p.validate(), InvalidParamsError);
  p.beta = 0.5;
  p.delta = 0.0;
  CHECK_THROWS_AS(p.validate(), InvalidParamsError);
  p.delta = 0.5;
  p.max_iter = 0;
  CHECK_THROWS_AS(p.validate(), InvalidParamsError);
}

TEST_CASE("auxiliary function values") {
  const SectorCone c = orthant();
  const SmoothObjective v = negate();
  CHECK(psi(v, c, Vec2(0.4, 0.6), Vec2(0.4, 0.6)) == doctest::Approx(0.0));
  CHECK(psi(v, c, Vec2(0, 0), Vec2(1, 1)) == doctest::Approx(-1.0));
  CHECK(psi(v, c, Vec2(0, 0), Vec2(1, -1)) == doctest::Approx(1.0));
}

TEST_CASE("subproblem on the canonical square instance") {
  const SectorCone c = orthant();
  const SmoothObjective v = negate();
  const FeasiblePolygon omega = unit_square();

  const SubproblemResult at0 = solve_subproblem(v, c, omega, Vec2(0, 0));
  CHECK((at0.s - Vec2(1, 1)).norm() < 1e-12);
  CHECK(at0.theta == doctest::Approx(-1.0));

  const SubproblemResult at11 = solve_subproblem(v, c, omega, Vec2(1, 1));
  CHECK(std::abs(at11.theta) < 1e-12);

  CHECK_THROWS_AS(solve_subproblem(v, c, omega, Vec2(2, 2)),
                  PointOutsideFeasibleError);
}

TEST_CASE("subproblem minimum on a kink-line edge intersection") {
  // On the triangle the minimum of max(-s1, -s2) sits at the midpoint of the
  // hypotenuse, not at a vertex.
  const FeasiblePolygon tri({{0, 0}, {2, 0}, {0, 2}});
  const SubproblemResult r = solve_subproblem(negate(), orthant(), tri, Vec2(0, 0));
  CHECK((r.s - Vec2(1, 1)).norm() < 1e-12);
  CHECK(r.theta == doctest::Approx(-1.0));
}

TEST_CASE("subproblem value is never positive") {
  Rng rng(41);
  for (int i = 0; i < 500; ++i) {
    const SectorCone c = rng.cone();
    const Mat2 a{{rng.uniform(-2, 2), rng.uniform(-2, 2)},
                 {rng.uniform(-2, 2), rng.uniform(-2, 2)}};
    const SmoothObjective v = linear_objective(a, rng.vec2(-1, 1));
    const FeasiblePolygon omega = unit_square();
    const Vec2 z = rng.vec2(0.0, 1.0);
    CHECK(solve_subproblem(v, c, omega, z).theta <= 1e-12);
  }
}

TEST_CASE("theta is empirically Lipschitz on a linear instance") {
  const Mat2 a{{-1, 0.4}, {0.3, -2}};
  const SmoothObjective v = linear_objective(a, Vec2(0.1, 0.2));
  const SectorCone c = make_cone(Vec2(1, 0.2), Vec2(0.3, 1));
  const FeasiblePolygon omega = unit_square();
  const double k = a.norm();  // for constant J the modulus is ||J||
  Rng rng(42);
  for (int i = 0; i < 300; ++i) {
    const Vec2 z = rng.vec2(0.05, 0.95);
    const Vec2 dz = 0.01 * rng.vec2(-1, 1);
    const Vec2 z2 = z + dz;
    if (!omega.contains(z2)) continue;
    const double t1 = solve_subproblem(v, c, omega, z).theta;
    const double t2 = solve_subproblem(v, c, omega, z2).theta;
    CHECK(std::abs(t1 - t2) <= k * dz.norm() + 1e-9);
  }
}

TEST_CASE("armijo accepts the full step on linear instances") {
  const SolverParams params;
  const ArmijoResult r =
      armijo_step(negate(), orthant(), Vec2(0, 0), Vec2(1, 1), params);
  CHECK(r.t == doctest::Approx(1.0));
  CHECK(r.n == 0);
}

TEST_CASE("armijo backtracks under strong curvature and can exhaust") {
  // V(z) = (-z1 + 100 z1^2, -z2 + 100 z2^2): the decrease condition needs
  // t <= (1 - beta) / 100 along d = (1,1) from the origin.
  SmoothObjective v;
  v.eval = [](const Vec2& z) {
    return Vec2(-z(0) + 100 * z(0) * z(0), -z(1) + 100 * z(1) * z(1));
  };
  v.jacobian = [](const Vec2& z) {
    Mat2 j;
    j << -1 + 200 * z(0), 0, 0, -1 + 200 * z(1);
    return j;
  };
  v.label = "curved";

  SolverParams params;
  const ArmijoResult r = armijo_step(v, orthant(), Vec2(0, 0), Vec2(1, 1), params);
  CHECK(r.t <= (1.0 - params.beta) / 100.0 + 1e-12);
  CHECK(r.t > 0.0);

  params.armijo_max_pow = 3;  // cannot reach the needed step
  CHECK_THROWS_AS(armijo_step(v, orthant(), Vec2(0, 0), Vec2(1, 1), params),
                  LineSearchExhaustedError);
}

TEST_CASE("canonical square instance converges in one full step") {
  const IterationTrace trace =
      icgm_run(negate(), orthant(), unit_square(), Vec2(0, 0), SolverParams{});
  CHECK(trace.status == SolveStatus::Converged);
  CHECK(trace.records.size() == 2);
  CHECK((trace.final_z - Vec2(1, 1)).norm() < 1e-12);
  CHECK(trace.records[0].theta == doctest::Approx(-1.0));
  CHECK(trace.records[0].t == doctest::Approx(1.0));
  CHECK(std::abs(trace.records[1].theta) < 1e-12);
}

TEST_CASE("stationary start yields a single-record trace") {
  const IterationTrace trace =
      icgm_run(negate(), orthant(), unit_square(), Vec2(1, 1), SolverParams{});
  CHECK(trace.status == SolveStatus::Converged);
  CHECK(trace.records.size() == 1);
}

TEST_CASE("run rejects an infeasible start") {
  CHECK_THROWS_AS(
      icgm_run(negate(), orthant(), unit_square(), Vec2(2, 0), SolverParams{}),
      PointOutsideFeasibleError);
}

TEST_CASE("max iterations status") {
  // Strong curvature keeps the Armijo step tiny, so one iteration cannot
  // reach stationarity.
  SmoothObjective v;
  v.eval = [](const Vec2& z) {
    return Vec2(-z(0) + 100 * z(0) * z(0), -z(1) + 100 * z(1) * z(1));
  };
  v.jacobian = [](const Vec2& z) {
    Mat2 j;
    j << -1 + 200 * z(0), 0, 0, -1 + 200 * z(1);
    return j;
  };
  SolverParams params;
  params.max_iter = 1;
  params.tol_station = 1e-12;
  const IterationTrace trace =
      icgm_run(v, orthant(), unit_square(), Vec2(0, 0), params);
  CHECK(trace.status == SolveStatus::MaxIterations);
  CHECK(trace.records.size() == 2);
}

TEST_CASE("sphere-derived instance: descent, feasibility, and the theta bound") {
  const SpherePoint anchor(Vec3(0, 0, 1));
  const SpherePoint y = exp_map(anchor, TangentVector(anchor, Vec3(0.1, 0, 0)));
  const SmoothObjective v = logmap_objective(anchor, y);
  const SectorCone c = orthant();
  const FeasiblePolygon omega = unit_square();
  const SolverParams params;

  const IterationTrace trace = icgm_run(v, c, omega, Vec2(0.2, 0.2), params);
  CHECK(trace.status == SolveStatus::Converged);
  CHECK(std::abs(trace.records.back().theta) <= params.tol_station);

  for (size_t k = 0; k + 1 < trace.records.size(); ++k) {
    const IterationRecord& rec = trace.records[k];
    const IterationRecord& next = trace.records[k + 1];
    CHECK(omega.contains(rec.z));
    CHECK((rec.direction - (rec.s - rec.z)).norm() == 0.0);
    // accepted steps strictly improve in the cone order and in phi
    CHECK(order_lt(c, v.eval(next.z), v.eval(rec.z)));
    CHECK(next.phi_value < rec.phi_value);
    CHECK(rec.t * std::abs(rec.theta) <=
          (rec.phi_value - next.phi_value) / params.beta + 1e-9);
  }
  CHECK(omega.contains(trace.final_z));
  // the converged point certifies as stationary on a grid
  CHECK(check_stationary(v, c, omega, trace.final_z, 1e-2));
}

TEST_CASE("lift_to_sphere maps tangent solutions back to the sphere") {
  const SpherePoint anchor(Vec3(0, 0, 1));
  CHECK((lift_to_sphere(anchor, Vec2(0, 0)).coords() - anchor.coords()).norm() ==
        0.0);
  // e1 at the north pole is the x axis under the deterministic basis rule
  const SpherePoint quarter = lift_to_sphere(anchor, Vec2(kTestPi / 2, 0));
  CHECK((quarter.coords() - Vec3(1, 0, 0)).norm() < 1e-12);

  Rng rng(43);
  for (int i = 0; i < 200; ++i) {
    const Vec2 z = rng.vec2(-1.5, 1.5);
    const SpherePoint lifted = lift_to_sphere(anchor, z);
    const Vec2 back = to_coords(make_basis(anchor), log_map(anchor, lifted));
    CHECK((back - z).norm() < 1e-9);
  }
}
