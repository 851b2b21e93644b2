#include "icgm/cgm_engine.hpp"

#include <cmath>

namespace icgm {

void SolverParams::validate() const {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw InvalidParamsError("beta must lie in (0,1), got " + std::to_string(beta));
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw InvalidParamsError("delta must lie in (0,1), got " + std::to_string(delta));
  }
  if (!(tol_station > 0.0)) {
    throw InvalidParamsError("tol_station must be positive");
  }
  if (max_iter <= 0) throw InvalidParamsError("max_iter must be positive");
  if (armijo_max_pow <= 0) throw InvalidParamsError("armijo_max_pow must be positive");
}

double psi(const SmoothObjective& v, const SectorCone& c, const Vec2& z,
           const Vec2& s) {
  return oriented_distance(c, v.jacobian(z) * (s - z));
}

SubproblemResult solve_subproblem(const SmoothObjective& v, const SectorCone& c,
                                  const FeasiblePolygon& omega, const Vec2& z) {
  if (!omega.contains(z)) {
    throw PointOutsideFeasibleError("solve_subproblem: z is not in the polygon");
  }
  const Mat2 j = v.jacobian(z);
  // L(s) = max(<a1, s-z>, <a2, s-z>) with a_i = J^T n_i.
  const Vec2 a1 = j.transpose() * c.n1();
  const Vec2 a2 = j.transpose() * c.n2();
  const auto value = [&](const Vec2& s) {
    return std::max(a1.dot(s - z), a2.dot(s - z));
  };

  bool have = false;
  Vec2 best;
  double best_val = 0.0;
  const auto consider = [&](const Vec2& s) {
    const double val = value(s);
    if (!have || val < best_val) {
      have = true;
      best = s;
      best_val = val;
    }
  };

  for (const Vec2& vert : omega.vertices()) consider(vert);
  // Intersections of each edge with the kink line <a1 - a2, s - z> = 0.
  const Vec2 kink = a1 - a2;
  for (const auto& e : omega.edges()) {
    const double denom = kink.dot(e.b - e.a);
    if (std::abs(denom) < 1e-14) continue;
    const double tau = -kink.dot(e.a - z) / denom;
    if (tau >= 0.0 && tau <= 1.0) consider(e.a + tau * (e.b - e.a));
  }

  return {best, psi(v, c, z, best)};
}

ArmijoResult armijo_step(const SmoothObjective& v, const SectorCone& c,
                         const Vec2& z, const Vec2& d, const SolverParams& params) {
  const Vec2 vz = v.eval(z);
  const Vec2 jd = v.jacobian(z) * d;
  double t = 1.0;
  for (int n = 0; n <= params.armijo_max_pow; ++n) {
    const Vec2 decrease = vz + params.beta * t * jd - v.eval(z + t * d);
    if (contains(c, decrease)) return {t, n};
    t *= params.delta;
  }
  throw LineSearchExhaustedError(
      "armijo_step: no step delta^n with n <= " +
      std::to_string(params.armijo_max_pow) + " satisfies the decrease condition");
}

IterationTrace icgm_run(const SmoothObjective& v, const SectorCone& c,
                        const FeasiblePolygon& omega, const Vec2& z0,
                        const SolverParams& params) {
  params.validate();
  if (!omega.contains(z0)) {
    throw PointOutsideFeasibleError("icgm_run: starting point is not in the polygon");
  }

  IterationTrace trace;
  Vec2 z = z0;
  for (int k = 0;; ++k) {
    const SubproblemResult sub = solve_subproblem(v, c, omega, z);
    const double phi = oriented_distance(c, v.eval(z));
    const Vec2 d = sub.s - z;
    IterationRecord rec{k, z, sub.theta, sub.s, d, 0.0, phi};

    if (std::abs(sub.theta) <= params.tol_station) {
      trace.records.push_back(rec);
      trace.status = SolveStatus::Converged;
      break;
    }
    if (k >= params.max_iter) {
      trace.records.push_back(rec);
      trace.status = SolveStatus::MaxIterations;
      break;
    }
    ArmijoResult step;
    try {
      step = armijo_step(v, c, z, d, params);
    } catch (const LineSearchExhaustedError&) {
      trace.records.push_back(rec);
      trace.status = SolveStatus::LineSearchFailed;
      break;
    }
    rec.t = step.t;
    trace.records.push_back(rec);
    z = z + step.t * d;
  }
  trace.final_z = z;
  return trace;
}

SpherePoint lift_to_sphere(const SpherePoint& anchor, const Vec2& z) {
  return exp_map(anchor, from_coords(make_basis(anchor), z));
}

}  // namespace icgm
