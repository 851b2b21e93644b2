#pragma once

#include <vector>

#include "icgm/cone_order.hpp"
#include "icgm/vector_objective.hpp"

namespace icgm {

struct SolverParams {
  double beta = 0.5;          // Armijo slope fraction, in (0,1)
  double delta = 0.5;         // backtracking ratio, in (0,1)
  double tol_station = 1e-8;  // stop when |theta| <= tol_station
  int max_iter = 500;
  int armijo_max_pow = 60;    // cap on n in t = delta^n

  /// Throws InvalidParamsError when out of range.
  void validate() const;
};

struct IterationRecord {
  int k = 0;
  Vec2 z;
  double theta = 0.0;
  Vec2 s;
  Vec2 direction;  // s - z
  double t = 0.0;  // accepted step; 0 on the final record
  double phi_value = 0.0;  // oriented distance of V(z)
};

enum class SolveStatus { Converged, MaxIterations, LineSearchFailed };

struct IterationTrace {
  std::vector<IterationRecord> records;
  SolveStatus status = SolveStatus::Converged;
  Vec2 final_z;
};

/// Auxiliary function: oriented distance of JV(z)(s - z) to -C.
double psi(const SmoothObjective& v, const SectorCone& c, const Vec2& z,
           const Vec2& s);

struct SubproblemResult {
  Vec2 s;        // minimizer over the polygon
  double theta;  // minimum value, always <= ~0
};

/// Exact Frank-Wolfe subproblem: minimizes psi over the polygon. With
/// g(s) = JV(z)(s-z) and L(s) = max(<n1,g(s)>, <n2,g(s)>), L is piecewise
/// linear and convex, L(z) = 0, psi = L wherever L <= 0 and psi >= 0 >= min L
/// elsewhere, so min psi = min L and the minimum lies on a polygon vertex or
/// on an intersection of an edge with the kink line <n1 - n2, g(s)> = 0.
/// Ties break to the earliest candidate (vertices in order, then edge
/// intersections in edge order).
SubproblemResult solve_subproblem(const SmoothObjective& v, const SectorCone& c,
                                  const FeasiblePolygon& omega, const Vec2& z);

struct ArmijoResult {
  double t;  // accepted step, delta^n
  int n;
};

/// Cone-order Armijo rule: largest t = delta^n, n = 0,1,..., such that
/// V(z) + beta t JV(z) d - V(z + t d) lies in the cone. Throws
/// LineSearchExhaustedError when no n <= armijo_max_pow qualifies.
ArmijoResult armijo_step(const SmoothObjective& v, const SectorCone& c,
                         const Vec2& z, const Vec2& d, const SolverParams& params);

/// The improved conditional gradient iteration: subproblem, stop test,
/// Armijo step, update, with one record per visited iterate (the final
/// record carries t = 0).
IterationTrace icgm_run(const SmoothObjective& v, const SectorCone& c,
                        const FeasiblePolygon& omega, const Vec2& z0,
                        const SolverParams& params);

/// Sphere point corresponding to the tangent-plane solution z at the anchor.
SpherePoint lift_to_sphere(const SpherePoint& anchor, const Vec2& z);

}  // namespace icgm
