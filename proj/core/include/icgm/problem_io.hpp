#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "icgm/cgm_engine.hpp"

namespace icgm {

struct ObjectiveSpec {
  enum class Kind { Linear, Logmap, Builtin };
  Kind kind = Kind::Linear;
  Mat2 a = -Mat2::Identity();        // Linear
  Vec2 b = Vec2::Zero();             // Linear
  Vec3 eval_point = Vec3(0, 0, 1);   // Logmap
  std::string builtin_name;          // Builtin: objective of a named instance
};

/// Parsed representation of a problem file; see the README for the schema.
struct ProblemFile {
  Vec3 anchor = Vec3(0, 0, 1);
  Vec2 cone_d1 = Vec2(1, 0);
  Vec2 cone_d2 = Vec2(0, 1);
  std::vector<Vec2> polygon;
  ObjectiveSpec objective;
  Vec2 start = Vec2::Zero();
  SolverParams params;
};

/// Fully constructed problem, ready for the solver.
struct Instance {
  SpherePoint anchor;
  SectorCone cone;
  FeasiblePolygon polygon;
  SmoothObjective objective;
  Vec2 start;
  SolverParams params;
};

ProblemFile parse_problem(const std::string& text);
ProblemFile load_problem(const std::string& path);
std::string serialize_problem(const ProblemFile& pf);

/// Validates fields and builds the domain types. Throws ParseError,
/// DegenerateConeError, NonConvexPolygonError, or InvalidParamsError.
Instance make_instance(const ProblemFile& pf);

const std::vector<std::string>& builtin_names();
ProblemFile builtin_problem(const std::string& name);

/// Seeded random instance: uniform anchor on the sphere, cone opening in
/// [pi/6, 5pi/6] at a random orientation, polygon from the convex hull of
/// 5-9 points in [-1,1]^2, random linear objective, start at the vertex
/// centroid.
ProblemFile random_problem(std::uint64_t seed);

/// CSV with header k,z1,z2,theta,s1,s2,t,phi; one row per record.
std::string trace_csv(const IterationTrace& trace);

/// JSON summary: status, iterations, final_z, final_theta, sphere_point.
std::string summary_json(const IterationTrace& trace, const Instance& inst);

}  // namespace icgm
