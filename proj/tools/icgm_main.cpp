#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "icgm/problem_io.hpp"
#include "icgm/verification.hpp"

namespace {

using namespace icgm;

int run_solve(const std::string& problem_path, const std::string& trace_path,
              const std::string& summary_path, const std::optional<int>& max_iter,
              const std::optional<double>& beta, const std::optional<double>& delta,
              const std::optional<double>& tol) {
  ProblemFile pf = load_problem(problem_path);
  if (max_iter) pf.params.max_iter = *max_iter;
  if (beta) pf.params.beta = *beta;
  if (delta) pf.params.delta = *delta;
  if (tol) pf.params.tol_station = *tol;

  const Instance inst = make_instance(pf);
  const IterationTrace trace =
      icgm_run(inst.objective, inst.cone, inst.polygon, inst.start, inst.params);

  if (!trace_path.empty()) {
    std::ofstream out(trace_path);
    if (!out) throw ParseError("cannot write trace file '" + trace_path + "'");
    out << trace_csv(trace);
  }
  const std::string summary = summary_json(trace, inst);
  if (summary_path.empty()) {
    std::cout << summary;
  } else {
    std::ofstream out(summary_path);
    if (!out) throw ParseError("cannot write summary file '" + summary_path + "'");
    out << summary;
  }

  switch (trace.status) {
    case SolveStatus::Converged:
      return 0;
    case SolveStatus::MaxIterations:
      return 2;
    case SolveStatus::LineSearchFailed:
      return 3;
  }
  return 1;
}

int run_verify(const std::string& problem_path, double z1, double z2, double h) {
  const Instance inst = make_instance(load_problem(problem_path));
  const Vec2 z(z1, z2);
  if (!inst.polygon.contains(z)) {
    std::cerr << "error: candidate point is outside the feasible polygon\n";
    return 1;
  }
  const bool stationary =
      check_stationary(inst.objective, inst.cone, inst.polygon, z, h);
  const bool weakly_eff =
      check_weakly_efficient(inst.objective, inst.cone, inst.polygon, z, h);
  const bool c_convex =
      check_c_convex(inst.objective, inst.cone, inst.polygon, 10000);
  const double grid_tol = inst.objective.jacobian(z).norm() * h;
  std::printf("stationary: %s (grid h = %g, tolerance = %g)\n",
              stationary ? "yes" : "no", h, grid_tol);
  std::printf("weakly_efficient: %s (grid h = %g)\n", weakly_eff ? "yes" : "no", h);
  std::printf("c_convex(sampled): %s (10000 triples, tolerance = 1e-9)\n",
              c_convex ? "yes" : "no");
  return stationary ? 0 : 2;
}

int run_generate(const std::string& name, const std::optional<std::uint64_t>& seed) {
  ProblemFile pf;
  if (seed) {
    pf = random_problem(*seed);
  } else if (!name.empty()) {
    pf = builtin_problem(name);
  } else {
    throw ParseError("generate needs a builtin name or --seed");
  }
  std::cout << serialize_problem(pf);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conditional gradient solver for cone-order optimization on the sphere"};
  app.require_subcommand(1);

  std::string problem_path, trace_path, summary_path, name;
  std::optional<int> max_iter;
  std::optional<double> beta, delta, tol;
  double z1 = 0.0, z2 = 0.0, grid_h = 1e-2;
  std::optional<std::uint64_t> seed;

  CLI::App* solve = app.add_subcommand("solve", "Run the solver on a problem file");
  solve->add_option("problem", problem_path, "problem file")->required();
  solve->add_option("--trace", trace_path, "write the iteration trace CSV here");
  solve->add_option("--summary", summary_path,
                    "write the JSON summary here (default: stdout)");
  solve->add_option("--max-iter", max_iter, "override max_iter");
  solve->add_option("--beta", beta, "override the Armijo slope fraction");
  solve->add_option("--delta", delta, "override the backtracking ratio");
  solve->add_option("--tol", tol, "override the stationarity tolerance");

  CLI::App* verify =
      app.add_subcommand("verify", "Certify a candidate point on a grid");
  verify->add_option("problem", problem_path, "problem file")->required();
  verify->add_option("z1", z1, "candidate first coordinate")->required();
  verify->add_option("z2", z2, "candidate second coordinate")->required();
  verify->add_option("--grid-h", grid_h, "grid spacing (default 1e-2)");

  CLI::App* generate =
      app.add_subcommand("generate", "Emit a builtin or seeded random problem file");
  generate->add_option("name", name, "builtin instance name");
  generate->add_option("--seed", seed, "seed for a randomized instance");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      return run_solve(problem_path, trace_path, summary_path, max_iter, beta, delta,
                       tol);
    }
    if (verify->parsed()) return run_verify(problem_path, z1, z2, grid_h);
    return run_generate(name, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
