#include "icgm/problem_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

namespace icgm {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double x) {
  if (x == 0.0) x = 0.0;  // normalize -0
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string fmt_list(const double* xs, int n) {
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (i) out += ' ';
    out += fmt(xs[i]);
  }
  return out;
}

struct Field {
  std::string value;
  int line;
};

using FieldMap = std::map<std::string, Field>;

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<double> parse_numbers(const Field& f, const std::string& key,
                                  int expected) {
  std::istringstream in(f.value);
  std::vector<double> out;
  double x;
  while (in >> x) out.push_back(x);
  std::string leftover;
  if (!in.eof() && (in.clear(), in >> leftover)) {
    throw ParseError("line " + std::to_string(f.line) + ": field '" + key +
                     "': expected numbers, got '" + leftover + "'");
  }
  if (expected >= 0 && static_cast<int>(out.size()) != expected) {
    throw ParseError("line " + std::to_string(f.line) + ": field '" + key +
                     "': expected " + std::to_string(expected) + " numbers, got " +
                     std::to_string(out.size()));
  }
  return out;
}

std::vector<std::vector<double>> parse_tuples(const Field& f, const std::string& key,
                                              int arity) {
  std::vector<std::vector<double>> out;
  std::istringstream groups(f.value);
  std::string group;
  while (std::getline(groups, group, ';')) {
    out.push_back(parse_numbers({trim(group), f.line}, key, arity));
  }
  return out;
}

const Field& require(const FieldMap& fields, const std::string& key) {
  const auto it = fields.find(key);
  if (it == fields.end()) {
    throw ParseError("missing required field '" + key + "'");
  }
  return it->second;
}

FieldMap read_fields(const std::string& text) {
  FieldMap fields;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'key = value', got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    if (fields.count(key)) {
      throw ParseError("line " + std::to_string(line_no) + ": duplicate field '" +
                       key + "'");
    }
    fields[key] = {trim(line.substr(eq + 1)), line_no};
  }
  return fields;
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
  const FieldMap fields = read_fields(text);
  ProblemFile pf;

  const auto anchor = parse_numbers(require(fields, "anchor"), "anchor", 3);
  pf.anchor = Vec3(anchor[0], anchor[1], anchor[2]);

  const Field& cone = require(fields, "cone");
  const auto gens = parse_tuples(cone, "cone", 2);
  if (gens.size() != 2) {
    throw ParseError("line " + std::to_string(cone.line) +
                     ": field 'cone': expected two generators separated by ';'");
  }
  pf.cone_d1 = Vec2(gens[0][0], gens[0][1]);
  pf.cone_d2 = Vec2(gens[1][0], gens[1][1]);

  const Field& poly = require(fields, "polygon");
  for (const auto& v : parse_tuples(poly, "polygon", 2)) {
    pf.polygon.emplace_back(v[0], v[1]);
  }

  const Field& obj = require(fields, "objective");
  std::istringstream obj_in(obj.value);
  std::string kind, rest;
  obj_in >> kind;
  if (kind == "linear") {
    pf.objective.kind = ObjectiveSpec::Kind::Linear;
    const auto rows = parse_tuples(require(fields, "A"), "A", 2);
    if (rows.size() != 2) {
      throw ParseError("field 'A': expected two rows separated by ';'");
    }
    pf.objective.a << rows[0][0], rows[0][1], rows[1][0], rows[1][1];
    const auto b = parse_numbers(require(fields, "b"), "b", 2);
    pf.objective.b = Vec2(b[0], b[1]);
  } else if (kind == "logmap") {
    pf.objective.kind = ObjectiveSpec::Kind::Logmap;
    const auto ep = parse_numbers(require(fields, "eval_point"), "eval_point", 3);
    pf.objective.eval_point = Vec3(ep[0], ep[1], ep[2]);
  } else if (kind == "builtin") {
    pf.objective.kind = ObjectiveSpec::Kind::Builtin;
    if (!(obj_in >> rest)) {
      throw ParseError("line " + std::to_string(obj.line) +
                       ": field 'objective': 'builtin' needs an instance name");
    }
    pf.objective.builtin_name = rest;
  } else {
    throw ParseError("line " + std::to_string(obj.line) +
                     ": field 'objective': unknown kind '" + kind + "'");
  }

  const auto start = parse_numbers(require(fields, "start"), "start", 2);
  pf.start = Vec2(start[0], start[1]);

  const auto scalar = [&](const char* key, double& out) {
    const auto it = fields.find(key);
    if (it != fields.end()) out = parse_numbers(it->second, key, 1)[0];
  };
  scalar("beta", pf.params.beta);
  scalar("delta", pf.params.delta);
  scalar("tol", pf.params.tol_station);
  double tmp;
  const auto integer = [&](const char* key, int& out) {
    const auto it = fields.find(key);
    if (it != fields.end()) {
      tmp = parse_numbers(it->second, key, 1)[0];
      out = static_cast<int>(tmp);
    }
  };
  integer("max_iter", pf.params.max_iter);
  integer("armijo_max_pow", pf.params.armijo_max_pow);

  return pf;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open problem file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

std::string serialize_problem(const ProblemFile& pf) {
  std::ostringstream out;
  out << "# icgm problem file\n";
  out << "anchor = " << fmt_list(pf.anchor.data(), 3) << "\n";
  out << "cone = " << fmt_list(pf.cone_d1.data(), 2) << " ; "
      << fmt_list(pf.cone_d2.data(), 2) << "\n";
  out << "polygon =";
  for (size_t i = 0; i < pf.polygon.size(); ++i) {
    out << (i ? " ; " : " ") << fmt_list(pf.polygon[i].data(), 2);
  }
  out << "\n";
  switch (pf.objective.kind) {
    case ObjectiveSpec::Kind::Linear: {
      out << "objective = linear\n";
      const Mat2& a = pf.objective.a;
      out << "A = " << fmt(a(0, 0)) << ' ' << fmt(a(0, 1)) << " ; " << fmt(a(1, 0))
          << ' ' << fmt(a(1, 1)) << "\n";
      out << "b = " << fmt_list(pf.objective.b.data(), 2) << "\n";
      break;
    }
    case ObjectiveSpec::Kind::Logmap:
      out << "objective = logmap\n";
      out << "eval_point = " << fmt_list(pf.objective.eval_point.data(), 3) << "\n";
      break;
    case ObjectiveSpec::Kind::Builtin:
      out << "objective = builtin " << pf.objective.builtin_name << "\n";
      break;
  }
  out << "start = " << fmt_list(pf.start.data(), 2) << "\n";
  out << "beta = " << fmt(pf.params.beta) << "\n";
  out << "delta = " << fmt(pf.params.delta) << "\n";
  out << "tol = " << fmt(pf.params.tol_station) << "\n";
  out << "max_iter = " << pf.params.max_iter << "\n";
  out << "armijo_max_pow = " << pf.params.armijo_max_pow << "\n";
  return out.str();
}

Instance make_instance(const ProblemFile& pf) {
  pf.params.validate();
  SpherePoint anchor(pf.anchor);
  SectorCone cone = make_cone(pf.cone_d1, pf.cone_d2);
  FeasiblePolygon polygon(pf.polygon);

  ObjectiveSpec spec = pf.objective;
  if (spec.kind == ObjectiveSpec::Kind::Builtin) {
    spec = builtin_problem(spec.builtin_name).objective;
  }
  SmoothObjective objective;
  switch (spec.kind) {
    case ObjectiveSpec::Kind::Linear:
      objective = linear_objective(spec.a, spec.b);
      break;
    case ObjectiveSpec::Kind::Logmap:
      objective = logmap_objective(anchor, SpherePoint(spec.eval_point));
      break;
    case ObjectiveSpec::Kind::Builtin:
      throw ParseError("builtin objective resolved to another builtin reference");
  }
  return Instance{anchor, cone, std::move(polygon), std::move(objective), pf.start,
                  pf.params};
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "linear_square", "rotated_cone_triangle", "logmap_near", "logmap_far"};
  return names;
}

ProblemFile builtin_problem(const std::string& name) {
  ProblemFile pf;
  if (name == "linear_square") {
    pf.polygon = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    return pf;
  }
  if (name == "rotated_cone_triangle") {
    const double a = 0.3;
    pf.cone_d1 = Vec2(std::cos(a), std::sin(a));
    pf.cone_d2 = Vec2(-std::sin(a), std::cos(a));
    pf.polygon = {{0, 0}, {2, 0}, {0.5, 1.5}};
    pf.objective.a << -1.0, -0.2, 0.1, -0.8;
    pf.objective.b = Vec2(0.1, -0.3);
    pf.start = Vec2(0.5, 0.5);
    return pf;
  }
  if (name == "logmap_near" || name == "logmap_far") {
    const SpherePoint anchor(Vec3(0, 0, 1));
    const TangentBasis basis = make_basis(anchor);
    const Vec2 offset = name == "logmap_near" ? Vec2(0.1, 0.0) : Vec2(0.54, 0.72);
    pf.objective.kind = ObjectiveSpec::Kind::Logmap;
    pf.objective.eval_point = exp_map(anchor, from_coords(basis, offset)).coords();
    if (name == "logmap_near") {
      pf.polygon = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
      pf.start = Vec2(0.2, 0.2);
    } else {
      pf.polygon = {{-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}};
      pf.start = Vec2(0, 0);
    }
    return pf;
  }
  throw ParseError("unknown builtin instance '" + name + "'");
}

ProblemFile random_problem(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> opening(kPi / 6.0, 5.0 * kPi / 6.0);
  std::uniform_real_distribution<double> box(-1.0, 1.0);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  std::uniform_int_distribution<int> npts(5, 9);

  ProblemFile pf;

  Vec3 a(gauss(rng), gauss(rng), gauss(rng));
  while (a.norm() < 1e-6) a = Vec3(gauss(rng), gauss(rng), gauss(rng));
  pf.anchor = a.normalized();

  const double phi = angle(rng);
  const double omega = opening(rng);
  pf.cone_d1 = Vec2(std::cos(phi), std::sin(phi));
  pf.cone_d2 = Vec2(std::cos(phi + omega), std::sin(phi + omega));

  // Convex hull (monotone chain, strict turns) of random points; redraw
  // until the hull is a genuine polygon.
  for (;;) {
    const int n = npts(rng);
    std::vector<Vec2> pts;
    for (int i = 0; i < n; ++i) pts.emplace_back(box(rng), box(rng));
    std::sort(pts.begin(), pts.end(), [](const Vec2& u, const Vec2& v) {
      return u(0) < v(0) || (u(0) == v(0) && u(1) < v(1));
    });
    const auto cross = [](const Vec2& o, const Vec2& p, const Vec2& q) {
      return (p(0) - o(0)) * (q(1) - o(1)) - (p(1) - o(1)) * (q(0) - o(0));
    };
    std::vector<Vec2> hull;
    for (int pass = 0; pass < 2; ++pass) {
      const size_t base = hull.size();
      for (const Vec2& p : pts) {
        while (hull.size() >= base + 2 &&
               cross(hull[hull.size() - 2], hull.back(), p) <= 1e-12) {
          hull.pop_back();
        }
        hull.push_back(p);
      }
      hull.pop_back();
      std::reverse(pts.begin(), pts.end());
    }
    if (hull.size() >= 3) {
      pf.polygon = hull;
      break;
    }
  }

  pf.objective.a << coef(rng), coef(rng), coef(rng), coef(rng);
  pf.objective.b = Vec2(0.5 * box(rng), 0.5 * box(rng));

  Vec2 centroid = Vec2::Zero();
  for (const Vec2& v : pf.polygon) centroid += v;
  pf.start = centroid / static_cast<double>(pf.polygon.size());

  return pf;
}

std::string trace_csv(const IterationTrace& trace) {
  std::string out = "k,z1,z2,theta,s1,s2,t,phi\n";
  for (const IterationRecord& r : trace.records) {
    out += std::to_string(r.k) + ',' + fmt(r.z(0)) + ',' + fmt(r.z(1)) + ',' +
           fmt(r.theta) + ',' + fmt(r.s(0)) + ',' + fmt(r.s(1)) + ',' + fmt(r.t) +
           ',' + fmt(r.phi_value) + '\n';
  }
  return out;
}

std::string summary_json(const IterationTrace& trace, const Instance& inst) {
  nlohmann::json j;
  switch (trace.status) {
    case SolveStatus::Converged:
      j["status"] = "converged";
      break;
    case SolveStatus::MaxIterations:
      j["status"] = "max_iterations";
      break;
    case SolveStatus::LineSearchFailed:
      j["status"] = "line_search_failed";
      break;
  }
  j["iterations"] = trace.records.size() - 1;
  j["final_z"] = {trace.final_z(0), trace.final_z(1)};
  j["final_theta"] = trace.records.back().theta;
  const SpherePoint lifted = lift_to_sphere(inst.anchor, trace.final_z);
  j["sphere_point"] = {lifted.coords()(0), lifted.coords()(1), lifted.coords()(2)};
  return j.dump(2) + "\n";
}

}  // namespace icgm
