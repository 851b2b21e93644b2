#pragma once

#include <stdexcept>
#include <string>

namespace icgm {

// Log map / parallel transport are undefined between antipodal points.
struct AntipodalPointsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cone generators are zero, parallel, antiparallel, or span an angle >= pi.
struct DegenerateConeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonConvexPolygonError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TooFewVerticesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PointOutsideFeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// No Armijo power n <= armijo_max_pow satisfied the sufficient-decrease test.
struct LineSearchExhaustedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParamsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Problem-file syntax or schema violation; message carries line/field info.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace icgm
