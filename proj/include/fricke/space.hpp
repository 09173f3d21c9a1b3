#pragma once

// Teichmüller space of one-holed tori in trace coordinates: validity of a
// trace triple, fixed-boundary slices, the leaf foliation ell(gamma) = const
// with an explicit hyperbolic-angle coordinate, and basis changes.

#include <string>

#include "fricke/curves.hpp"

namespace fricke {

// Traces of the curves (1,0), (0,1), (1,1) at a marked hyperbolic structure.
// Valid points have x,y,z > 2 and R := x^2+y^2+z^2-xyz <= 0 (R = 0 cusped).
struct FrickePoint {
  double x = 3, y = 3, z = 3;
};

struct Validation {
  bool valid = false;
  std::string diagnostic;  // names the violated condition when invalid
  double relation = 0;     // R = x^2+y^2+z^2-xyz
  double boundary = 0;     // boundary length when valid
};

Validation validate(const FrickePoint& point);

// Relation value R = x^2+y^2+z^2-xyz (= commutator trace + 2).
double relation_value(const FrickePoint& point);

// Boundary geodesic length: 2 cosh(eps/2) = |commutator trace|; 0 iff R = 0.
double boundary_length(const FrickePoint& point);

// Slice of Teichmüller space with fixed boundary length eps; on it the
// relation takes the constant value R_eps = 2 - 2 cosh(eps/2) <= 0.
struct TeichSlice {
  double eps = 0;
  double r_eps = 0;

  static TeichSlice from_boundary(double eps);
};

// Point on the leaf {x fixed} of the slice.  In u = (y+z)/2, w = (y-z)/2 the
// leaf is the hyperbola branch (x-2)u^2 - (x+2)w^2 = x^2 - R_eps, traced by
//   u = sqrt((x^2-R_eps)/(x-2)) cosh(theta),
//   w = sqrt((x^2-R_eps)/(x+2)) sinh(theta).
FrickePoint leaf_point(const TeichSlice& slice, double x, double theta);

// Smallest z (equivalently y) attained on the leaf: 2 sqrt((x^2-R_eps)/(x^2-4)).
double leaf_min_coordinate(const TeichSlice& slice, double x);

double trace_of_slope(const FrickePoint& point, Slope s);
double log_trace_of_slope(const FrickePoint& point, Slope s);

// Traces in the marking whose basis curves are (gamma, gamma2), which must
// intersect once: (tr gamma, tr gamma2, tr mediant).  Boundary length is a
// marking invariant.
FrickePoint change_basis(const FrickePoint& point, Slope gamma, Slope gamma2);

// The symmetric point (t,t,t); t = 3 is the modular torus.
FrickePoint symmetric_family(double t);

}  // namespace fricke
