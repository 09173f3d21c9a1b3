#pragma once

// The equal-length locus of two simple closed curves inside a fixed-boundary
// slice.  The locus is traced leaf by leaf: on each leaf {tr(gamma) = const}
// of the slice the length difference crosses zero exactly once, so one
// bracketed bisection per leaf pins the crossing.

#include <utility>
#include <vector>

#include "fricke/space.hpp"

namespace fricke {

struct LocusPoint {
  double x_of_gamma = 0;  // trace of the companion gamma on this leaf
  double theta = 0;       // leaf angle of the crossing
  FrickePoint point;      // the crossing, in the standard marking
};

struct LocusPolyline {
  TeichSlice slice;
  Slope gamma, gamma2;
  std::vector<LocusPoint> points;
};

// Companion classes of a pair of distinct curves: the primitive parts of the
// difference and sum of their homology classes, ordered so gamma < gamma2.
// Each input curve crosses a companion the same number of times as the other
// input does, which is what makes tr(gamma) a coordinate on the locus.
std::pair<Slope, Slope> companion_curves(Slope alpha, Slope beta);

// The unique point of the leaf {tr(gamma) = x_of_gamma} where alpha and beta
// have equal length, returned in the standard marking.  The theta bracket
// doubles outward from [-1,1]; expanding past theta_cap without a sign
// change is an error (it would contradict existence of the crossing).
FrickePoint locus_point_on_leaf(const TeichSlice& slice, Slope alpha, Slope beta,
                                double x_of_gamma, double tol,
                                double theta_cap = 64.0);

// One crossing per grid value, assembled in grid order.  The grid must be
// strictly monotone with every value > 2; leaves are independent, so they
// may be solved in parallel.
LocusPolyline trace_locus(const TeichSlice& slice, Slope alpha, Slope beta,
                          const std::vector<double>& x_grid, double tol,
                          int jobs = 1, double theta_cap = 64.0);

}  // namespace fricke
