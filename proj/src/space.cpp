#include "fricke/space.hpp"

#include <cmath>
#include <stdexcept>

#include "fricke/trace.hpp"

namespace fricke {

double relation_value(const FrickePoint& point) {
  return commutator_trace(point.x, point.y, point.z) + 2.0;
}

Validation validate(const FrickePoint& point) {
  Validation v;
  v.relation = relation_value(point);
  if (!(point.x > 2) || !(point.y > 2) || !(point.z > 2)) {
    v.diagnostic = "a coordinate is not greater than 2";
    return v;
  }
  if (v.relation > 0) {
    v.diagnostic = "relation x^2+y^2+z^2-xyz exceeds 0";
    return v;
  }
  v.valid = true;
  v.diagnostic = v.relation == 0 ? "valid, cusped" : "valid";
  v.boundary = 2.0 * std::acosh(1.0 - v.relation / 2.0);
  return v;
}

double boundary_length(const FrickePoint& point) {
  const Validation v = validate(point);
  if (!v.valid)
    throw std::domain_error("boundary_length: invalid point (" + v.diagnostic + ")");
  return v.boundary;
}

TeichSlice TeichSlice::from_boundary(double eps) {
  if (!(eps >= 0))
    throw std::domain_error("TeichSlice: boundary length must be nonnegative");
  return {eps, 2.0 - 2.0 * std::cosh(eps / 2.0)};
}

FrickePoint leaf_point(const TeichSlice& slice, double x, double theta) {
  if (!(x > 2)) throw std::domain_error("leaf_point: requires x > 2");
  const double s = x * x - slice.r_eps;  // > 0
  const double u = std::sqrt(s / (x - 2)) * std::cosh(theta);
  const double w = std::sqrt(s / (x + 2)) * std::sinh(theta);
  return {x, u + w, u - w};
}

double leaf_min_coordinate(const TeichSlice& slice, double x) {
  if (!(x > 2)) throw std::domain_error("leaf_min_coordinate: requires x > 2");
  return 2.0 * std::sqrt((x * x - slice.r_eps) / (x * x - 4));
}

double trace_of_slope(const FrickePoint& point, Slope s) {
  return trace_of_slope(point.x, point.y, point.z, s);
}

double log_trace_of_slope(const FrickePoint& point, Slope s) {
  return log_trace_of_slope(point.x, point.y, point.z, s);
}

FrickePoint change_basis(const FrickePoint& point, Slope gamma, Slope gamma2) {
  if (intersection_number(gamma, gamma2) != 1)
    throw std::domain_error("change_basis: basis curves must intersect once");
  const Slope mediant(gamma.p + gamma2.p, gamma.q + gamma2.q);
  return {trace_of_slope(point, gamma), trace_of_slope(point, gamma2),
          trace_of_slope(point, mediant)};
}

FrickePoint symmetric_family(double t) {
  if (!(t >= 3)) throw std::domain_error("symmetric_family: requires t >= 3");
  return {t, t, t};
}

}  // namespace fricke
