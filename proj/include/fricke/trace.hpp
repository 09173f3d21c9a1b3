#pragma once

// Trace coordinates for hyperbolic structures on the one-holed torus.
// A closed geodesic of length L has holonomy of trace 2*cosh(L/2); every
// conversion between lengths and traces in this library goes through here.

#include <string_view>
#include <utility>
#include <vector>

namespace fricke {

// 2*cosh(L/2).  Requires L > 0.
double trace_from_length(double length);

// 2*acosh(t/2).  Requires t > 2.
double length_from_trace(double trace);

// Length for a trace given as log(t).  Stable when t overflows double.
double length_from_log_trace(double log_trace);

struct Mat2 {
  double a = 1, b = 0, c = 0, d = 1;

  double trace() const { return a + d; }
  double det() const { return a * d - b * c; }
  // Inverse assuming det = 1.
  Mat2 inverse() const { return {d, -b, -c, a}; }
};

Mat2 operator*(const Mat2& m, const Mat2& n);

// Generator matrices A, B in SL(2,R) with tr A = x, tr B = y, tr AB = z.
// Normal form: A diagonal with eigenvalue lambda > 1 (lambda + 1/lambda = x),
// B has b12 = 1 and entries fixed by y and z.  Requires x > 2.
std::pair<Mat2, Mat2> realize_generators(double x, double y, double z);

// Trace of the word evaluated at the matrices A, B.  Words are strings over
// the letters A, B with optional integer exponents ("AB", "AB^-1",
// "ABA^-1B^-1"); lowercase a, b abbreviate the inverses.  The word must be
// nonempty.
double word_trace(const Mat2& A, const Mat2& B, std::string_view word);

// tr[A,B] = x^2 + y^2 + z^2 - xyz - 2, symmetric in x, y, z (evaluated on
// sorted arguments so the symmetry is exact in floating point).
double commutator_trace(double x, double y, double z);

// f(t) = cosh(a1*t) + cosh(a2*t) - sum_k cosh(bs[k]*t), scanned on (0, t_max].
struct CoshSumSpec {
  double a1 = 0;
  double a2 = 0;
  std::vector<double> bs;
  double t_max = 50.0;
  int grid_points = 10000;
};

struct ZeroCountReport {
  int count = 0;
  std::vector<double> zeros;  // one refined root per strict sign change
  bool plateau = false;       // |f| < 1e-13 on some grid stretch
};

// Counts strictly positive zeros of f by grid scan plus bisection.  Grid
// plateaus where |f| stays below 1e-13 are flagged, not counted.
ZeroCountReport count_positive_zeros(const CoshSumSpec& spec);

}  // namespace fricke
