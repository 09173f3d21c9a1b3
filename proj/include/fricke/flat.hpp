#pragma once

// The flat (Euclidean) torus prototype: curve lengths |p tau + q| on the
// tau plane, equal-length loci as Poincare geodesics with exact endpoint
// data, and the sums-of-two-coprime-squares multiplicity construction.

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "fricke/curves.hpp"

namespace fricke {

struct TauPoint {
  double re = 0;
  double im = 1;  // > 0
};

// Boundary point of the upper half-plane with its minimal integer
// polynomial: a t^2 + b t + c = 0, degree <= 2 (a = 0 for rationals).
struct BoundaryPoint {
  bool at_infinity = false;
  long long a = 0, b = 0, c = 0;
  double approx = 0;
};

enum class GeodesicKind { vertical, circle };

// Poincare geodesic cut out by the integer equation
// A |tau|^2 + 2 B Re(tau) + C = 0.
struct PoincareGeodesic {
  GeodesicKind kind = GeodesicKind::vertical;
  double foot = 0;                // vertical: the real part
  double center = 0, radius = 0;  // circle
  BoundaryPoint e1, e2;           // endpoints, left to right then infinity
  long long A = 0, B = 0, C = 0;
};

// |p tau + q|.
double flat_length(const TauPoint& tau, Slope s);

// The set where two distinct curves have equal flat length, always a
// vertical line or a circle centered on the real axis; its endpoint data is
// exact (the discriminant (p1 q2 - p2 q1)^2 is a perfect square, so the
// endpoints are rational or infinite).
PoincareGeodesic equal_locus_flat(Slope s1, Slope s2);

// Number of unordered pairs {a, b} of coprime positive integers with
// a^2 + b^2 = N.
long long coprime_rep_count(const mpz_class& N);

struct HighMultiplicity {
  mpz_class N;
  std::vector<std::pair<mpz_class, mpz_class>> representations;  // a <= b
};

// N = product of the n smallest primes = 1 (mod 4), together with all its
// coprime representations; there are 2^(n-1) of them.
HighMultiplicity construct_high_multiplicity(int n);

}  // namespace fricke
