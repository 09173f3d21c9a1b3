#pragma once

// Simple closed curves on the one-holed torus, indexed by primitive slopes.
// Traces of curves are computed by the Farey mediant recursion
//   tr(v+w) = tr(v)*tr(w) - tr(v-w)   for Farey neighbors v, w,
// seeded by x = tr(1,0), y = tr(0,1), z = tr(1,1).

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace fricke {

// Unoriented primitive homotopy class.  Normal form: q > 0, or (p,q) = (1,0);
// (p,q) and (-p,-q) name the same curve.
struct Slope {
  long long p = 1;
  long long q = 0;

  Slope() = default;
  Slope(long long p_, long long q_);  // reduces and normalizes, rejects (0,0)

  friend bool operator==(const Slope&, const Slope&) = default;
  friend auto operator<=>(const Slope&, const Slope&) = default;

  std::string str() const;  // "p/q"
};

// Parses "p/q".  Non-reduced input is accepted and reduced; *reduced reports
// whether that happened so callers can warn.
Slope parse_slope(std::string_view text, bool* reduced = nullptr);

// Geometric intersection number |p1 q2 - q1 p2|.
long long intersection_number(Slope s1, Slope s2);

// Image of s under the k-fold Dehn twist about `along`:
// s + k * det(along, s) * along on homology.  Preserves intersection with
// `along` and primitivity.
Slope dehn_twist(Slope s, Slope along, long long k);

// Trace of the curve of slope s at the point with seed traces (x, y, z).
double trace_of_slope(double x, double y, double z, Slope s);

// log of the same trace, computed entirely in the log domain so deep slopes
// whose traces overflow binary64 still come out exact to ~1e-12.
double log_trace_of_slope(double x, double y, double z, Slope s);

// Integer polynomial P_s with P_s(t) = trace of s at the symmetric point
// (t,t,t).  At t=3 every primitive slope evaluates to 3x a Markoff number.
struct TracePolynomial {
  std::vector<mpz_class> coefficients;  // ascending degree, no trailing zeros

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  double operator()(double t) const;

  friend bool operator==(const TracePolynomial&, const TracePolynomial&) = default;

  std::string str() const;  // e.g. "t^3 - t^2 - t"
};

TracePolynomial operator*(const TracePolynomial& f, const TracePolynomial& g);
TracePolynomial operator-(const TracePolynomial& f, const TracePolynomial& g);

TracePolynomial trace_polynomial(Slope s);

// Orbit of s under the order-6 slope action of the isometry group of the
// symmetric torus, generated by g: (p,q) -> (-q, p-q) and the swap
// (p,q) -> (q,p).  Sorted; size divides 6.
std::vector<Slope> isometry_orbit(Slope s);

// Generator word for the curve of slope s, built along the Stern-Brocot path
// ((1,0) -> "A", (0,1) -> "B", mediant = right word followed by left word).
// Negative slopes use the reflection B -> B^-1 (lowercase letters invert).
std::string slope_word(Slope s);

}  // namespace fricke
