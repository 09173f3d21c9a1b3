#pragma once

#include <array>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace fricke {

// Half-trace data for a four-holed sphere: boundary curves with half-traces
// a, b, c, d and the three pairs of interior curves, each pair sharing the
// same four boundary intersections. Geometric data has every entry >= 1.
struct FhsTraces {
    double a = 1, b = 1, c = 1, d = 1;
    double x = 1, xbar = 1;
    double y = 1, ybar = 1;
    double z = 1, zbar = 1;
};

bool geometric(const FhsTraces& t);

// The four boundary combinations that interior lengths determine:
// (ad+bc, ac+bd, ab+cd, a^2+b^2+c^2+d^2+4abcd).
struct Invariant4 {
    double f1 = 0, f2 = 0, f3 = 0, f4 = 0;
};

Invariant4 boundary_invariants(double a, double b, double c, double d);

// The same four quantities computed from the interior side:
// (yz-(x+xbar)/2, xy-(z+zbar)/2, xz-(y+ybar)/2, 1-4xyz+x*xbar+y*ybar+z*zbar).
Invariant4 interior_invariants(double x, double xbar, double y, double ybar,
                               double z, double zbar);

// Signed residual of the basic identity x + xbar + 2(ad+bc) - 2yz, zero on
// consistent surfaces.
double check_basic_identity(const FhsTraces& t);

// Companion half-traces solved from the product identities:
// xbar = 2(yz-(ad+bc))-x and cyclically. geometric is false when any
// companion lands below 1, which the identities allow for synthetic input.
struct BarTriple {
    double xbar = 0, ybar = 0, zbar = 0;
    bool geometric = false;
};

BarTriple bar_traces_from(double a, double b, double c, double d,
                          double x, double y, double z);

// Value of the ten-term trace identity
// a^2+b^2+c^2+d^2+x^2+y^2+z^2+4abcd-1-2xyz+2x(ad+bc)+2y(ab+cd)+2z(ac+bd),
// zero on consistent surfaces.
double tracepoly_residual(double a, double b, double c, double d,
                          double x, double y, double z);

// Residuals of the five trace identities: the three product identities in
// f-slot order, the quartic identity, then the ten-term polynomial.
struct ConsistencyReport {
    std::array<double, 5> residuals{};
    double worst = 0;
};

ConsistencyReport check_consistency(const FhsTraces& t);

enum class SymmetryCase { all_equal, three_equal, two_pairs };

// residual holds the worst invariant mismatch among the returned quadruples,
// or the gap that emptied the list.
struct SymmetricSolve {
    std::vector<std::array<double, 4>> solutions;
    double residual = 0;
};

// All boundary quadruples (a,b,c,d) of the requested symmetry type with the
// given invariants: a=b=c=d, a=b=c with d free, or a=d, b=c. Candidates are
// re-verified against all four invariants before being returned; solutions
// are sorted by ascending a.
SymmetricSolve solve_boundary_symmetric(const Invariant4& f, SymmetryCase which,
                                        double tol = 1e-9);

// Best-effort numeric search for boundary quadruples with no assumed
// symmetry: Newton iteration on the two planar curves cut out by the
// invariants, seeded on a grid in the (c,d) plane. May miss roots; every
// returned quadruple reproduces the invariants within tol * scale.
std::vector<std::array<double, 4>> solve_boundary_general(const Invariant4& f,
                                                          double tol = 1e-9);

// Exact-coefficient univariate polynomial, index = exponent.
using RatPoly = std::vector<mpq_class>;

struct Invariant4Q {
    mpq_class f1, f2, f3, f4;
};

// Sylvester resultants of the two planar curves, eliminating each variable
// in turn. ok asserts both degrees are 28 with leading coefficient exactly
// 256 (f1-f2)^4 (f1+f2)^4.
struct ResultantReport {
    RatPoly in_c;  // c eliminated: a polynomial in d
    RatPoly in_d;  // d eliminated: a polynomial in c
    int degree_c = -1;
    int degree_d = -1;
    mpq_class lead_c, lead_d;
    mpq_class expected_lead;
    bool ok = false;
};

ResultantReport resultant_check(const Invariant4Q& f);

// Two non-isometric surfaces with identical interior data: boundary
// half-traces (2,2,2,3) versus (r,r,r,s) with r = sqrt(7/2-sqrt(6)),
// s = sqrt(79/2+15 sqrt(6)), both carrying x = y = z equal to the real root
// of 2t^3-3t^2-60t-116 and companions solved from the product identities.
std::pair<FhsTraces, FhsTraces> counterexample_pair();

}  // namespace fricke
