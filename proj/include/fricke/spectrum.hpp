#pragma once

#include "fricke/curves.hpp"
#include "fricke/space.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace fricke {

struct SpectrumEntry {
    Slope slope;
    double trace = 0;
    double length = 0;
};

struct MultiplicityClass {
    double length = 0;  // mean length of the members
    double tolerance = 0;
    std::vector<Slope> members;
};

// All unoriented primitive slopes with geodesic length <= l_max, sorted by
// (length, slope).  A cap below the systole yields an empty list.  jobs > 1
// splits disjoint Farey subtrees across threads; output does not depend on
// the schedule.
std::vector<SpectrumEntry> enumerate_simple(const FrickePoint& point, double l_max,
                                            int jobs = 1);

// Single-linkage classes of the spectrum: a new class starts whenever the gap
// between consecutive sorted lengths exceeds tol.  tol = 0 groups exactly
// equal lengths.
std::vector<MultiplicityClass> multiplicity_histogram(const FrickePoint& point,
                                                      double l_max, double tol,
                                                      int jobs = 1);

// Pairs of slopes at equal length (within tol) that no isometry of the
// surface exchanges, i.e. whose slope orbits differ.  Empty means the
// isometry property holds up to l_max at resolution tol.
std::vector<std::pair<Slope, Slope>> check_markoff_property(const FrickePoint& point,
                                                            double l_max, double tol,
                                                            int jobs = 1);

// Lengths of dehn_twist(alpha0, alpha, k) for k = 0..k_max.  They satisfy
// |l(alpha_k) - k * int(alpha, alpha0) * l(alpha)| <= l(alpha0).
std::vector<double> twist_sequence(const FrickePoint& point, Slope alpha, Slope alpha0,
                                   int k_max);

struct RatioEstimate {
    long long count = 0;  // twists of beta0 no longer than the i-th twist of alpha0
    long long steps = 0;  // i
    double value = 0;     // count / i
    double bound = 0;     // proven distance from l(alpha)/l(beta)
};

// Counting estimator for the length ratio l(alpha)/l(beta): compares the
// twist sequence of beta0 about beta against the i-th twist of alpha0 about
// alpha.
RatioEstimate ratio_estimate(const FrickePoint& point, Slope alpha, Slope beta,
                             Slope alpha0, Slope beta0, long long i);

struct OrderReversal {
    Slope alpha, beta;
    double margin_first = 0;   // l_first(beta) - l_first(alpha)
    double margin_second = 0;  // l_second(alpha) - l_second(beta)
};

// A pair of slopes strictly shorter-then-longer on `first` and strictly
// longer-then-shorter on `second`, if one exists with both lengths <= l_max
// on either surface.
std::optional<OrderReversal> find_order_reversal(const FrickePoint& first,
                                                 const FrickePoint& second,
                                                 double l_max);

struct EqualTraceFinding {
    Slope s1, s2;
    double t_star = 0;    // parameter of the symmetric family where traces agree
    double residual = 0;  // |P_s1(t_star) - P_s2(t_star)|, evaluated exactly
    std::vector<Slope> equal_trace_slopes;  // union of the two slope orbits
};

// Root of trace_polynomial(s1) - trace_polynomial(s2) on [t_lo, t_hi] for
// slopes in distinct orbits, located by a sign-change scan and polished by
// exact-arithmetic bisection to the last representable bit.
std::optional<EqualTraceFinding> find_equal_trace_parameter(Slope s1, Slope s2,
                                                            double t_lo, double t_hi);

// All crossings found among canonical orbit representatives with
// |p| + |q| <= complexity_cap, ordered by (t_star, s1, s2).
std::vector<EqualTraceFinding> scan_equal_trace(int complexity_cap, double t_lo,
                                                double t_hi);

}  // namespace fricke
