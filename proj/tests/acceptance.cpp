// Acceptance gate: thirteen checks, one line each, nonzero exit on failure.
//
// Each check pins concrete numbers with explicit tolerances; the timed ones
// also enforce their runtime budget.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fricke/fhs.hpp"
#include "fricke/flat.hpp"
#include "fricke/locus.hpp"
#include "fricke/markoff.hpp"
#include "fricke/spectrum.hpp"
#include "fricke/trace.hpp"

using namespace fricke;

namespace {

int g_failures = 0;

void report(int idx, const char* label, bool ok, double seconds,
            const std::string& detail) {
    std::printf("%s %2d  %-42s [%6.2fs]%s%s\n", ok ? "pass" : "FAIL", idx, label,
                seconds, detail.empty() ? "" : "  ", detail.c_str());
    if (!ok) ++g_failures;
}

double slope_length(const FrickePoint& pt, Slope s) {
    return length_from_log_trace(log_trace_of_slope(pt, s));
}

FrickePoint random_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uxy(3.0, 6.0), u01(0.0, 1.0);
    for (;;) {
        double x = uxy(rng), y = uxy(rng);
        double disc = x * x * y * y - 4.0 * (x * x + y * y);
        if (disc <= 0) continue;
        double lo = (x * y - std::sqrt(disc)) / 2.0;
        double hi = (x * y + std::sqrt(disc)) / 2.0;
        FrickePoint pt{x, y, lo + (hi - lo) * u01(rng)};
        if (validate(pt).valid) return pt;
    }
}

Slope random_slope(std::mt19937_64& rng, int cap) {
    std::uniform_int_distribution<int> up(-cap, cap), uq(0, cap);
    for (;;) {
        int p = up(rng), q = uq(rng);
        if (p == 0 && q == 0) continue;
        return Slope(p, q);
    }
}

bool check_spectrum(std::string& detail) {
    auto classes = multiplicity_histogram({3.0, 3.0, 3.0},
                                          length_from_trace(300.0), 1e-9);
    const std::vector<std::pair<int, size_t>> expected{
        {3, 3}, {6, 3}, {15, 6}, {39, 6}, {87, 6}, {102, 6}, {267, 6}};
    if (classes.size() != expected.size()) {
        detail = "class count " + std::to_string(classes.size());
        return false;
    }
    for (size_t i = 0; i < expected.size(); ++i) {
        double trace = trace_from_length(classes[i].length);
        if (std::fabs(trace - expected[i].first) > 1e-9 ||
            classes[i].members.size() != expected[i].second) {
            detail = "class " + std::to_string(i) + " has trace " +
                     std::to_string(trace) + " mult " +
                     std::to_string(classes[i].members.size());
            return false;
        }
    }
    return true;
}

bool check_markoff(std::string& detail) {
    if (!verify_uniqueness(mpz_class(1000000)).empty()) {
        detail = "collision below 1e6";
        return false;
    }
    std::vector<std::array<long long, 3>> brute;
    for (long long x = 1; x <= 1000; ++x)
        for (long long y = 1; y <= x; ++y) {
            long long disc = 9 * x * x * y * y - 4 * (x * x + y * y);
            if (disc < 0) continue;
            long long s = std::llround(std::sqrt(static_cast<double>(disc)));
            while (s > 0 && s * s > disc) --s;
            while ((s + 1) * (s + 1) <= disc) ++s;
            if (s * s != disc) continue;
            if ((3 * x * y - s) % 2 != 0) continue;
            long long z = (3 * x * y - s) / 2;
            if (z >= 1 && z <= y) brute.push_back({x, y, z});
        }
    std::sort(brute.begin(), brute.end());
    auto triples = enumerate_triples(mpz_class(1000));
    std::vector<std::array<long long, 3>> got;
    for (const auto& t : triples)
        got.push_back({t.x.get_si(), t.y.get_si(), t.z.get_si()});
    std::sort(got.begin(), got.end());
    if (got != brute) {
        detail = "tree " + std::to_string(got.size()) + " vs brute " +
                 std::to_string(brute.size());
        return false;
    }
    return true;
}

bool check_pair(std::string& detail) {
    auto [m1, m2] = counterexample_pair();
    double xstar = (1.0 + std::cbrt(293.0 - 92.0 * std::sqrt(2.0)) +
                    std::cbrt(293.0 + 92.0 * std::sqrt(2.0))) /
                   2.0;
    double worst = 0.0;
    for (const FhsTraces* m : {&m1, &m2}) {
        Invariant4 f = boundary_invariants(m->a, m->b, m->c, m->d);
        worst = std::max({worst, std::fabs(f.f1 - 10.0), std::fabs(f.f2 - 10.0),
                          std::fabs(f.f3 - 10.0), std::fabs(f.f4 - 117.0)});
        double poly = std::fabs(tracepoly_residual(m->a, m->b, m->c, m->d, xstar,
                                                   xstar, xstar));
        if (poly >= 1e-9) {
            detail = "trace polynomial residual " + std::to_string(poly);
            return false;
        }
    }
    if (worst >= 1e-9) {
        detail = "invariant residual " + std::to_string(worst);
        return false;
    }
    std::array<double, 4> b1{m1.a, m1.b, m1.c, m1.d}, b2{m2.a, m2.b, m2.c, m2.d};
    std::sort(b1.begin(), b1.end());
    std::sort(b2.begin(), b2.end());
    double gap = 0.0;
    for (int i = 0; i < 4; ++i) gap = std::max(gap, std::fabs(b1[i] - b2[i]));
    if (gap <= 0.9) {
        detail = "boundary multisets close, gap " + std::to_string(gap);
        return false;
    }
    return true;
}

bool check_resultants(std::string& detail) {
    std::mt19937_64 rng(20260816);
    std::uniform_int_distribution<int> num(1, 9), den(1, 4);
    for (int i = 0; i < 10; ++i) {
        Invariant4Q f;
        do {
            f.f1 = mpq_class(num(rng), den(rng));
            f.f2 = mpq_class(num(rng), den(rng));
            f.f1.canonicalize();
            f.f2.canonicalize();
        } while (f.f1 == f.f2);
        f.f3 = mpq_class(num(rng), den(rng));
        f.f4 = mpq_class(num(rng), den(rng));
        f.f3.canonicalize();
        f.f4.canonicalize();
        ResultantReport rep = resultant_check(f);
        if (rep.degree_c != 28 || rep.degree_d != 28 || !rep.ok) {
            detail = "sample " + std::to_string(i) + " degrees " +
                     std::to_string(rep.degree_c) + "/" +
                     std::to_string(rep.degree_d) +
                     (rep.ok ? "" : " lead mismatch");
            return false;
        }
    }
    return true;
}

bool check_locus(std::string& detail) {
    TeichSlice slice = TeichSlice::from_boundary(0.0);
    const Slope alpha(1, 0), beta(0, 1);
    const double root8 = std::sqrt(8.0);
    const std::array<std::array<double, 4>, 2> pinned{{
        {3.0, 3.0, 3.0, 6.0},
        {4.0, root8, root8, 4.0},
    }};
    for (const auto& row : pinned) {
        FrickePoint pt = locus_point_on_leaf(slice, alpha, beta, row[0], 1e-12);
        double gap = std::fabs(slope_length(pt, alpha) - slope_length(pt, beta));
        double coord = std::max({std::fabs(pt.x - row[1]), std::fabs(pt.y - row[2]),
                                 std::fabs(pt.z - row[3])});
        if (gap >= 1e-9 || coord >= 1e-7) {
            detail = "leaf " + std::to_string(row[0]) + " gap " +
                     std::to_string(gap) + " coord error " + std::to_string(coord);
            return false;
        }
    }
    std::vector<double> grid;
    for (int i = 0; i < 20; ++i) grid.push_back(3.0 + i * (1.0 / 19.0));
    LocusPolyline line = trace_locus(slice, alpha, beta, grid, 1e-12);
    for (const auto& p : line.points)
        if (std::fabs(p.point.x - p.point.y) >= 1e-9) {
            detail = "asymmetric point on leaf " + std::to_string(p.x_of_gamma);
            return false;
        }
    return true;
}

bool check_flat(std::string& detail) {
    PoincareGeodesic circle = equal_locus_flat(Slope(1, 0), Slope(0, 1));
    if (circle.kind != GeodesicKind::circle || circle.center != 0.0 ||
        circle.radius != 1.0 || circle.e1.at_infinity || circle.e2.at_infinity ||
        std::min(circle.e1.approx, circle.e2.approx) != -1.0 ||
        std::max(circle.e1.approx, circle.e2.approx) != 1.0) {
        detail = "axis locus is not the unit circle";
        return false;
    }
    PoincareGeodesic wall = equal_locus_flat(Slope(1, 1), Slope(1, -1));
    if (wall.kind != GeodesicKind::vertical || wall.foot != 0.0) {
        detail = "diagonal locus is not the imaginary axis";
        return false;
    }
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> uang(0.05, M_PI - 0.05), us(-3.0, 3.0);
    for (int i = 0; i < 100; ++i) {
        double ang = uang(rng);
        TauPoint on_circle{circle.center + circle.radius * std::cos(ang),
                           circle.radius * std::sin(ang)};
        double l1 = flat_length(on_circle, Slope(1, 0));
        double l2 = flat_length(on_circle, Slope(0, 1));
        if (std::fabs(l1 - l2) > 1e-12 * std::max(1.0, l1)) {
            detail = "circle sample off by " + std::to_string(l1 - l2);
            return false;
        }
        TauPoint on_wall{wall.foot, std::exp(us(rng))};
        double l3 = flat_length(on_wall, Slope(1, 1));
        double l4 = flat_length(on_wall, Slope(1, -1));
        if (std::fabs(l3 - l4) > 1e-12 * std::max(1.0, l3)) {
            detail = "vertical sample off by " + std::to_string(l3 - l4);
            return false;
        }
    }
    return true;
}

bool check_two_squares(std::string& detail) {
    const std::array<std::pair<long, long long>, 4> pinned{
        {{5, 1}, {65, 2}, {1105, 4}, {32045, 8}}};
    long long doubling = 1;
    for (const auto& [n, count] : pinned) {
        long long got = coprime_rep_count(mpz_class(n));
        if (got != count || got != doubling) {
            detail = std::to_string(n) + " -> " + std::to_string(got);
            return false;
        }
        doubling *= 2;
    }
    return true;
}

bool check_twist_bounds(std::string& detail) {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> uk(1, 50);
    for (int i = 0; i < 100; ++i) {
        FrickePoint pt = random_point(rng);
        Slope alpha = random_slope(rng, 5);
        Slope alpha0 = random_slope(rng, 5);
        while (intersection_number(alpha, alpha0) == 0)
            alpha0 = random_slope(rng, 5);
        int k = uk(rng);
        long long m = intersection_number(alpha, alpha0);
        Slope alpha_k = dehn_twist(alpha0, alpha, k);
        double lhs = std::fabs(slope_length(pt, alpha_k) -
                               k * static_cast<double>(m) * slope_length(pt, alpha));
        double cap = slope_length(pt, alpha0) + 1e-9;
        if (lhs > cap) {
            detail = "sample " + std::to_string(i) + ": |deviation| " +
                     std::to_string(lhs) + " > " + std::to_string(cap);
            return false;
        }
    }
    return true;
}

bool check_ratio(std::string& detail) {
    const FrickePoint pt{3.0, 3.0, 6.0};
    const Slope alpha(1, 1), beta(1, 0), alpha0(1, 0), beta0(0, 1);
    const double target = std::acosh(3.0) / std::acosh(1.5);
    double l_beta = slope_length(pt, beta);
    double l_a0 = slope_length(pt, alpha0), l_b0 = slope_length(pt, beta0);
    for (long long i = 1; i <= 200; ++i) {
        RatioEstimate est = ratio_estimate(pt, alpha, beta, alpha0, beta0, i);
        double formula = ((l_a0 + l_b0) / (2.0 * l_beta) + 1.0) / i;
        if (std::fabs(est.bound - formula) > 1e-12 ||
            std::fabs(est.value - target) > est.bound) {
            detail = "i=" + std::to_string(i) + " error " +
                     std::to_string(std::fabs(est.value - target)) + " bound " +
                     std::to_string(est.bound);
            return false;
        }
    }
    return true;
}

bool check_reversal(std::string& detail) {
    const FrickePoint first{3.0, 3.0, 6.0};
    const FrickePoint second{4.0, 4.0, 8.0 - std::sqrt(32.0)};
    auto rev = find_order_reversal(first, second, length_from_trace(64.0));
    if (!rev) {
        detail = "no reversed pair found";
        return false;
    }
    auto diff = [&](double s) {
        FrickePoint pt{(1 - s) * first.x + s * second.x,
                       (1 - s) * first.y + s * second.y,
                       (1 - s) * first.z + s * second.z};
        return trace_of_slope(pt, rev->alpha) - trace_of_slope(pt, rev->beta);
    };
    double lo = 0.0, hi = 1.0, flo = diff(lo);
    if (flo * diff(hi) >= 0) {
        detail = "trace difference does not change sign";
        return false;
    }
    for (int it = 0; it < 200; ++it) {
        double mid = (lo + hi) / 2, fm = diff(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    double residual = std::fabs(diff((lo + hi) / 2));
    if (residual >= 1e-10) {
        detail = "equal-trace residual " + std::to_string(residual);
        return false;
    }
    return true;
}

bool check_one_zero(std::string& detail) {
    std::mt19937_64 rng(20260401);
    std::uniform_real_distribution<double> ua(0.5, 4.0), uf(0.05, 0.98);
    std::uniform_int_distribution<int> un(0, 6);
    for (int i = 0; i < 1000; ++i) {
        CoshSumSpec spec;
        spec.a1 = ua(rng);
        spec.a2 = std::uniform_real_distribution<double>(0.1, spec.a1)(rng);
        int n = un(rng);
        for (int k = 0; k < n; ++k) spec.bs.push_back(spec.a1 * uf(rng));
        spec.t_max = std::min(50.0, 120.0 / spec.a1);
        int zeros = count_positive_zeros(spec).count;
        if (zeros > 1) {
            detail = "spec " + std::to_string(i) + " has " +
                     std::to_string(zeros) + " zeros";
            return false;
        }
    }
    return true;
}

bool check_oracle(std::string& detail) {
    std::mt19937_64 rng(1316);
    std::vector<Slope> slopes;
    std::set<Slope> seen;
    while (slopes.size() < 100) {
        Slope s = random_slope(rng, 12);
        if (seen.insert(s).second) slopes.push_back(s);
    }
    for (int i = 0; i < 10; ++i) {
        FrickePoint pt = random_point(rng);
        auto [gen_a, gen_b] = realize_generators(pt.x, pt.y, pt.z);
        for (const Slope& s : slopes) {
            double recursion = trace_of_slope(pt, s);
            double matrix = word_trace(gen_a, gen_b, slope_word(s));
            if (std::fabs(recursion - matrix) >
                1e-9 * std::max(1.0, std::fabs(matrix))) {
                detail = "slope " + s.str() + " recursion " +
                         std::to_string(recursion) + " matrix " +
                         std::to_string(matrix);
                return false;
            }
        }
    }
    return true;
}

bool check_injectivity(std::string& detail) {
    const std::array<Slope, 4> basis{Slope(1, 0), Slope(0, 1), Slope(1, 1),
                                     Slope(1, -1)};
    std::mt19937_64 rng(77001);
    for (int i = 0; i < 1000; ++i) {
        FrickePoint p1 = random_point(rng), p2 = random_point(rng);
        if (p1.x == p2.x && p1.y == p2.y && p1.z == p2.z) continue;
        std::array<double, 4> v1{}, v2{};
        double m1 = 0.0, m2 = 0.0;
        for (int k = 0; k < 4; ++k) {
            v1[k] = slope_length(p1, basis[k]);
            v2[k] = slope_length(p2, basis[k]);
            m1 = std::max(m1, v1[k]);
            m2 = std::max(m2, v2[k]);
        }
        double gap = 0.0;
        for (int k = 0; k < 4; ++k)
            gap = std::max(gap, std::fabs(v1[k] / m1 - v2[k] / m2));
        if (gap <= 1e-6) {
            detail = "pair " + std::to_string(i) + " gap " + std::to_string(gap);
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    auto timed = [](const char* label, int idx, double budget, auto fn) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        if (ok && budget > 0 && dt >= budget) {
            ok = false;
            detail = "over budget of " + std::to_string(budget) + "s";
        }
        report(idx, label, ok, dt, detail);
    };

    timed("modular torus traces up to 300", 1, 1.0, check_spectrum);
    timed("Markoff maxima unique below 1e6", 2, 10.0, check_markoff);
    timed("equal interior data, distinct boundary", 3, 0, check_pair);
    timed("resultant degree and lead law", 4, 60.0, check_resultants);
    timed("equal-length locus through pinned points", 5, 0, check_locus);
    timed("flat equal-length geodesics", 6, 0, check_flat);
    timed("two-squares representation counts", 7, 1.0, check_two_squares);
    timed("twist length growth bounds", 8, 0, check_twist_bounds);
    timed("counting ratio estimator bound", 9, 0, check_ratio);
    timed("order reversal on a path", 10, 0, check_reversal);
    timed("dominant cosh one-zero law", 11, 0, check_one_zero);
    timed("recursion matches the matrix oracle", 12, 0, check_oracle);
    timed("length vectors projectively distinct", 13, 0, check_injectivity);

    std::printf("%d/13 acceptance checks passed\n", 13 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
