#include "fricke/locus.hpp"

#include <cmath>
#include <cstdlib>
#include <future>
#include <numeric>
#include <stdexcept>
#include <string>

#include "fricke/trace.hpp"

namespace fricke {

namespace {

struct Vec {
    long long p, q;
};

Slope primitive_part(long long p, long long q) {
    long long g = std::gcd(std::llabs(p), std::llabs(q));
    return Slope(p / g, q / g);
}

// Bezout completion of a primitive vector: delta with
// gamma.p * delta.q - gamma.q * delta.p = 1.
Vec unimodular_completion(Slope gamma) {
    long long old_r = gamma.p, r = gamma.q;
    long long old_s = 1, s = 0;
    long long old_t = 0, t = 1;
    while (r != 0) {
        long long q = old_r / r;
        long long tmp;
        tmp = old_r - q * r, old_r = r, r = tmp;
        tmp = old_s - q * s, old_s = s, s = tmp;
        tmp = old_t - q * t, old_t = t, t = tmp;
    }
    if (old_r < 0) {
        old_s = -old_s;
        old_t = -old_t;
    }
    // gamma.p * old_s + gamma.q * old_t = 1
    return {-old_t, old_s};
}

// Everything a leaf solve needs: the marking (gamma, delta) in whose trace
// coordinates the leaf is {x = x_of_gamma}, the two input curves rewritten
// as slopes of that marking, and the standard basis curves likewise (used
// to re-express the found point).
struct LeafFrame {
    Slope gamma, gamma2;
    Slope a_in, b_in;
    Slope e1, e2, e12;
};

LeafFrame make_frame(Slope alpha, Slope beta) {
    auto [g, g2] = companion_curves(alpha, beta);
    Vec d = unimodular_completion(g);
    // Cramer against the unimodular column matrix [gamma delta].
    auto coords = [&](long long p, long long q) -> Vec {
        return {p * d.q - q * d.p, g.p * q - g.q * p};
    };
    Vec a = coords(alpha.p, alpha.q), b = coords(beta.p, beta.q);
    Vec u = coords(1, 0), v = coords(0, 1);
    LeafFrame fr;
    fr.gamma = g;
    fr.gamma2 = g2;
    fr.a_in = Slope(a.p, a.q);
    fr.b_in = Slope(b.p, b.q);
    fr.e1 = Slope(u.p, u.q);
    fr.e2 = Slope(v.p, v.q);
    fr.e12 = Slope(u.p + v.p, u.q + v.q);
    return fr;
}

struct LeafRoot {
    double theta = 0;
    FrickePoint marked;  // in the (gamma, delta) marking
};

LeafRoot solve_leaf(const TeichSlice& slice, const LeafFrame& fr, double x, double tol,
                    double theta_cap) {
    if (!(x > 2.0)) throw std::domain_error("leaf coordinate must exceed 2");
    if (!(tol > 0.0)) throw std::domain_error("tolerance must be positive");
    auto diff = [&](double theta) {
        FrickePoint p = leaf_point(slice, x, theta);
        return trace_of_slope(p, fr.a_in) - trace_of_slope(p, fr.b_in);
    };

    double lo = -1.0, hi = 1.0;
    double flo = diff(lo), fhi = diff(hi);
    while (flo != 0 && fhi != 0 && (flo > 0) == (fhi > 0)) {
        lo *= 2.0;
        hi *= 2.0;
        if (hi > theta_cap)
            throw std::runtime_error("no equal-length crossing for |theta| <= " +
                                     std::to_string(theta_cap));
        flo = diff(lo);
        fhi = diff(hi);
    }
    if (flo == 0)
        hi = lo;
    else if (fhi == 0)
        lo = hi;
    while (lo < hi) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        double fm = diff(mid);
        if (fm == 0) {
            lo = hi = mid;
            break;
        }
        ((fm > 0) == (flo > 0) ? lo : hi) = mid;
    }

    LeafRoot root;
    root.theta = 0.5 * (lo + hi);
    root.marked = leaf_point(slice, x, root.theta);
    double la = length_from_trace(trace_of_slope(root.marked, fr.a_in));
    double lb = length_from_trace(trace_of_slope(root.marked, fr.b_in));
    if (!(std::abs(la - lb) < tol))
        throw std::runtime_error("equal-length crossing stalled above the requested tolerance");
    return root;
}

FrickePoint to_standard(const LeafFrame& fr, const FrickePoint& marked) {
    return {trace_of_slope(marked, fr.e1), trace_of_slope(marked, fr.e2),
            trace_of_slope(marked, fr.e12)};
}

}  // namespace

std::pair<Slope, Slope> companion_curves(Slope alpha, Slope beta) {
    if (alpha == beta) throw std::domain_error("companion curves need two distinct slopes");
    Slope d = primitive_part(alpha.p - beta.p, alpha.q - beta.q);
    Slope s = primitive_part(alpha.p + beta.p, alpha.q + beta.q);
    // Flipping the orientation of beta swaps the two, so order the pair.
    if (s < d) std::swap(d, s);
    return {d, s};
}

FrickePoint locus_point_on_leaf(const TeichSlice& slice, Slope alpha, Slope beta,
                                double x_of_gamma, double tol, double theta_cap) {
    LeafFrame fr = make_frame(alpha, beta);
    LeafRoot root = solve_leaf(slice, fr, x_of_gamma, tol, theta_cap);
    return to_standard(fr, root.marked);
}

LocusPolyline trace_locus(const TeichSlice& slice, Slope alpha, Slope beta,
                          const std::vector<double>& x_grid, double tol, int jobs,
                          double theta_cap) {
    if (jobs < 1) throw std::domain_error("job count must be positive");
    if (x_grid.empty()) throw std::domain_error("grid must be nonempty");
    for (double x : x_grid)
        if (!(x > 2.0)) throw std::domain_error("grid values must exceed 2");
    bool inc = true, dec = true;
    for (size_t i = 1; i < x_grid.size(); ++i) {
        inc = inc && x_grid[i] > x_grid[i - 1];
        dec = dec && x_grid[i] < x_grid[i - 1];
    }
    if (!inc && !dec) throw std::domain_error("grid must be strictly monotone");

    LeafFrame fr = make_frame(alpha, beta);
    LocusPolyline out;
    out.slice = slice;
    out.gamma = fr.gamma;
    out.gamma2 = fr.gamma2;
    out.points.resize(x_grid.size());

    auto solve_at = [&](size_t i) {
        try {
            LeafRoot root = solve_leaf(slice, fr, x_grid[i], tol, theta_cap);
            out.points[i] = {x_grid[i], root.theta, to_standard(fr, root.marked)};
        } catch (const std::runtime_error& e) {
            throw std::runtime_error(std::string(e.what()) + " at grid value " +
                                     std::to_string(x_grid[i]));
        }
    };

    size_t workers = std::min<size_t>(static_cast<size_t>(jobs), x_grid.size());
    if (workers <= 1) {
        for (size_t i = 0; i < x_grid.size(); ++i) solve_at(i);
    } else {
        std::vector<std::future<void>> parts;
        parts.reserve(workers);
        for (size_t w = 0; w < workers; ++w)
            parts.push_back(std::async(std::launch::async, [&, w] {
                for (size_t i = w; i < x_grid.size(); i += workers) solve_at(i);
            }));
        for (auto& part : parts) part.get();
    }
    return out;
}

}  // namespace fricke
