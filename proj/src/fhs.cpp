#include "fricke/fhs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fricke {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Real roots of A t^3 + B t^2 + C t + D, A != 0, polished by Newton steps.
std::vector<double> cubic_roots(double A, double B, double C, double D) {
    double p = B / A, q = C / A, r = D / A;
    // Depress with t = u - p/3.
    double shift = p / 3.0;
    double m = q - p * p / 3.0;
    double n = r - p * q / 3.0 + 2.0 * p * p * p / 27.0;
    std::vector<double> roots;
    double disc = n * n / 4.0 + m * m * m / 27.0;
    if (std::abs(m) < 1e-13 && std::abs(n) < 1e-13) {
        roots = {0.0};
    } else if (disc > 1e-13 * (1 + n * n)) {
        double s = std::sqrt(disc);
        roots = {std::cbrt(-n / 2.0 + s) + std::cbrt(-n / 2.0 - s)};
    } else if (disc > -1e-13 * (1 + n * n)) {
        // Double root.
        roots = {3.0 * n / m, -3.0 * n / (2.0 * m)};
    } else {
        double rad = 2.0 * std::sqrt(-m / 3.0);
        double arg = std::clamp(3.0 * n / (m * rad), -1.0, 1.0);
        double theta = std::acos(arg);
        for (int k = 0; k < 3; ++k)
            roots.push_back(rad * std::cos((theta + 2.0 * kPi * k) / 3.0));
    }
    for (double& u : roots) {
        double t = u - shift;
        for (int it = 0; it < 3; ++it) {
            double f = ((A * t + B) * t + C) * t + D;
            double df = (3.0 * A * t + 2.0 * B) * t + C;
            if (df != 0.0) t -= f / df;
        }
        u = t;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

double invariant_gap(const Invariant4& got, const Invariant4& want) {
    return std::max({std::abs(got.f1 - want.f1), std::abs(got.f2 - want.f2),
                     std::abs(got.f3 - want.f3), std::abs(got.f4 - want.f4)});
}

// The two planar curves whose common zeros carry the asymmetric boundary
// solutions: eliminating a and b from the invariants leaves
//   P = (cd-f3)(c^2-d^2)^2 + (f1 c - f2 d)(f2 c - f1 d),
//   Q = (f2 c - f1 d)^2 + (f1 c - f2 d)^2 + (c^2+d^2)(c^2-d^2)^2
//       + 4(f2 c - f1 d)(f1 c - f2 d) cd - f4 (c^2-d^2)^2.
std::pair<double, double> planar_pq(const Invariant4& f, double c, double d) {
    double E = c * c - d * d;
    double A = f.f2 * c - f.f1 * d;
    double B = f.f1 * c - f.f2 * d;
    double P = (c * d - f.f3) * E * E + B * A;
    double Q = A * A + B * B + (c * c + d * d) * E * E + 4.0 * A * B * c * d -
               f.f4 * E * E;
    return {P, Q};
}

}  // namespace

bool geometric(const FhsTraces& t) {
    for (double v : {t.a, t.b, t.c, t.d, t.x, t.xbar, t.y, t.ybar, t.z, t.zbar})
        if (v < 1.0) return false;
    return true;
}

Invariant4 boundary_invariants(double a, double b, double c, double d) {
    return {a * d + b * c, a * c + b * d, a * b + c * d,
            a * a + b * b + c * c + d * d + 4.0 * a * b * c * d};
}

Invariant4 interior_invariants(double x, double xbar, double y, double ybar,
                               double z, double zbar) {
    return {y * z - (x + xbar) / 2.0, x * y - (z + zbar) / 2.0,
            x * z - (y + ybar) / 2.0,
            1.0 - 4.0 * x * y * z + x * xbar + y * ybar + z * zbar};
}

double check_basic_identity(const FhsTraces& t) {
    return t.x + t.xbar + 2.0 * (t.a * t.d + t.b * t.c) - 2.0 * t.y * t.z;
}

BarTriple bar_traces_from(double a, double b, double c, double d,
                          double x, double y, double z) {
    BarTriple out;
    out.xbar = 2.0 * (y * z - (a * d + b * c)) - x;
    out.zbar = 2.0 * (x * y - (a * c + b * d)) - z;
    out.ybar = 2.0 * (x * z - (a * b + c * d)) - y;
    out.geometric = out.xbar >= 1.0 && out.ybar >= 1.0 && out.zbar >= 1.0;
    return out;
}

double tracepoly_residual(double a, double b, double c, double d,
                          double x, double y, double z) {
    return a * a + b * b + c * c + d * d + x * x + y * y + z * z +
           4.0 * a * b * c * d - 1.0 - 2.0 * x * y * z +
           2.0 * x * (a * d + b * c) + 2.0 * y * (a * b + c * d) +
           2.0 * z * (a * c + b * d);
}

ConsistencyReport check_consistency(const FhsTraces& t) {
    Invariant4 bd = boundary_invariants(t.a, t.b, t.c, t.d);
    Invariant4 in = interior_invariants(t.x, t.xbar, t.y, t.ybar, t.z, t.zbar);
    ConsistencyReport rep;
    rep.residuals[0] = bd.f1 - in.f1;
    rep.residuals[1] = bd.f2 - in.f2;
    rep.residuals[2] = bd.f3 - in.f3;
    rep.residuals[3] = bd.f4 - in.f4;
    rep.residuals[4] = tracepoly_residual(t.a, t.b, t.c, t.d, t.x, t.y, t.z);
    for (double r : rep.residuals) rep.worst = std::max(rep.worst, std::abs(r));
    return rep;
}

SymmetricSolve solve_boundary_symmetric(const Invariant4& f, SymmetryCase which,
                                        double tol) {
    if (tol <= 0) throw std::domain_error("tolerance must be positive");
    double scale = 1.0 + std::abs(f.f1) + std::abs(f.f2) + std::abs(f.f3) +
                   std::abs(f.f4);
    SymmetricSolve out;
    std::vector<std::array<double, 4>> candidates;

    switch (which) {
    case SymmetryCase::all_equal: {
        double gap = std::max(std::abs(f.f1 - f.f2), std::abs(f.f1 - f.f3));
        if (gap > tol * scale || f.f1 <= 0) {
            out.residual = gap > 0 ? gap : -f.f1;
            return out;
        }
        double a = std::sqrt(f.f1 / 2.0);
        candidates.push_back({a, a, a, a});
        break;
    }
    case SymmetryCase::three_equal: {
        double gap = std::max(std::abs(f.f1 - f.f2), std::abs(f.f1 - f.f3));
        if (gap > tol * scale || f.f1 <= 0) {
            out.residual = gap > 0 ? gap : -f.f1;
            return out;
        }
        // a^2+ad = f1 and 3a^2+d^2+4a^3 d = f4 collapse to a cubic in t=a^2:
        // 4t^3 - 4(1+f1) t^2 + (2 f1 + f4) t - f1^2 = 0, with d = (f1-t)/a.
        for (double t : cubic_roots(4.0, -4.0 * (1.0 + f.f1),
                                    2.0 * f.f1 + f.f4, -f.f1 * f.f1)) {
            if (t <= 0) continue;
            double a = std::sqrt(t);
            double d = (f.f1 - t) / a;
            if (d <= 0) continue;
            candidates.push_back({a, a, a, d});
        }
        break;
    }
    case SymmetryCase::two_pairs: {
        // a = d, b = c: then f1 = a^2+b^2 and f2 = f3 = 2ab, so a and b are
        // the roots of s^2 - sqrt(f1+f2) s + f2/2.
        double gap = std::abs(f.f2 - f.f3);
        if (gap > tol * scale) {
            out.residual = gap;
            return out;
        }
        if (f.f1 + f.f2 < 0 || f.f1 - f.f2 < -tol * scale) {
            out.residual = std::max(-(f.f1 + f.f2), f.f2 - f.f1);
            return out;
        }
        double sum = std::sqrt(f.f1 + f.f2);
        double diff = std::sqrt(std::max(0.0, f.f1 - f.f2));
        double u = (sum + diff) / 2.0, v = (sum - diff) / 2.0;
        candidates.push_back({u, v, v, u});
        if (u - v > tol * scale) candidates.push_back({v, u, u, v});
        break;
    }
    }

    double best_reject = std::numeric_limits<double>::infinity();
    for (const auto& abcd : candidates) {
        Invariant4 got = boundary_invariants(abcd[0], abcd[1], abcd[2], abcd[3]);
        double gap = invariant_gap(got, f);
        if (gap <= tol * scale) {
            out.solutions.push_back(abcd);
            out.residual = std::max(out.residual, gap);
        } else {
            best_reject = std::min(best_reject, gap);
        }
    }
    if (out.solutions.empty()) out.residual = best_reject;
    std::sort(out.solutions.begin(), out.solutions.end());
    return out;
}

std::vector<std::array<double, 4>> solve_boundary_general(const Invariant4& f,
                                                          double tol) {
    if (tol <= 0) throw std::domain_error("tolerance must be positive");
    double scale = 1.0 + std::abs(f.f1) + std::abs(f.f2) + std::abs(f.f3) +
                   std::abs(f.f4);
    // Boundary entries obey a^2+...+d^2 <= f4, so seeds past sqrt(f4) are
    // wasted.
    double reach = std::sqrt(std::max(4.0, std::abs(f.f4))) + 1.0;
    std::vector<std::array<double, 4>> found;
    const int grid = 28;
    for (int ic = 1; ic <= grid; ++ic) {
        for (int id = 1; id <= grid; ++id) {
            double c = reach * ic / grid, d = reach * id / grid;
            bool ok = false;
            for (int it = 0; it < 80; ++it) {
                auto [P, Q] = planar_pq(f, c, d);
                double h = 1e-7 * (1.0 + std::abs(c) + std::abs(d));
                auto [Pc1, Qc1] = planar_pq(f, c + h, d);
                auto [Pc0, Qc0] = planar_pq(f, c - h, d);
                auto [Pd1, Qd1] = planar_pq(f, c, d + h);
                auto [Pd0, Qd0] = planar_pq(f, c, d - h);
                double jpc = (Pc1 - Pc0) / (2 * h), jpd = (Pd1 - Pd0) / (2 * h);
                double jqc = (Qc1 - Qc0) / (2 * h), jqd = (Qd1 - Qd0) / (2 * h);
                double det = jpc * jqd - jpd * jqc;
                if (det == 0.0) break;
                double dc = (P * jqd - Q * jpd) / det;
                double dd = (Q * jpc - P * jqc) / det;
                double cap = 0.5 * (1.0 + std::abs(c) + std::abs(d));
                double norm = std::hypot(dc, dd);
                if (norm > cap) { dc *= cap / norm; dd *= cap / norm; }
                c -= dc;
                d -= dd;
                if (std::hypot(dc, dd) < 1e-13 * (1.0 + std::abs(c) + std::abs(d))) {
                    ok = true;
                    break;
                }
            }
            if (!ok || c <= 0 || d <= 0) continue;
            double E = c * c - d * d;
            if (std::abs(E) < 1e-7 * (c * c + d * d)) continue;
            double a = (f.f2 * c - f.f1 * d) / E;
            double b = (f.f1 * c - f.f2 * d) / E;
            if (a <= 0 || b <= 0) continue;
            Invariant4 got = boundary_invariants(a, b, c, d);
            if (invariant_gap(got, f) > tol * scale) continue;
            std::array<double, 4> abcd{a, b, c, d};
            bool dup = false;
            for (const auto& other : found) {
                double gap = 0;
                for (int i = 0; i < 4; ++i)
                    gap = std::max(gap, std::abs(other[i] - abcd[i]));
                if (gap < 1e-6 * scale) { dup = true; break; }
            }
            if (!dup) found.push_back(abcd);
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

// ---------------------------------------------------------------------------
// Exact resultants.

namespace {

// Univariate polynomial in the kept variable; index = exponent.
using P1 = RatPoly;
// Bivariate: outer index = exponent of the variable to eliminate.
using P2 = std::vector<P1>;

void trim(P1& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool is_zero(const P1& p) {
    for (const auto& q : p)
        if (q != 0) return false;
    return true;
}

P1 p1_mul(const P1& a, const P1& b) {
    if (a.empty() || b.empty()) return {};
    P1 out(a.size() + b.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

P1 p1_sub(const P1& a, const P1& b) {
    P1 out = a;
    if (out.size() < b.size()) out.resize(b.size(), mpq_class(0));
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

// Exact division, used by fraction-free elimination where divisibility is
// guaranteed.
P1 p1_div_exact(P1 num, const P1& den) {
    trim(num);
    if (num.empty()) return {};
    if (den.empty() || den.back() == 0)
        throw std::logic_error("division by zero polynomial");
    P1 out(num.size() - den.size() + 1, mpq_class(0));
    for (size_t k = out.size(); k-- > 0;) {
        mpq_class q = num[k + den.size() - 1] / den.back();
        out[k] = q;
        if (q == 0) continue;
        for (size_t j = 0; j < den.size(); ++j) num[k + j] -= q * den[j];
    }
    if (!is_zero(num)) throw std::logic_error("inexact polynomial division");
    trim(out);
    return out;
}

P2 p2_add(P2 a, const P2& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) {
        if (a[i].size() < b[i].size()) a[i].resize(b[i].size(), mpq_class(0));
        for (size_t j = 0; j < b[i].size(); ++j) a[i][j] += b[i][j];
    }
    return a;
}

P2 p2_mul(const P2& a, const P2& b) {
    P2 out;
    if (a.empty() || b.empty()) return out;
    out.resize(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            if (!a[i].empty() && !b[j].empty()) {
                P1 prod = p1_mul(a[i], b[j]);
                P1& slot = out[i + j];
                if (slot.size() < prod.size()) slot.resize(prod.size(), mpq_class(0));
                for (size_t k = 0; k < prod.size(); ++k) slot[k] += prod[k];
            }
    return out;
}

P2 p2_scale(P2 a, const mpq_class& s) {
    for (auto& row : a)
        for (auto& q : row) q *= s;
    return a;
}

void p2_trim(P2& a) {
    for (auto& row : a) trim(row);
    while (!a.empty() && a.back().empty()) a.pop_back();
}

P2 p2_transpose(const P2& a) {
    size_t inner = 0;
    for (const auto& row : a) inner = std::max(inner, row.size());
    P2 out(inner);
    for (size_t j = 0; j < inner; ++j) {
        out[j].resize(a.size(), mpq_class(0));
        for (size_t i = 0; i < a.size(); ++i)
            if (j < a[i].size()) out[j][i] = a[i][j];
    }
    p2_trim(out);
    return out;
}

// Determinant by Bareiss elimination: every division is exact, so the
// entries stay polynomials instead of growing into rational functions.
P1 bareiss_det(std::vector<std::vector<P1>> m) {
    size_t n = m.size();
    int sign = 1;
    P1 prev{mpq_class(1)};
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && is_zero(m[piv][k])) ++piv;
        if (piv == n) return {};
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = p1_div_exact(
                    p1_sub(p1_mul(m[k][k], m[i][j]), p1_mul(m[i][k], m[k][j])),
                    prev);
            m[i][k].clear();
        }
        prev = m[k][k];
    }
    P1 det = m[n - 1][n - 1];
    if (sign < 0)
        for (auto& q : det) q = -q;
    return det;
}

// Sylvester resultant of the bivariate polynomials, eliminating the outer
// variable.
P1 resultant_outer(P2 p, P2 q) {
    p2_trim(p);
    p2_trim(q);
    size_t dp = p.size() - 1, dq = q.size() - 1;
    size_t n = dp + dq;
    std::vector<std::vector<P1>> syl(n, std::vector<P1>(n));
    for (size_t r = 0; r < dq; ++r)
        for (size_t i = 0; i <= dp; ++i) syl[r][r + i] = p[dp - i];
    for (size_t r = 0; r < dp; ++r)
        for (size_t i = 0; i <= dq; ++i) syl[dq + r][r + i] = q[dq - i];
    return bareiss_det(std::move(syl));
}

}  // namespace

ResultantReport resultant_check(const Invariant4Q& f) {
    if (f.f1 <= 0 || f.f2 <= 0)
        throw std::domain_error("invariants f1, f2 must be positive");
    if (f.f1 == f.f2)
        throw std::domain_error(
            "equal f1 and f2 degenerate the planar curves; no resultant check");

    // Bivariate building blocks, outer variable c, inner variable d.
    P2 cd_f3{{-f.f3}, {mpq_class(0), mpq_class(1)}};
    P2 E{{mpq_class(0), mpq_class(0), mpq_class(-1)}, {}, {mpq_class(1)}};
    P2 A{{mpq_class(0), -f.f1}, {f.f2}};  // f2 c - f1 d
    P2 B{{mpq_class(0), -f.f2}, {f.f1}};  // f1 c - f2 d
    P2 sumsq{{mpq_class(0), mpq_class(0), mpq_class(1)}, {}, {mpq_class(1)}};
    P2 cd{{}, {mpq_class(0), mpq_class(1)}};

    P2 E2 = p2_mul(E, E);
    P2 P = p2_add(p2_mul(cd_f3, E2), p2_mul(A, B));
    P2 Q = p2_add(
        p2_add(p2_add(p2_mul(A, A), p2_mul(B, B)), p2_mul(sumsq, E2)),
        p2_add(p2_scale(p2_mul(p2_mul(A, B), cd), 4), p2_scale(E2, -f.f4)));

    ResultantReport rep;
    rep.in_c = resultant_outer(P, Q);
    rep.in_d = resultant_outer(p2_transpose(P), p2_transpose(Q));
    rep.degree_c = static_cast<int>(rep.in_c.size()) - 1;
    rep.degree_d = static_cast<int>(rep.in_d.size()) - 1;
    if (!rep.in_c.empty()) rep.lead_c = rep.in_c.back();
    if (!rep.in_d.empty()) rep.lead_d = rep.in_d.back();
    mpq_class diff = f.f1 - f.f2, sum = f.f1 + f.f2;
    mpq_class d4 = diff * diff * diff * diff;
    mpq_class s4 = sum * sum * sum * sum;
    rep.expected_lead = 256 * d4 * s4;
    rep.ok = rep.degree_c == 28 && rep.degree_d == 28 &&
             rep.lead_c == rep.expected_lead && rep.lead_d == rep.expected_lead;
    return rep;
}

std::pair<FhsTraces, FhsTraces> counterexample_pair() {
    double root2 = std::sqrt(2.0);
    double xstar =
        (1.0 + std::cbrt(293.0 - 92.0 * root2) + std::cbrt(293.0 + 92.0 * root2)) /
        2.0;
    double root6 = std::sqrt(6.0);
    double r = std::sqrt(3.5 - root6);
    double s = std::sqrt(39.5 + 15.0 * root6);

    auto build = [&](double bdry_a, double bdry_d) {
        FhsTraces t;
        t.a = t.b = t.c = bdry_a;
        t.d = bdry_d;
        t.x = t.y = t.z = xstar;
        BarTriple bars = bar_traces_from(t.a, t.b, t.c, t.d, t.x, t.y, t.z);
        t.xbar = bars.xbar;
        t.ybar = bars.ybar;
        t.zbar = bars.zbar;
        return t;
    };
    return {build(2.0, 3.0), build(r, s)};
}

}  // namespace fricke
