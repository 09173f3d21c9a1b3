#include "fricke/spectrum.hpp"

#include "fricke/trace.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <gmpxx.h>

namespace fricke {

namespace {

struct Corner {
    long long p, q;
    double t;
};

struct TreeNode {
    Corner l, r;
    long long mp, mq;
    double mt;
    int depth;
};

constexpr int kDepthCap = 64;

TreeNode make_node(Corner l, Corner r, double mediant_trace, int depth) {
    return TreeNode{l, r, l.p + r.p, l.q + r.q, mediant_trace, depth};
}

// Depth-first expansion of one Farey subtree.  A subtree is abandoned once
// its mediant trace exceeds the cap while dominating both corners: children
// mediants then satisfy t_new >= t_m * (t_corner - 1) > t_m, so nothing below
// can come back under the cap.
void expand_subtree(TreeNode root, double cap, std::vector<SpectrumEntry>& out) {
    std::vector<TreeNode> stack{root};
    while (!stack.empty()) {
        TreeNode n = stack.back();
        stack.pop_back();
        if (n.mt <= cap)
            out.push_back({Slope(n.mp, n.mq), n.mt, length_from_trace(n.mt)});
        else if (n.mt >= n.l.t && n.mt >= n.r.t)
            continue;
        if (n.depth >= kDepthCap) continue;
        Corner m{n.mp, n.mq, n.mt};
        stack.push_back(make_node(n.l, m, n.l.t * n.mt - n.r.t, n.depth + 1));
        stack.push_back(make_node(m, n.r, n.mt * n.r.t - n.l.t, n.depth + 1));
    }
}

void sort_entries(std::vector<SpectrumEntry>& entries) {
    std::sort(entries.begin(), entries.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.slope < b.slope;
    });
}

double checked_length(const std::vector<double>& seq, long long k) {
    return seq[static_cast<size_t>(k)];
}

mpq_class eval_exact(const TracePolynomial& poly, const mpq_class& t) {
    mpq_class acc = 0;
    for (auto it = poly.coefficients.rbegin(); it != poly.coefficients.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

int sign_exact(const TracePolynomial& poly, double t) {
    return sgn(eval_exact(poly, mpq_class(t)));
}

Slope orbit_canon(Slope s, std::map<Slope, Slope>& cache) {
    auto it = cache.find(s);
    if (it != cache.end()) return it->second;
    auto orbit = isometry_orbit(s);
    Slope canon = *std::min_element(orbit.begin(), orbit.end());
    for (const Slope& member : orbit) cache.emplace(member, canon);
    return canon;
}

}  // namespace

std::vector<SpectrumEntry> enumerate_simple(const FrickePoint& point, double l_max,
                                            int jobs) {
    auto v = validate(point);
    if (!v.valid) throw std::domain_error(v.diagnostic);
    if (jobs < 1) throw std::domain_error("worker count must be positive");
    if (!(l_max > 0)) return {};
    double cap = trace_from_length(l_max);
    if (!std::isfinite(cap)) throw std::domain_error("length cap too large");

    std::vector<SpectrumEntry> out;
    if (point.x <= cap) out.push_back({Slope(1, 0), point.x, length_from_trace(point.x)});
    if (point.y <= cap) out.push_back({Slope(0, 1), point.y, length_from_trace(point.y)});

    // Positive slopes hang under ((1,0),(0,1)); negative ones under
    // ((0,1),(-1,0)), whose mediant trace is the reflected product trace.
    std::vector<TreeNode> roots = {
        make_node({1, 0, point.x}, {0, 1, point.y}, point.z, 0),
        make_node({0, 1, point.y}, {-1, 0, point.x}, point.x * point.y - point.z, 0),
    };

    if (jobs == 1) {
        for (const TreeNode& root : roots) expand_subtree(root, cap, out);
    } else {
        // Grow a frontier breadth-first, then farm the subtrees out.
        std::vector<TreeNode> frontier = roots;
        while (static_cast<int>(frontier.size()) < 4 * jobs) {
            std::vector<TreeNode> next;
            bool grew = false;
            for (const TreeNode& n : frontier) {
                bool in = n.mt <= cap;
                if (in) out.push_back({Slope(n.mp, n.mq), n.mt, length_from_trace(n.mt)});
                if ((!in && n.mt >= n.l.t && n.mt >= n.r.t) || n.depth >= kDepthCap)
                    continue;
                Corner m{n.mp, n.mq, n.mt};
                next.push_back(make_node(n.l, m, n.l.t * n.mt - n.r.t, n.depth + 1));
                next.push_back(make_node(m, n.r, n.mt * n.r.t - n.l.t, n.depth + 1));
                grew = true;
            }
            frontier = std::move(next);
            if (!grew) break;
        }
        std::vector<std::future<std::vector<SpectrumEntry>>> futures;
        futures.reserve(frontier.size());
        for (const TreeNode& n : frontier)
            futures.push_back(std::async(std::launch::async, [n, cap] {
                std::vector<SpectrumEntry> part;
                expand_subtree(n, cap, part);
                return part;
            }));
        for (auto& f : futures) {
            auto part = f.get();
            out.insert(out.end(), part.begin(), part.end());
        }
    }
    sort_entries(out);
    return out;
}

std::vector<MultiplicityClass> multiplicity_histogram(const FrickePoint& point,
                                                      double l_max, double tol,
                                                      int jobs) {
    if (tol < 0) throw std::domain_error("tolerance must be nonnegative");
    auto entries = enumerate_simple(point, l_max, jobs);
    std::vector<MultiplicityClass> classes;
    for (size_t i = 0; i < entries.size(); ++i) {
        if (classes.empty() || entries[i].length - entries[i - 1].length > tol) {
            classes.push_back({0.0, tol, {}});
        }
        classes.back().members.push_back(entries[i].slope);
        classes.back().length += entries[i].length;
    }
    for (auto& c : classes) c.length /= static_cast<double>(c.members.size());
    return classes;
}

std::vector<std::pair<Slope, Slope>> check_markoff_property(const FrickePoint& point,
                                                            double l_max, double tol,
                                                            int jobs) {
    if (tol < 0) throw std::domain_error("tolerance must be nonnegative");
    auto entries = enumerate_simple(point, l_max, jobs);
    std::map<Slope, Slope> cache;
    std::vector<std::pair<Slope, Slope>> violations;
    for (size_t j = 1; j < entries.size(); ++j) {
        for (size_t i = j; i-- > 0;) {
            if (entries[j].length - entries[i].length > tol) break;
            if (orbit_canon(entries[i].slope, cache) != orbit_canon(entries[j].slope, cache))
                violations.emplace_back(entries[i].slope, entries[j].slope);
        }
    }
    std::sort(violations.begin(), violations.end());
    return violations;
}

std::vector<double> twist_sequence(const FrickePoint& point, Slope alpha, Slope alpha0,
                                   int k_max) {
    if (k_max < 0) throw std::domain_error("twist count must be nonnegative");
    auto v = validate(point);
    if (!v.valid) throw std::domain_error(v.diagnostic);
    long long m = intersection_number(alpha, alpha0);
    if (m == 0) throw std::domain_error("twisting curve is disjoint from the base curve");

    // Everything runs in the log domain: the first twist alone can push the
    // trace past double range, and the three-term recursion only ever forms
    // products and differences of positive terms, which log arithmetic
    // handles without loss.
    double l_alpha = length_from_log_trace(log_trace_of_slope(point, alpha));
    double step = static_cast<double>(m) * l_alpha;

    std::vector<double> out;
    out.reserve(static_cast<size_t>(k_max) + 1);

    double u_prev = log_trace_of_slope(point, alpha0);
    out.push_back(length_from_log_trace(u_prev));
    if (k_max == 0) return out;

    double u_cur = log_trace_of_slope(point, dehn_twist(alpha0, alpha, 1));
    out.push_back(length_from_log_trace(u_cur));

    // log(2 cosh(m l_alpha / 2)), the recursion coefficient.
    double lc = step / 2.0 + std::log1p(std::exp(-step));
    for (int k = 2; k <= k_max; ++k) {
        double u_next = u_cur + lc + std::log1p(-std::exp(u_prev - u_cur - lc));
        out.push_back(length_from_log_trace(u_next));
        u_prev = u_cur;
        u_cur = u_next;
    }
    return out;
}

RatioEstimate ratio_estimate(const FrickePoint& point, Slope alpha, Slope beta,
                             Slope alpha0, Slope beta0, long long i) {
    if (i <= 0) throw std::domain_error("step count must be positive");
    if (intersection_number(alpha, alpha0) == 0 || intersection_number(beta, beta0) == 0)
        throw std::domain_error("companion curves must intersect their bases");

    double l_beta = length_from_log_trace(log_trace_of_slope(point, beta));
    double l_a0 = length_from_log_trace(log_trace_of_slope(point, alpha0));
    double l_b0 = length_from_log_trace(log_trace_of_slope(point, beta0));

    auto alpha_seq = twist_sequence(point, alpha, alpha0, static_cast<int>(i));
    double target = checked_length(alpha_seq, i);

    // Every twist index beyond this provably exceeds the target.
    long long mb = intersection_number(beta, beta0);
    long long k_stop = static_cast<long long>(
                           std::ceil((target + l_b0) / (static_cast<double>(mb) * l_beta))) +
                       2;
    auto beta_seq = twist_sequence(point, beta, beta0, static_cast<int>(k_stop));
    long long count = 0;
    for (double l : beta_seq)
        if (l <= target) ++count;

    RatioEstimate est;
    est.count = count;
    est.steps = i;
    est.value = static_cast<double>(count) / static_cast<double>(i);
    est.bound = ((l_a0 + l_b0) / (2.0 * l_beta) + 1.0) / static_cast<double>(i);
    return est;
}

std::optional<OrderReversal> find_order_reversal(const FrickePoint& first,
                                                 const FrickePoint& second,
                                                 double l_max) {
    std::set<Slope> slopes;
    for (const auto& e : enumerate_simple(first, l_max)) slopes.insert(e.slope);
    for (const auto& e : enumerate_simple(second, l_max)) slopes.insert(e.slope);

    struct Cand {
        Slope s;
        double l1, l2;
    };
    std::vector<Cand> cands;
    cands.reserve(slopes.size());
    for (const Slope& s : slopes)
        cands.push_back({s, length_from_trace(trace_of_slope(first, s)),
                         length_from_trace(trace_of_slope(second, s))});
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.l1 != b.l1) return a.l1 < b.l1;
        return a.s < b.s;
    });

    for (size_t j = 1; j < cands.size(); ++j)
        for (size_t i = 0; i < j; ++i)
            if (cands[i].l1 < cands[j].l1 && cands[i].l2 > cands[j].l2)
                return OrderReversal{cands[i].s, cands[j].s, cands[j].l1 - cands[i].l1,
                                     cands[i].l2 - cands[j].l2};
    return std::nullopt;
}

std::optional<EqualTraceFinding> find_equal_trace_parameter(Slope s1, Slope s2,
                                                            double t_lo, double t_hi) {
    if (!(t_lo >= 3.0 && t_lo < t_hi))
        throw std::domain_error("parameter range must satisfy 3 <= lo < hi");
    auto orbit1 = isometry_orbit(s1);
    auto orbit2 = isometry_orbit(s2);
    if (std::find(orbit1.begin(), orbit1.end(), s2) != orbit1.end())
        throw std::domain_error("slopes lie in the same orbit; trace polynomials coincide");

    TracePolynomial diff = trace_polynomial(s1) - trace_polynomial(s2);

    auto finding_at = [&](double t, const mpq_class& value) {
        EqualTraceFinding f;
        f.s1 = s1;
        f.s2 = s2;
        f.t_star = t;
        f.residual = std::abs(value.get_d());
        std::set<Slope> close(orbit1.begin(), orbit1.end());
        close.insert(orbit2.begin(), orbit2.end());
        f.equal_trace_slopes.assign(close.begin(), close.end());
        return f;
    };

    std::vector<double> dc(diff.coefficients.size());
    for (size_t i = 0; i < dc.size(); ++i) dc[i] = diff.coefficients[i].get_d();
    auto rough_eval = [&dc](double t) {
        double acc = 0;
        for (size_t i = dc.size(); i-- > 0;) acc = acc * t + dc[i];
        return acc;
    };

    constexpr int kGrid = 4096;
    double h = (t_hi - t_lo) / kGrid;
    double prev_t = t_lo;
    int prev_sign = sign_exact(diff, prev_t);
    if (prev_sign == 0) return finding_at(t_lo, 0);
    for (int j = 1; j <= kGrid; ++j) {
        double t = (j == kGrid) ? t_hi : t_lo + j * h;
        // The coarse pass uses floating evaluation; anything suspicious is
        // re-examined exactly.
        double rough = rough_eval(t);
        int s = (std::abs(rough) < 1e-3 || rough * prev_sign < 0) ? sign_exact(diff, t)
                                                                  : (rough > 0 ? 1 : -1);
        if (s == 0) return finding_at(t, 0);
        if (s != prev_sign) {
            double lo = prev_t, hi = t;
            int lo_sign = prev_sign;
            while (true) {
                double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) break;
                int ms = sign_exact(diff, mid);
                if (ms == 0) return finding_at(mid, 0);
                (ms == lo_sign ? lo : hi) = mid;
            }
            mpq_class rl = eval_exact(diff, mpq_class(lo));
            mpq_class rh = eval_exact(diff, mpq_class(hi));
            bool pick_lo = cmp(abs(rl), abs(rh)) <= 0;
            return finding_at(pick_lo ? lo : hi, pick_lo ? rl : rh);
        }
        prev_t = t;
        prev_sign = s;
    }
    return std::nullopt;
}

std::vector<EqualTraceFinding> scan_equal_trace(int complexity_cap, double t_lo,
                                                double t_hi) {
    if (complexity_cap < 2) throw std::domain_error("complexity cap too small");
    // One representative per slope orbit: (1,1) for the seed orbit, then
    // p/q with 1 <= p <= q/2, since each orbit contains p/q and (q-p)/q
    // together with their swaps and reflections.
    std::vector<Slope> reps{Slope(1, 1)};
    for (long long q = 2; q < complexity_cap; ++q)
        for (long long p = 1; 2 * p <= q && p + q <= complexity_cap; ++p)
            if (std::gcd(p, q) == 1) reps.emplace_back(p, q);

    std::vector<EqualTraceFinding> findings;
    for (size_t a = 0; a < reps.size(); ++a)
        for (size_t b = a + 1; b < reps.size(); ++b)
            if (auto f = find_equal_trace_parameter(reps[a], reps[b], t_lo, t_hi))
                findings.push_back(*f);
    std::sort(findings.begin(), findings.end(),
              [](const EqualTraceFinding& a, const EqualTraceFinding& b) {
                  if (a.t_star != b.t_star) return a.t_star < b.t_star;
                  if (!(a.s1 == b.s1)) return a.s1 < b.s1;
                  return a.s2 < b.s2;
              });
    return findings;
}

}  // namespace fricke
