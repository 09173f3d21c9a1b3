#include "fricke/flat.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace fricke {

namespace {

// Rational boundary point num/den in lowest terms, den > 0.
BoundaryPoint rational_point(long long num, long long den) {
    long long g = std::gcd(std::llabs(num), std::llabs(den));
    num /= g;
    den /= g;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    BoundaryPoint pt;
    pt.b = den;
    pt.c = -num;
    pt.approx = static_cast<double>(num) / static_cast<double>(den);
    return pt;
}

BoundaryPoint infinity_point() {
    BoundaryPoint pt;
    pt.at_infinity = true;
    return pt;
}

}  // namespace

double flat_length(const TauPoint& tau, Slope s) {
    const double p = static_cast<double>(s.p), q = static_cast<double>(s.q);
    return std::hypot(p * tau.re + q, p * tau.im);
}

PoincareGeodesic equal_locus_flat(Slope s1, Slope s2) {
    if (s1 == s2) throw std::domain_error("equal-length locus needs two distinct slopes");

    PoincareGeodesic g;
    g.A = s1.p * s1.p - s2.p * s2.p;
    g.B = s1.p * s1.q - s2.p * s2.q;
    g.C = s1.q * s1.q - s2.q * s2.q;
    const long long det = std::llabs(s1.p * s2.q - s1.q * s2.p);

    if (g.A == 0) {
        g.kind = GeodesicKind::vertical;
        g.foot = -static_cast<double>(g.C) / (2.0 * static_cast<double>(g.B));
        g.e1 = rational_point(-g.C, 2 * g.B);
        g.e2 = infinity_point();
    } else {
        g.kind = GeodesicKind::circle;
        g.center = -static_cast<double>(g.B) / static_cast<double>(g.A);
        g.radius = std::abs(static_cast<double>(det) / static_cast<double>(g.A));
        g.e1 = rational_point(-g.B - det, g.A);
        g.e2 = rational_point(-g.B + det, g.A);
        if (g.e2.approx < g.e1.approx) std::swap(g.e1, g.e2);
    }
    return g;
}

long long coprime_rep_count(const mpz_class& N) {
    if (N < 1) throw std::domain_error("count needs a positive integer");
    long long count = 0;
    mpz_class b2, b;
    for (mpz_class a = 1; 2 * a * a <= N; ++a) {
        b2 = N - a * a;
        mpz_sqrt(b.get_mpz_t(), b2.get_mpz_t());
        if (b * b != b2) continue;
        if (gcd(a, b) == 1) ++count;
    }
    return count;
}

HighMultiplicity construct_high_multiplicity(int n) {
    if (n < 1) throw std::domain_error("need at least one prime factor");

    HighMultiplicity out;
    out.N = 1;
    int found = 0;
    for (long long p = 5; found < n; p += 4) {
        bool prime = true;
        for (long long d = 3; d * d <= p; d += 2)
            if (p % d == 0) {
                prime = false;
                break;
            }
        if (!prime) continue;
        out.N *= static_cast<long>(p);
        ++found;
    }

    mpz_class b2, b;
    for (mpz_class a = 1; 2 * a * a <= out.N; ++a) {
        b2 = out.N - a * a;
        mpz_sqrt(b.get_mpz_t(), b2.get_mpz_t());
        if (b * b != b2) continue;
        if (gcd(a, b) == 1) out.representations.emplace_back(a, b);
    }
    return out;
}

}  // namespace fricke
