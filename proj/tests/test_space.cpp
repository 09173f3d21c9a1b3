#include "doctest.h"
#include "fricke/space.hpp"
#include "fricke/trace.hpp"
#include "util.hpp"

#include <cmath>
#include <random>

using namespace fricke;

TEST_SUITE("space") {

TEST_CASE("validate accepts the cusped symmetric point") {
    auto v = validate(FrickePoint{3.0, 3.0, 3.0});
    CHECK(v.valid);
    CHECK(v.relation == 0.0);
    CHECK(v.boundary == 0.0);
    CHECK(v.diagnostic.find("cusped") != std::string::npos);
}

TEST_CASE("validate classifies points near a cusp root") {
    // R(3,3,z) = z^2 - 9z + 18 vanishes at z = 3 and z = 6; between the
    // roots the relation is negative and the point carries a real boundary.
    auto inside = validate(FrickePoint{3.0, 3.0, 3.1});
    CHECK(inside.valid);
    CHECK(inside.relation == doctest::Approx(-0.29).epsilon(1e-12));
    CHECK(inside.boundary > 0.0);

    auto outside = validate(FrickePoint{3.0, 3.0, 6.1});
    CHECK_FALSE(outside.valid);
    CHECK(outside.relation > 0.0);

    auto cusp = validate(FrickePoint{3.0, 3.0, 6.0});
    CHECK(cusp.valid);
    CHECK(cusp.relation == 0.0);
}

TEST_CASE("validate rejects small coordinates") {
    CHECK_FALSE(validate(FrickePoint{2.0, 3.0, 3.0}).valid);
    CHECK_FALSE(validate(FrickePoint{3.0, 1.5, 3.0}).valid);
    CHECK_FALSE(validate(FrickePoint{3.0, 3.0, -6.0}).valid);
}

TEST_CASE("boundary length matches the commutator trace") {
    CHECK(boundary_length(FrickePoint{3.0, 3.0, 3.0}) == 0.0);
    CHECK(boundary_length(FrickePoint{3.0, 3.0, 6.0}) == 0.0);
    // R(6,6,6) = 108 - 216 = -108, commutator trace -110 = -2 cosh(eps/2).
    CHECK(boundary_length(FrickePoint{6.0, 6.0, 6.0}) ==
          doctest::Approx(2.0 * std::acosh(55.0)).epsilon(1e-14));
    CHECK_THROWS_AS(boundary_length(FrickePoint{3.0, 3.0, 6.1}), std::domain_error);
}

TEST_CASE("boundary length agrees with realized generators") {
    std::mt19937_64 rng(4501);
    for (int i = 0; i < 200; ++i) {
        auto t = test_util::sample_valid_point(rng);
        auto [A, B] = realize_generators(t.x, t.y, t.z);
        double k = word_trace(A, B, "ABab");
        double want = 2.0 * std::acosh(-k / 2.0);
        double got = boundary_length(FrickePoint{t.x, t.y, t.z});
        CHECK(got == doctest::Approx(want).epsilon(1e-8));
    }
}

TEST_CASE("slice leaves pass through the expected points") {
    auto slice = TeichSlice::from_boundary(0.0);
    CHECK(slice.r_eps == 0.0);

    auto p = leaf_point(slice, 3.0, 0.0);
    CHECK(p.x == 3.0);
    CHECK(p.y == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(p.z == doctest::Approx(3.0).epsilon(1e-15));

    // theta = 0 puts the point on the symmetry axis y = z.
    auto q = leaf_point(slice, 4.7, 0.0);
    CHECK(q.y == q.z);

    CHECK_THROWS_AS(leaf_point(slice, 2.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(TeichSlice::from_boundary(-1.0), std::domain_error);
}

TEST_CASE("leaf through the cusp slice recovers the other cusp root") {
    // On the eps = 0 slice at x = 3 the leaf hits y = 3 twice; the second
    // crossing must have z = 6, the other root of z^2 - 9z + 18.  y dips
    // below 3 at theta = -atanh(sqrt(1/5)) and grows past it as theta -> -inf.
    auto slice = TeichSlice::from_boundary(0.0);
    double lo = -3.0, hi = -std::atanh(std::sqrt(0.2));
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (leaf_point(slice, 3.0, mid).y > 3.0 ? lo : hi) = mid;
    }
    auto p = leaf_point(slice, 3.0, lo);
    CHECK(p.y == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(p.z == doctest::Approx(6.0).epsilon(1e-10));
}

TEST_CASE("leaf points satisfy the slice relation") {
    std::mt19937_64 rng(4502);
    std::uniform_real_distribution<double> eps_d(0.0, 4.0);
    std::uniform_real_distribution<double> x_d(2.1, 12.0);
    std::uniform_real_distribution<double> th_d(-2.5, 2.5);
    for (int i = 0; i < 1000; ++i) {
        auto slice = TeichSlice::from_boundary(eps_d(rng));
        auto p = leaf_point(slice, x_d(rng), th_d(rng));
        CHECK(validate(p).valid);
        CHECK(std::abs(relation_value(p) - slice.r_eps) < 1e-11);
    }
}

TEST_CASE("leaf minimum bounds the third coordinate") {
    std::mt19937_64 rng(4503);
    std::uniform_real_distribution<double> eps_d(0.0, 4.0);
    std::uniform_real_distribution<double> x_d(2.1, 12.0);
    std::uniform_real_distribution<double> th_d(-2.5, 2.5);
    for (int i = 0; i < 500; ++i) {
        auto slice = TeichSlice::from_boundary(eps_d(rng));
        double x = x_d(rng);
        double floor = leaf_min_coordinate(slice, x);
        auto p = leaf_point(slice, x, th_d(rng));
        CHECK(std::min(p.y, p.z) >= floor - 1e-9);
        // z attains the floor at theta = atanh(sqrt((x-2)/(x+2))).
        double th_min = std::atanh(std::sqrt((x - 2.0) / (x + 2.0)));
        CHECK(leaf_point(slice, x, th_min).z == doctest::Approx(floor).epsilon(1e-12));
    }
}

TEST_CASE("trace of a slope at a point matches the recursion seeds") {
    FrickePoint p{3.0, 4.0, 5.0};
    CHECK(trace_of_slope(p, Slope(1, 0)) == 3.0);
    CHECK(trace_of_slope(p, Slope(0, 1)) == 4.0);
    CHECK(trace_of_slope(p, Slope(1, 1)) == 5.0);
    CHECK(trace_of_slope(p, Slope(1, -1)) == 7.0);
}

TEST_CASE("change of basis reproduces the worked example") {
    auto id = change_basis(FrickePoint{3.0, 3.0, 6.0}, Slope(1, 0), Slope(0, 1));
    CHECK(id.x == 3.0);
    CHECK(id.y == 3.0);
    CHECK(id.z == 6.0);

    auto r = change_basis(FrickePoint{3.0, 3.0, 6.0}, Slope(1, 1), Slope(0, 1));
    CHECK(r.x == 6.0);
    CHECK(r.y == 3.0);
    CHECK(r.z == 15.0);
    CHECK(boundary_length(r) == boundary_length(FrickePoint{3.0, 3.0, 6.0}));

    CHECK_THROWS_AS(change_basis(FrickePoint{3.0, 3.0, 6.0}, Slope(1, 1), Slope(1, -1)),
                    std::domain_error);
}

TEST_CASE("change of basis preserves the boundary length") {
    std::mt19937_64 rng(4504);
    const std::pair<Slope, Slope> bases[] = {
        {Slope(1, 1), Slope(0, 1)},
        {Slope(1, 1), Slope(1, 0)},
        {Slope(0, 1), Slope(1, 0)},
        {Slope(1, -1), Slope(1, 0)},
    };
    int kept = 0;
    while (kept < 300) {
        auto t = test_util::sample_valid_point(rng);
        FrickePoint p{t.x, t.y, t.z};
        // Keep the boundary away from the cusp, where acosh loses half the
        // digits of its argument's error.
        if (relation_value(p) > -0.3) continue;
        ++kept;
        for (const auto& [g, h] : bases) {
            auto q = change_basis(p, g, h);
            CHECK(validate(q).valid);
            CHECK(std::abs(boundary_length(q) - boundary_length(p)) < 1e-10);
        }
    }
}

TEST_CASE("symmetric family hits the prescribed boundary lengths") {
    auto c = symmetric_family(3.0);
    CHECK(boundary_length(c) == 0.0);

    auto p = symmetric_family(4.0);
    CHECK(p.x == 4.0);
    CHECK(p.y == 4.0);
    CHECK(p.z == 4.0);
    // commutator trace 3t^2 - t^3 - 2 = -18 at t = 4.
    CHECK(boundary_length(p) == doctest::Approx(2.0 * std::acosh(9.0)).epsilon(1e-14));

    CHECK(validate(symmetric_family(3.5)).valid);
    CHECK_THROWS_AS(symmetric_family(2.9), std::domain_error);
}

TEST_CASE("distinct points have distinct projective length profiles") {
    std::mt19937_64 rng(4505);
    const Slope probes[] = {Slope(1, 0), Slope(0, 1), Slope(1, 1), Slope(1, -1)};
    for (int i = 0; i < 1000; ++i) {
        auto a = test_util::sample_valid_point(rng);
        auto b = test_util::sample_valid_point(rng);
        double va[4], vb[4], na = 0, nb = 0;
        for (int j = 0; j < 4; ++j) {
            va[j] = length_from_trace(trace_of_slope(FrickePoint{a.x, a.y, a.z}, probes[j]));
            vb[j] = length_from_trace(trace_of_slope(FrickePoint{b.x, b.y, b.z}, probes[j]));
            na = std::max(na, va[j]);
            nb = std::max(nb, vb[j]);
        }
        double gap = 0;
        for (int j = 0; j < 4; ++j) gap = std::max(gap, std::abs(va[j] / na - vb[j] / nb));
        CHECK(gap > 1e-6);
    }
}

}
