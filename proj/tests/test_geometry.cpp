#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypertsp/geometry.hpp"
#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace hypertsp;
using std::numbers::pi;

namespace {

PoincarePoint random_point(std::mt19937_64& rng, double max_norm = 0.95) {
    std::uniform_real_distribution<double> r(0.0, max_norm), a(-pi, pi);
    return PoincarePoint(std::polar(r(rng), a(rng)));
}

} // namespace

TEST_CASE("distance: known values") {
    CHECK(hyp_distance({0.0, 0.0}, {0.5, 0.0}) == doctest::Approx(std::log(3.0)).epsilon(1e-12));
    CHECK(hyp_distance({0.5, 0.0}, {0.0, 0.5}) == doctest::Approx(1.6807).epsilon(1e-4));
    CHECK(hyp_distance({0.3, -0.2}, {0.3, -0.2}) == 0.0);
}

TEST_CASE("distance: matches hyperboloid model") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        const auto p = random_point(rng), q = random_point(rng);
        const double d = hyp_distance(p, q);
        CHECK(d == doctest::Approx(oracle::distance(p.z(), q.z())).epsilon(1e-9));
        CHECK(d == doctest::Approx(hyp_distance(q, p)).epsilon(1e-14));
    }
}

TEST_CASE("points outside the disk margin are rejected") {
    CHECK_THROWS_AS(PoincarePoint(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(PoincarePoint(0.0, 1.0 - 1e-7), DomainError);
    CHECK_THROWS_AS(PoincarePoint(std::nan(""), 0.0), DomainError);
    CHECK_NOTHROW(PoincarePoint(0.0, 1.0 - 1e-5));
    CHECK_NOTHROW(PoincarePoint::interior({1.0 - 1e-9, 0.0}));
}

TEST_CASE("Klein round trip and projection") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const auto p = random_point(rng, 0.999);
        const KleinPoint k = poincare_to_klein(p);
        const Complex ko = oracle::klein(p.z());
        CHECK(k.x() == doctest::Approx(ko.real()).epsilon(1e-12));
        CHECK(k.y() == doctest::Approx(ko.imag()).epsilon(1e-12));
        const PoincarePoint back = klein_to_poincare(k);
        CHECK(std::abs(back.z() - p.z()) < 1e-12);
    }
}

TEST_CASE("segments_cross agrees with hyperboloid planes") {
    std::mt19937_64 rng(3);
    int crossings = 0;
    for (int i = 0; i < 2000; ++i) {
        const auto a = random_point(rng), b = random_point(rng), c = random_point(rng), d = random_point(rng);
        const bool got = segments_cross(HSegment(a, b), HSegment(c, d));
        CHECK(got == oracle::segments_cross(a.z(), b.z(), c.z(), d.z()));
        crossings += got;
    }
    CHECK(crossings > 100);
}

TEST_CASE("segments_cross: shared endpoint and overlap") {
    const PoincarePoint a(0.0, 0.0), b(0.5, 0.0), c(0.2, 0.4), d(0.25, 0.0);
    CHECK_FALSE(segments_cross(HSegment(a, b), HSegment(b, c)));
    CHECK_THROWS_AS(segments_cross(HSegment(a, b), HSegment(d, PoincarePoint(0.7, 0.0))), DegenerateError);
    CHECK_FALSE(segments_cross(HSegment(a, d), HSegment(b, PoincarePoint(0.7, 0.0))));
}

TEST_CASE("angle of parallelism") {
    CHECK(angle_of_parallelism(std::log(1.0 + std::sqrt(2.0))) == doctest::Approx(pi / 4).epsilon(1e-12));
    CHECK(angle_of_parallelism(5.0) == doctest::Approx(0.013476).epsilon(1e-4));
    CHECK_THROWS_AS(angle_of_parallelism(0.0), DomainError);
}

TEST_CASE("hypercycle arc length against quadrature") {
    CHECK(hypercycle_arc_length(2.0, 1.2) == doctest::Approx(3.62133).epsilon(1e-5));
    for (double off : {0.1, 0.7, 1.2, 2.5}) {
        const double L = 1.7;
        const double h = std::tanh(0.5 * off);
        // Equidistant curve above the real diameter, parametrized by foot position.
        auto gamma = [&](double s) {
            const double x = std::tanh(0.5 * s);
            const Complex ih(0.0, h);
            return (ih + x) / (1.0 + x * ih);
        };
        const double quad = oracle::curve_length(gamma, -0.5 * L, 0.5 * L);
        CHECK(hypercycle_arc_length(L, off) == doctest::Approx(quad).epsilon(1e-6));
        for (double s : {-0.5 * L, 0.0, 0.3 * L})
            CHECK(signed_distance_to_real_axis(gamma(s)) == doctest::Approx(off).epsilon(1e-10));
    }
}

TEST_CASE("circumference against quadrature") {
    for (double r : {0.5, 1.0, 2.0, 4.0}) {
        const double R = std::tanh(0.5 * r);
        const double quad = oracle::curve_length([&](double th) { return std::polar(R, th); }, 0.0, 2.0 * pi);
        CHECK(quad == doctest::Approx(2.0 * pi * std::sinh(r)).epsilon(1e-9));
    }
}

TEST_CASE("lines, feet and sides") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        const auto p = random_point(rng), q = random_point(rng), x = random_point(rng);
        const HLine line = HLine::through(p, q);
        const double r = oracle::distance(x.z(), p.z());
        (void)r;
        const PoincarePoint foot = perpendicular_foot(x, line);
        CHECK(hyp_distance(x, foot) == doctest::Approx(distance_to_line(x, line)).epsilon(1e-8));
        // The foot minimizes distance: nearby points on the line are farther.
        for (double t : {-0.01, 0.01}) {
            const PoincarePoint other = geodesic_point(foot, p == foot ? q : p, t);
            CHECK(hyp_distance(x, other) >= hyp_distance(x, foot) - 1e-9);
        }
        const PoincarePoint mirrored = reflect_through_point(x, foot);
        if (distance_to_line(x, line) > 1e-6) CHECK(side_of_line(mirrored, line) == -side_of_line(x, line));
        CHECK(side_of_line(p, line) == 0);
    }
}

TEST_CASE("line directions and canonical order") {
    const HLine l = HLine::from_ideal_angles(0.5, -2.0);
    CHECK(l.first_angle() < l.second_angle());
    CHECK(l.first_angle() == doctest::Approx(-2.0));
    const HLine diam = HLine::through({-0.5, 0.0}, {0.5, 0.0});
    CHECK(side_of_line({0.0, 0.3}, diam) == -side_of_line({0.0, -0.3}, diam));
    CHECK(std::abs(side_of_line({0.0, 0.3}, diam)) == 1);
    const PoincarePoint c(0.2, 0.1);
    const HLine at = HLine::through_point_at_angle(c, 0.7);
    CHECK(distance_to_line(c, at) < 1e-12);
}

TEST_CASE("geodesic midpoint equals bisection midpoint") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 200; ++i) {
        const auto a = random_point(rng), b = random_point(rng);
        const PoincarePoint m = geodesic_point(a, b, 0.5);
        CHECK(std::abs(m.z() - oracle::midpoint_by_bisection(a.z(), b.z())) < 1e-9);
        CHECK(hyp_distance(a, m) == doctest::Approx(0.5 * hyp_distance(a, b)).epsilon(1e-10));
    }
}

TEST_CASE("frames are isometries") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        const auto c = random_point(rng), p = random_point(rng), q = random_point(rng);
        const DiskFrame f = DiskFrame::centered(c, 1.1);
        CHECK(std::abs(f.to_frame(c)) < 1e-12);
        CHECK(oracle::distance(f.to_frame(p), f.to_frame(q)) ==
              doctest::Approx(hyp_distance(p, q)).epsilon(1e-9));
        CHECK(std::abs(f.from_frame(f.to_frame(p)) - p.z()) < 1e-12);
        const HLine line = HLine::through(p, q);
        const DiskFrame g = DiskFrame::aligned(line);
        CHECK(std::abs(g.to_frame(p).imag()) < 1e-9);
        CHECK(std::abs(g.to_frame(q).imag()) < 1e-9);
    }
}

TEST_CASE("geometry epsilon is configurable") {
    const double old = geometry_epsilon();
    set_geometry_epsilon(1e-6);
    CHECK(geometry_epsilon() == 1e-6);
    set_geometry_epsilon(old);
    CHECK_THROWS(set_geometry_epsilon(-1.0));
}
