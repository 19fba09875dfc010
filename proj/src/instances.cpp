#include "hypertsp/instances.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace hypertsp {

namespace {

// Uniform in [0, 1) from the top 53 bits, identical on every platform.
double uniform01(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

PoincarePoint at_polar(double hyp_radius, double angle) {
    return PoincarePoint(std::polar(std::tanh(0.5 * hyp_radius), angle));
}

} // namespace

double max_representable_radius() { return 2.0 * std::atanh(1.0 - 2.0 * kBoundaryMargin); }

Instance gen_random_alpha_spaced(int n, double alpha, std::uint64_t seed) {
    if (n < 1) throw DomainError("n must be at least 1");
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");

    // Area rule: 4 pi sinh^2(R/2) >= 4n * 4 pi sinh^2(alpha/4), doubled.
    const double r0 = 2.0 * std::asinh(2.0 * std::sqrt(static_cast<double>(n)) * std::sinh(0.25 * alpha));
    const double radius = std::min(2.0 * r0, max_representable_radius());
    const double cosh_r = std::cosh(radius);

    std::mt19937_64 gen(seed);
    std::vector<PoincarePoint> pts;
    pts.reserve(static_cast<std::size_t>(n));
    long rejections = 0;
    while (pts.size() < static_cast<std::size_t>(n)) {
        // Hyperbolic area inside radius r is proportional to cosh r - 1.
        const double u = uniform01(gen);
        const double v = uniform01(gen);
        const double r = std::acosh(1.0 + u * (cosh_r - 1.0));
        const PoincarePoint p = at_polar(r, 2.0 * std::numbers::pi * v);
        bool ok = true;
        for (const auto& q : pts) {
            if (hyp_distance(p, q) < alpha) {
                ok = false;
                break;
            }
        }
        if (ok) {
            pts.push_back(p);
        } else if (++rejections >= 1000000) {
            throw DomainError("gave up after 10^6 rejections; the sampling disk (radius " +
                              std::to_string(radius) + ") is too small for this n and alpha");
        }
    }
    return Instance(std::move(pts), alpha);
}

Instance gen_regular_ngon(int n, double side) {
    if (n < 3) throw DomainError("a polygon needs at least 3 vertices");
    if (!(side > 0.0)) throw DomainError("side must be positive");
    const double step = 2.0 * std::numbers::pi / n;
    auto adjacent = [&](double r) { return hyp_distance(at_polar(r, 0.0), at_polar(r, step)); };

    double lo = 0.0;
    double hi = max_representable_radius();
    if (adjacent(hi) < side) throw DomainError("polygon does not fit in the representable disk");
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (adjacent(mid) < side ? lo : hi) = mid;
    }
    // Prefer the endpoint closer to the target side.
    const double r = std::abs(adjacent(lo) - side) <= std::abs(adjacent(hi) - side) ? lo : hi;
    std::vector<PoincarePoint> pts;
    for (int k = 0; k < n; ++k) pts.push_back(at_polar(r, k * step));
    return Instance(std::move(pts), side);
}

GridEmbedding gen_grid_like(int n, double c, double alpha) {
    if (n < 2) throw DomainError("grid needs n >= 2");
    if (!(c > 0.0) || !(alpha > 0.0)) throw DomainError("c and alpha must be positive");
    GridEmbedding g;
    g.n = n;
    g.c = c;
    g.alpha = alpha;
    const double step = c * alpha;
    for (int i = 0; i < n; ++i) g.hypercycle_offsets.push_back(i * step);
    for (int j = 0; j < n; ++j) {
        const double s = (j - 0.5 * (n - 1)) * step;
        g.base_positions.push_back(s);
        const double x = std::tanh(0.5 * s);
        if (std::abs(x) > 1.0 - kBoundaryMargin) throw DomainError("grid is not representable");
        g.perp_lines.push_back(HLine::through_point_at_angle(PoincarePoint(x, 0.0), 0.5 * std::numbers::pi));
    }
    g.points.reserve(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i) {
        const Complex h{0.0, std::tanh(0.5 * g.hypercycle_offsets[static_cast<std::size_t>(i)])};
        for (int j = 0; j < n; ++j) {
            const double x = std::tanh(0.5 * g.base_positions[static_cast<std::size_t>(j)]);
            const Complex z = (h + x) / (1.0 + x * h);
            if (std::abs(z) > 1.0 - kBoundaryMargin) throw DomainError("grid is not representable");
            g.points.emplace_back(z);
        }
    }
    return g;
}

Instance GridEmbedding::instance() const { return Instance(points, c * alpha); }

SpacingReport verify_spacing(const Instance& inst) {
    SpacingReport r;
    r.min = min_spacing(inst);
    r.ok = r.min >= inst.alpha() - geometry_epsilon();
    return r;
}

} // namespace hypertsp
