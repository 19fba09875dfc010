#pragma once

// Reference computations independent of the library formulas. Distances and
// crossings go through the hyperboloid model; lengths come from quadrature.

#include "hypertsp/geometry.hpp"
#include "hypertsp/tour.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

namespace oracle {

using hypertsp::Complex;
using Vec3 = std::array<double, 3>;

inline Vec3 hyperboloid(Complex z) {
    const double r2 = std::norm(z);
    const double s = 1.0 / (1.0 - r2);
    return {(1.0 + r2) * s, 2.0 * z.real() * s, 2.0 * z.imag() * s};
}

inline double minkowski(const Vec3& a, const Vec3& b) { return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline double distance(Complex a, Complex b) {
    return std::acosh(std::max(1.0, -minkowski(hyperboloid(a), hyperboloid(b))));
}

/// Klein coordinates as the central projection of the hyperboloid onto x0 = 1.
inline Complex klein(Complex z) {
    const Vec3 X = hyperboloid(z);
    return {X[1] / X[0], X[2] / X[0]};
}

/// Normal of the plane through the origin containing the geodesic through a, b.
inline Vec3 plane_normal(Complex a, Complex b) {
    const Vec3 X = hyperboloid(a), Y = hyperboloid(b);
    const Vec3 c{X[1] * Y[2] - X[2] * Y[1], X[2] * Y[0] - X[0] * Y[2], X[0] * Y[1] - X[1] * Y[0]};
    return {-c[0], c[1], c[2]};
}

/// Open segments ab and cd cross: each pair of endpoints is split strictly
/// by the other segment's plane.
inline bool segments_cross(Complex a, Complex b, Complex c, Complex d) {
    const Vec3 n1 = plane_normal(a, b), n2 = plane_normal(c, d);
    const double s1 = minkowski(n1, hyperboloid(c)) * minkowski(n1, hyperboloid(d));
    const double s2 = minkowski(n2, hyperboloid(a)) * minkowski(n2, hyperboloid(b));
    return s1 < 0.0 && s2 < 0.0;
}

/// Hyperbolic length of the curve gamma: [t0, t1] -> disk, by adaptive
/// Gauss-Kronrod quadrature of 2|gamma'| / (1 - |gamma|^2) with a central
/// difference derivative.
inline double curve_length(const std::function<Complex(double)>& gamma, double t0, double t1) {
    const double h = 1e-6 * (t1 - t0);
    auto integrand = [&](double t) {
        const Complex d = (gamma(t + h) - gamma(t - h)) / (2.0 * h);
        return 2.0 * std::abs(d) / (1.0 - std::norm(gamma(t)));
    };
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, t0, t1, 15, 1e-13);
}

/// Point on the Euclidean chord between Klein images of a and b that is
/// equidistant from both, found by bisection.
inline Complex midpoint_by_bisection(Complex a, Complex b) {
    const Complex ka = klein(a), kb = klein(b);
    auto at = [&](double s) {
        const Complex k = ka + s * (kb - ka);
        const double k2 = std::norm(k);
        return k / (1.0 + std::sqrt(1.0 - k2));
    };
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const Complex p = at(mid);
        if (distance(a, p) < distance(p, b)) lo = mid; else hi = mid;
    }
    return at(0.5 * (lo + hi));
}

/// Shortest tour length by enumerating all permutations that fix point 0.
inline double exhaustive_tour_length(const hypertsp::Instance& inst) {
    const std::size_t n = inst.size();
    std::vector<std::size_t> rest(n - 1);
    std::iota(rest.begin(), rest.end(), 1);
    double best = std::numeric_limits<double>::infinity();
    do {
        double len = distance(inst.point(0).z(), inst.point(rest.front()).z()) +
                     distance(inst.point(rest.back()).z(), inst.point(0).z());
        for (std::size_t i = 0; i + 1 < rest.size(); ++i)
            len += distance(inst.point(rest[i]).z(), inst.point(rest[i + 1]).z());
        best = std::min(best, len);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return best;
}

/// Shortest path cover: all ways of assigning the free points, in order,
/// to the paths between the matched boundary pairs.
inline double exhaustive_path_cover_length(const hypertsp::Instance& inst, std::vector<std::size_t> P,
                                           const std::vector<std::size_t>& B,
                                           const hypertsp::Matching& M) {
    std::vector<std::size_t> free;
    for (std::size_t p : P)
        if (std::find(B.begin(), B.end(), p) == B.end()) free.push_back(p);
    if (M.empty()) return free.empty() ? 0.0 : std::numeric_limits<double>::infinity();
    const std::size_t k = M.size();
    double best = std::numeric_limits<double>::infinity();
    std::sort(free.begin(), free.end());
    // Permute the free points, then cut the sequence into k consecutive runs.
    do {
        std::vector<std::size_t> cuts(k - 1, 0);
        std::function<void(std::size_t, std::size_t)> cut = [&](std::size_t idx, std::size_t from) {
            if (idx + 1 == k || k == 1) {
                double len = 0.0;
                std::size_t start = 0;
                for (std::size_t pth = 0; pth < k; ++pth) {
                    const std::size_t end = pth + 1 < k ? cuts[pth] : free.size();
                    std::size_t prev = M[pth].u;
                    for (std::size_t i = start; i < end; ++i) {
                        len += inst.distance(prev, free[i]);
                        prev = free[i];
                    }
                    len += inst.distance(prev, M[pth].v);
                    start = end;
                }
                best = std::min(best, len);
                return;
            }
            for (std::size_t c = from; c <= free.size(); ++c) {
                cuts[idx] = c;
                cut(idx + 1, c);
            }
        };
        cut(0, 0);
    } while (std::next_permutation(free.begin(), free.end()));
    return best;
}

} // namespace oracle
