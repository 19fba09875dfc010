#include "hypertsp/separator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

// Centerpoints are computed on Klein coordinates: hyperbolic lines are
// straight chords there, so half-plane counts are Euclidean.

namespace hypertsp {

namespace {

using V = Complex;

double cross(V a, V b) { return a.real() * b.imag() - a.imag() * b.real(); }
double orient(V a, V b, V c) { return cross(b - a, c - a); }

constexpr double kRotation = 1e-9;     // generic-direction offset (radians)
constexpr double kAngleTol = 1e-12;    // collinearity tolerance (radians)
constexpr double kOnLine = 1e-15;      // Klein offsets this small count as on the line

std::vector<V> klein_coords(std::span<const PoincarePoint> points) {
    std::vector<V> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(to_klein(p.z()));
    return out;
}

std::optional<V> segment_intersection(V a, V b, V c, V d) {
    const double den = cross(b - a, d - c);
    if (den == 0.0) return std::nullopt;
    const double s = cross(c - a, d - c) / den;
    return a + s * (b - a);
}

bool in_triangle(V p, V a, V b, V c) {
    const double o1 = orient(a, b, p);
    const double o2 = orient(b, c, p);
    const double o3 = orient(c, a, p);
    return (o1 >= 0 && o2 >= 0 && o3 >= 0) || (o1 <= 0 && o2 <= 0 && o3 <= 0);
}

// Radon point of four planar points.
V radon_point(const std::array<V, 4>& q) {
    for (int i = 0; i < 4; ++i) {
        std::array<V, 3> rest;
        int k = 0;
        for (int j = 0; j < 4; ++j)
            if (j != i) rest[k++] = q[j];
        if (in_triangle(q[i], rest[0], rest[1], rest[2])) return q[i];
    }
    static constexpr int kPairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (const auto& pr : kPairings) {
        const V a = q[pr[0]], b = q[pr[1]], c = q[pr[2]], d = q[pr[3]];
        if (orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0) {
            if (auto x = segment_intersection(a, b, c, d)) return *x;
        }
    }
    return 0.25 * (q[0] + q[1] + q[2] + q[3]);
}

V iterated_radon(std::vector<V> pts) {
    while (pts.size() >= 4) {
        std::vector<V> next;
        next.reserve(pts.size() / 4 + 3);
        std::size_t i = 0;
        for (; i + 4 <= pts.size(); i += 4)
            next.push_back(radon_point({pts[i], pts[i + 1], pts[i + 2], pts[i + 3]}));
        for (; i < pts.size(); ++i) next.push_back(pts[i]);
        if (next.size() == pts.size()) break;
        pts = std::move(next);
    }
    V sum{0.0, 0.0};
    for (V p : pts) sum += p;
    return sum / static_cast<double>(pts.size());
}

std::size_t max_open_count(const std::vector<V>& pts, V c) {
    std::size_t best = 0;
    auto evaluate = [&](V normal) {
        std::size_t pos = 0, neg = 0;
        for (V p : pts) {
            const double s = (p - c).real() * normal.real() + (p - c).imag() * normal.imag();
            if (s > kOnLine) ++pos;
            else if (s < -kOnLine) ++neg;
        }
        best = std::max({best, pos, neg});
    };
    bool any = false;
    for (V p : pts) {
        const V d = p - c;
        if (std::abs(d) <= kOnLine) continue;
        any = true;
        const V normal = V{-d.imag(), d.real()} / std::abs(d);
        evaluate(normal * std::polar(1.0, kRotation));
        evaluate(normal * std::polar(1.0, -kRotation));
    }
    if (!any) return 0;
    return best;
}

struct HalfPlane {
    V a;  // boundary passes through a and b; keep orient(a, b, c) >= -slack
    V b;
};

std::vector<V> clip(const std::vector<V>& poly, const HalfPlane& h, double slack) {
    std::vector<V> out;
    const std::size_t m = poly.size();
    if (m == 0) return out;
    const double len = std::abs(h.b - h.a);
    auto value = [&](V p) { return orient(h.a, h.b, p) / len + slack; };
    for (std::size_t i = 0; i < m; ++i) {
        const V cur = poly[i];
        const V nxt = poly[(i + 1) % m];
        const double vc = value(cur);
        const double vn = value(nxt);
        if (vc >= 0) out.push_back(cur);
        if ((vc >= 0) != (vn >= 0)) {
            const double s = vc / (vc - vn);
            out.push_back(cur + s * (nxt - cur));
        }
    }
    return out;
}

// Point of the Tukey-depth region of depth ceil(n/3): the intersection of all
// closed half-planes bounded by a line through two input points that hold
// at least floor(2n/3) + 1 points.
std::optional<V> depth_region_point(const std::vector<V>& pts) {
    const std::size_t n = pts.size();
    const std::size_t need = 2 * n / 3 + 1;
    std::vector<HalfPlane> constraints;
    std::vector<double> angles;
    for (std::size_t i = 0; i < n; ++i) {
        angles.clear();
        for (std::size_t j = 0; j < n; ++j) {
            const V d = pts[j] - pts[i];
            if (j != i && std::abs(d) != 0.0) angles.push_back(std::arg(d));
        }
        std::sort(angles.begin(), angles.end());
        std::vector<double> doubled(angles);
        for (double a : angles) doubled.push_back(a + 2.0 * std::numbers::pi);
        // Points with angle in the open interval (lo, hi); lo lies in [-pi, pi].
        auto count_in = [&](double lo, double hi) {
            const auto first = std::upper_bound(doubled.begin(), doubled.end(), lo);
            const auto last = std::lower_bound(doubled.begin(), doubled.end(), hi);
            return last > first ? static_cast<std::size_t>(last - first) : std::size_t{0};
        };
        for (std::size_t j = i + 1; j < n; ++j) {
            const V d = pts[j] - pts[i];
            if (std::abs(d) == 0.0) continue;
            const double phi = std::arg(d);
            const std::size_t left = count_in(phi + kAngleTol, phi + std::numbers::pi - kAngleTol);
            const std::size_t right =
                count_in(phi + std::numbers::pi + kAngleTol, phi + 2.0 * std::numbers::pi - kAngleTol);
            const std::size_t on = n - left - right;
            if (left + on >= need) constraints.push_back({pts[i], pts[j]});
            if (right + on >= need) constraints.push_back({pts[j], pts[i]});
        }
    }
    for (double slack = 1e-12; slack < 1e-3; slack *= 100.0) {
        std::vector<V> poly{{-1.0, -1.0}, {1.0, -1.0}, {1.0, 1.0}, {-1.0, 1.0}};
        for (const auto& h : constraints) {
            poly = clip(poly, h, slack);
            if (poly.empty()) break;
        }
        if (poly.empty()) continue;
        V sum{0.0, 0.0};
        for (V p : poly) sum += p;
        return sum / static_cast<double>(poly.size());
    }
    return std::nullopt;
}

} // namespace

std::size_t max_open_halfplane_count(std::span<const PoincarePoint> points,
                                     const PoincarePoint& c) {
    return max_open_count(klein_coords(points), to_klein(c.z()));
}

bool is_centerpoint(std::span<const PoincarePoint> points, const PoincarePoint& c) {
    return max_open_halfplane_count(points, c) <= 2 * points.size() / 3;
}

PoincarePoint centerpoint(std::span<const PoincarePoint> points) {
    if (points.empty()) throw DomainError("centerpoint of an empty point set");
    if (points.size() == 1) return points.front();

    const std::vector<V> pts = klein_coords(points);
    const std::size_t limit = 2 * pts.size() / 3;

    // Verified after the conversion back, so round-off cannot break it.
    auto certified = [&](V k) -> std::optional<PoincarePoint> {
        const PoincarePoint c = PoincarePoint::interior(from_klein(k));
        if (max_open_count(pts, to_klein(c.z())) <= limit) return c;
        return std::nullopt;
    };
    if (auto c = certified(iterated_radon(pts))) return *c;
    if (auto deep = depth_region_point(pts))
        if (auto c = certified(*deep)) return *c;

    throw DegenerateError("centerpoint construction failed verification");
}

} // namespace hypertsp
