#include "hypertsp/separator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace hypertsp {

namespace {

constexpr double kPi = std::numbers::pi;

// Direction of p seen from the origin of `frame`, as a line direction in [0, pi).
double line_direction(const DiskFrame& frame, const PoincarePoint& p) {
    const Complex w = frame.to_frame(p);
    double a = std::arg(w);
    if (a < 0.0) a += kPi;
    if (a >= kPi) a -= kPi;
    return a;
}

// T_x^{-1}(i y) for real x: the point at Poincare height y over the foot x.
Complex lift(double x, double y) {
    const Complex w{0.0, y};
    return (w + x) / (1.0 + x * w);
}

// Moves q off an input point it coincides with, towards the middle of the
// widest angular gap of the other points, keeping the centerpoint property.
PoincarePoint avoid_input_points(std::span<const PoincarePoint> points,
                                 std::span<const PoincarePoint> balance_set,
                                 PoincarePoint q) {
    const double eps = geometry_epsilon();
    auto coincident = std::find_if(points.begin(), points.end(), [&](const PoincarePoint& p) {
        return hyp_distance(p, q) <= eps;
    });
    if (coincident == points.end()) return q;

    const PoincarePoint p = *coincident;
    const DiskFrame frame = DiskFrame::centered(p);
    std::vector<double> dirs;
    for (const auto& o : points)
        if (hyp_distance(o, p) > eps) dirs.push_back(line_direction(frame, o));
    std::sort(dirs.begin(), dirs.end());

    std::vector<std::pair<double, double>> gaps;  // (width, bisector)
    if (dirs.empty()) {
        gaps.emplace_back(kPi, 0.5 * kPi);
    } else {
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            const double lo = dirs[i];
            const double hi = i + 1 < dirs.size() ? dirs[i + 1] : dirs.front() + kPi;
            gaps.emplace_back(hi - lo, lo + 0.5 * (hi - lo));
        }
    }
    std::stable_sort(gaps.begin(), gaps.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });

    // p ends up outside the empty cone of the moved apex, so its distance to
    // the separating line is at least delta sin(pi / 2n); keep that well above eps.
    const double n = static_cast<double>(points.size());
    const double delta = 100.0 * eps / std::sin(kPi / (2.0 * n));
    const double step = std::tanh(0.5 * delta);
    for (const auto& [width, bisector] : gaps) {
        for (double sign : {1.0, -1.0}) {
            const PoincarePoint moved = frame.point_from_frame(sign * std::polar(step, bisector));
            const bool clear = std::none_of(points.begin(), points.end(), [&](const PoincarePoint& o) {
                return hyp_distance(o, moved) <= 0.5 * delta;
            });
            if (clear && is_centerpoint(balance_set, moved)) return moved;
        }
    }
    throw DegenerateError("could not move the centerpoint off an input point");
}

SeparatorRegion make_region(std::span<const PoincarePoint> points, const PoincarePoint& q,
                            double alpha) {
    const std::size_t n = points.size();
    if (n < 2) throw DomainError("separator region needs at least two points");

    SeparatorRegion r;
    r.n = n;
    r.cone = empty_cone_line(points, q);
    r.qt = qt_length(static_cast<long long>(n));
    r.rho = std::min(rho_choice(alpha), 0.5 * alpha - geometry_epsilon());
    if (!(r.rho > 0.0)) throw DomainError("alpha too small for a positive region width");

    r.frame = DiskFrame::centered(q, r.cone.axis_angle);
    const double tx = std::tanh(0.5 * r.qt);
    const double hy = std::tanh(0.5 * r.rho);
    const Complex at = lift(tx, hy);
    const Complex bt = lift(tx, -hy);

    r.t = r.frame.point_from_frame(tx);
    r.t_prime = r.frame.point_from_frame(-tx);
    r.a_t = r.frame.point_from_frame(at);
    r.b_t = r.frame.point_from_frame(bt);
    r.a_t_prime = r.frame.point_from_frame(-at);
    r.b_t_prime = r.frame.point_from_frame(-bt);

    const HLine base = r.cone.axis;
    r.arc_ab = HypercycleArc{base, r.rho, side_of_line(r.a_t, base), r.a_t, r.b_t_prime};
    r.arc_ba = HypercycleArc{base, r.rho, side_of_line(r.b_t, base), r.b_t, r.a_t_prime};
    return r;
}

} // namespace

const char* to_string(SegmentClass c) {
    switch (c) {
    case SegmentClass::Crosses: return "crosses";
    case SegmentClass::Entering: return "entering";
    case SegmentClass::Inside: return "inside";
    case SegmentClass::Other: return "other";
    case SegmentClass::Disjoint: return "disjoint";
    }
    return "unknown";
}

bool SeparatorRegion::contains(const PoincarePoint& p) const {
    const double eps = geometry_epsilon();
    const Complex w = frame.to_frame(p);
    return std::abs(foot_position_on_real_axis(w)) <= qt + eps &&
           std::abs(signed_distance_to_real_axis(w)) <= rho + eps;
}

int SeparatorRegion::side(const PoincarePoint& p) const {
    const double h = signed_distance_to_real_axis(frame.to_frame(p));
    if (std::abs(h) <= geometry_epsilon()) return 0;
    return h > 0.0 ? 1 : -1;
}

double SeparatorRegion::arc_length() const { return hypercycle_arc_length(2.0 * qt, rho); }

ArcHits SeparatorRegion::arc_hits(const PoincarePoint& p1, const PoincarePoint& p2) const {
    // In Klein coordinates of the frame the two arcs lie on the ellipse
    //   sinh^2(rho) x^2 + cosh^2(rho) y^2 = sinh^2(rho).
    const Complex k1 = to_klein(frame.to_frame(p1));
    const Complex k2 = to_klein(frame.to_frame(p2));
    const Complex d = k2 - k1;
    const double sh2 = std::sinh(rho) * std::sinh(rho);
    const double ch2 = std::cosh(rho) * std::cosh(rho);
    const double a = sh2 * d.real() * d.real() + ch2 * d.imag() * d.imag();
    const double b = 2.0 * (sh2 * k1.real() * d.real() + ch2 * k1.imag() * d.imag());
    const double c = sh2 * k1.real() * k1.real() + ch2 * k1.imag() * k1.imag() - sh2;

    ArcHits hits;
    const double disc = b * b - 4.0 * a * c;
    if (a == 0.0 || disc < 0.0) return hits;
    const double sq = std::sqrt(disc);
    const double qq = -0.5 * (b + std::copysign(sq, b));
    double roots[2] = {qq / a, qq != 0.0 ? c / qq : qq / a};
    if (disc == 0.0) roots[1] = roots[0];
    const double eps = geometry_epsilon();
    for (int i = 0; i < (disc == 0.0 ? 1 : 2); ++i) {
        const double lam = roots[i];
        if (lam < 0.0 || lam > 1.0) continue;
        const Complex k = k1 + lam * d;
        const double s = std::atanh(k.real());
        if (std::abs(s) > qt + eps) continue;
        const double pos = (qt - s) * std::cosh(rho);
        (k.imag() > 0.0 ? hits.upper : hits.lower).push_back(pos);
    }
    return hits;
}

DoubleCone empty_cone_line(std::span<const PoincarePoint> points, const PoincarePoint& q) {
    if (points.empty()) throw DomainError("empty point set");
    const double eps = geometry_epsilon();
    const DiskFrame frame = DiskFrame::centered(q);

    std::vector<std::pair<double, std::size_t>> dirs;
    dirs.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (hyp_distance(points[i], q) <= eps)
            throw DegenerateError("an input point coincides with the cone apex");
        dirs.emplace_back(line_direction(frame, points[i]), i);
    }
    std::sort(dirs.begin(), dirs.end());

    double best_gap = -1.0;
    double axis = 0.0;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        const double lo = dirs[i].first;
        const double hi = i + 1 < dirs.size() ? dirs[i + 1].first : dirs.front().first + kPi;
        if (hi - lo > best_gap) {
            best_gap = hi - lo;
            axis = lo + 0.5 * (hi - lo);
        }
    }
    if (axis >= kPi) axis -= kPi;

    DoubleCone cone{q, HLine::through_point_at_angle(q, axis),
                    kPi / (2.0 * static_cast<double>(points.size())), axis};
    return cone;
}

double qt_length(long long n) {
    if (n < 2) throw DomainError("qt_length needs n >= 2");
    return std::asinh(1.0 / std::tan(kPi / (2.0 * static_cast<double>(n))));
}

double rho_choice(double alpha) {
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    return std::min(0.3 * alpha, 1.2);
}

SeparatorRegion build_region(std::span<const PoincarePoint> points, double alpha) {
    if (points.size() < 2) throw DomainError("separator region needs at least two points");
    const PoincarePoint q = avoid_input_points(points, points, centerpoint(points));
    return make_region(points, q, alpha);
}

SeparatorRegion build_region_for_boundary(std::span<const PoincarePoint> points,
                                          std::span<const std::size_t> boundary,
                                          double alpha) {
    if (points.size() < 2) throw DomainError("separator region needs at least two points");
    if (boundary.empty()) throw DomainError("empty boundary set");
    std::vector<PoincarePoint> subset;
    subset.reserve(boundary.size());
    for (std::size_t i : boundary) subset.push_back(points[i]);
    const PoincarePoint q = avoid_input_points(points, subset, centerpoint(subset));
    return make_region(points, q, alpha);
}

SeparatorBounds separator_bounds(double n, double alpha, double rho) {
    if (!(n >= 1.0)) throw DomainError("point count must be positive");
    if (!(rho > 0.0)) throw DomainError("rho must be positive");
    if (!(alpha > 2.0 * rho)) throw DomainError("bounds need alpha > 2 rho");
    const double log_term = std::log(n) + 1.0;
    SeparatorBounds b{1.0 + 2.0 * log_term / (alpha - 2.0 * rho),
                      2.0 + 2.0 * log_term * std::cosh(rho) / rho};
    if (!std::isfinite(b.n_in) || !std::isfinite(b.s_cr))
        throw DomainError("separator bounds are not finite");
    return b;
}

SeparatorBounds bounds(const SeparatorRegion& region, double alpha) {
    return separator_bounds(static_cast<double>(region.n), alpha, region.rho);
}

SegmentClass classify_segment(const HSegment& seg, const SeparatorRegion& region) {
    const bool in_a = region.contains(seg.a());
    const bool in_b = region.contains(seg.b());
    if (in_a && in_b) return SegmentClass::Inside;
    if (in_a || in_b) return SegmentClass::Entering;
    const ArcHits hits = region.arc_hits(seg.a(), seg.b());
    if (!hits.upper.empty() && !hits.lower.empty()) return SegmentClass::Crosses;
    if (!hits.upper.empty() || !hits.lower.empty()) return SegmentClass::Other;
    return SegmentClass::Disjoint;
}

double arc_position(const PoincarePoint& p, const HypercycleArc& arc) {
    const double eps = geometry_epsilon();
    const DiskFrame frame = DiskFrame::aligned(arc.base);
    const Complex w = frame.to_frame(p);
    const double h = signed_distance_to_real_axis(w);
    const bool on_curve = std::abs(std::abs(h) - arc.offset) <= eps &&
                          (arc.offset <= eps || (h > 0.0 ? 1 : -1) == arc.side);
    const double s = foot_position_on_real_axis(w);
    const double s0 = foot_position_on_real_axis(frame.to_frame(arc.start));
    const double s1 = foot_position_on_real_axis(frame.to_frame(arc.end));
    const bool within = s >= std::min(s0, s1) - eps && s <= std::max(s0, s1) + eps;
    if (!on_curve || !within) throw DomainError("point does not lie on the hypercycle arc");
    return std::abs(s - s0) * std::cosh(arc.offset);
}

} // namespace hypertsp
