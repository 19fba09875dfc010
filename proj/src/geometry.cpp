#include "hypertsp/geometry.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>

namespace hypertsp {

namespace {

std::atomic<double> g_geometry_epsilon{1e-9};

// Angle of a unit complex number normalized to [-pi, pi).
double canonical_angle(Complex e) {
    double a = std::arg(e);
    if (a >= std::numbers::pi) a -= 2.0 * std::numbers::pi;
    return a;
}

Complex normalized(Complex e) { return e / std::abs(e); }

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

double orient(Complex a, Complex b, Complex c) { return cross(b - a, c - a); }

int sign_with_tolerance(double v, double tol) {
    if (v > tol) return 1;
    if (v < -tol) return -1;
    return 0;
}

constexpr double kOrientTolerance = 1e-14;

} // namespace

double geometry_epsilon() { return g_geometry_epsilon.load(std::memory_order_relaxed); }

void set_geometry_epsilon(double eps) {
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw DomainError("geometry epsilon must be positive and finite");
    g_geometry_epsilon.store(eps, std::memory_order_relaxed);
}

PoincarePoint::PoincarePoint(double x, double y) : x_(x), y_(y) {
    if (!std::isfinite(x) || !std::isfinite(y))
        throw DomainError("non-finite coordinate");
    const double r2 = x * x + y * y;
    if (r2 >= 1.0)
        throw DomainError("point lies on or outside the unit circle");
    if (std::sqrt(r2) > 1.0 - kBoundaryMargin)
        throw DomainError("point too close to the unit circle");
}

PoincarePoint PoincarePoint::interior(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("non-finite coordinate");
    if (std::norm(z) >= 1.0) throw DomainError("point lies on or outside the unit circle");
    return PoincarePoint(z.real(), z.imag(), Unchecked{});
}

KleinPoint::KleinPoint(double x, double y) : x_(x), y_(y) {
    if (!std::isfinite(x) || !std::isfinite(y))
        throw DomainError("non-finite coordinate");
    if (x * x + y * y >= 1.0)
        throw DomainError("point lies on or outside the unit circle");
}

// ── Lines ────────────────────────────────────────────────────────────

HLine HLine::from_ideal_points(Complex e1, Complex e2) {
    if (std::abs(e1) == 0.0 || std::abs(e2) == 0.0)
        throw DegenerateError("ideal point at the origin");
    e1 = normalized(e1);
    e2 = normalized(e2);
    if (std::abs(e1 - e2) < 1e-12)
        throw DegenerateError("ideal points of a line must be distinct");
    if (canonical_angle(e2) < canonical_angle(e1)) std::swap(e1, e2);
    return HLine(e1, e2);
}

HLine HLine::from_ideal_angles(double a1, double a2) {
    return from_ideal_points(std::polar(1.0, a1), std::polar(1.0, a2));
}

HLine HLine::through(const PoincarePoint& p, const PoincarePoint& q) {
    if (p == q) throw DegenerateError("line through two equal points");
    const Complex kp = to_klein(p.z());
    const Complex kq = to_klein(q.z());
    const Complex d = kq - kp;
    // |kp + s d|^2 = 1
    const double a = std::norm(d);
    const double b = 2.0 * (kp.real() * d.real() + kp.imag() * d.imag());
    const double c = std::norm(kp) - 1.0;
    if (a == 0.0) throw DegenerateError("line through two equal points");
    const double disc = std::sqrt(b * b - 4.0 * a * c);
    const double qq = -0.5 * (b + std::copysign(disc, b));
    double s1 = qq / a;
    double s2 = c / qq;
    if (s1 > s2) std::swap(s1, s2);
    return from_ideal_points(kp + s1 * d, kp + s2 * d);
}

HLine HLine::through_point_at_angle(const PoincarePoint& p, double angle) {
    const DiskFrame frame = DiskFrame::centered(p);
    const Complex dir = std::polar(1.0, angle);
    return from_ideal_points(frame.from_frame(dir), frame.from_frame(-dir));
}

double HLine::first_angle() const { return canonical_angle(first_); }
double HLine::second_angle() const { return canonical_angle(second_); }

HSegment::HSegment(const PoincarePoint& a, const PoincarePoint& b) : a_(a), b_(b) {
    if (a == b) throw DegenerateError("zero-length segment");
}

// ── Frames ───────────────────────────────────────────────────────────

DiskFrame DiskFrame::centered(const PoincarePoint& c, double angle) {
    return DiskFrame(c.z(), std::polar(1.0, -angle));
}

DiskFrame DiskFrame::aligned(const HLine& line) {
    const Complex mid = 0.5 * (line.first() + line.second());
    const Complex c = std::abs(mid) < 1e-15 ? Complex{0.0, 0.0} : from_klein(mid);
    const DiskFrame shift(c, Complex{1.0, 0.0});
    const Complex w2 = normalized(shift.to_frame(line.second()));
    return DiskFrame(c, std::conj(w2));
}

Complex DiskFrame::to_frame(Complex z) const {
    return rotation_ * (z - center_) / (1.0 - std::conj(center_) * z);
}

Complex DiskFrame::from_frame(Complex w) const {
    const Complex v = std::conj(rotation_) * w;
    return (v + center_) / (1.0 + std::conj(center_) * v);
}

// ── Metric and conversions ──────────────────────────────────────────

double hyp_distance(const PoincarePoint& p, const PoincarePoint& q) {
    // cosh d = 1 + 2 delta  <=>  sinh(d/2) = sqrt(delta)
    const double num = std::abs(p.z() - q.z());
    const double den = std::sqrt((1.0 - p.norm_sq()) * (1.0 - q.norm_sq()));
    return 2.0 * std::asinh(num / den);
}

KleinPoint poincare_to_klein(const PoincarePoint& p) {
    const Complex k = to_klein(p.z());
    return {k.real(), k.imag()};
}

PoincarePoint klein_to_poincare(const KleinPoint& k) {
    return PoincarePoint::interior(from_klein({k.x(), k.y()}));
}

Complex from_klein(Complex k) { return k / (1.0 + std::sqrt(1.0 - std::norm(k))); }

double signed_distance_to_real_axis(Complex w) {
    return std::asinh(2.0 * w.imag() / (1.0 - std::norm(w)));
}

double foot_position_on_real_axis(Complex w) {
    return std::atanh(to_klein(w).real());
}

// ── Predicates ───────────────────────────────────────────────────────

bool segments_cross(const HSegment& s1, const HSegment& s2) {
    const bool same_endpoints = (s1.a() == s2.a() && s1.b() == s2.b()) ||
                                (s1.a() == s2.b() && s1.b() == s2.a());
    if (same_endpoints) throw DegenerateError("segments coincide");

    const Complex a = to_klein(s1.a().z());
    const Complex b = to_klein(s1.b().z());
    const Complex c = to_klein(s2.a().z());
    const Complex d = to_klein(s2.b().z());

    const int o1 = sign_with_tolerance(orient(a, b, c), kOrientTolerance);
    const int o2 = sign_with_tolerance(orient(a, b, d), kOrientTolerance);
    const int o3 = sign_with_tolerance(orient(c, d, a), kOrientTolerance);
    const int o4 = sign_with_tolerance(orient(c, d, b), kOrientTolerance);

    if (o1 == 0 && o2 == 0) {
        // Collinear: project on the direction of s1 and test for overlap.
        const Complex dir = b - a;
        auto param = [&](Complex p) {
            return ((p - a) * std::conj(dir)).real() / std::norm(dir);
        };
        double lo = param(c);
        double hi = param(d);
        if (lo > hi) std::swap(lo, hi);
        const double overlap = std::min(1.0, hi) - std::max(0.0, lo);
        if (overlap > 1e-12) throw DegenerateError("collinear segments overlap");
        return false;
    }
    return o1 * o2 < 0 && o3 * o4 < 0;
}

double angle_of_parallelism(double d) {
    if (!(d > 0.0)) throw DomainError("angle of parallelism needs d > 0");
    return std::atan2(1.0, std::sinh(d));
}

double hypercycle_arc_length(double base_len, double offset) {
    if (base_len < 0.0 || offset < 0.0)
        throw DomainError("hypercycle arc length needs nonnegative inputs");
    return base_len * std::cosh(offset);
}

PoincarePoint perpendicular_foot(const PoincarePoint& p, const HLine& line) {
    const DiskFrame frame = DiskFrame::aligned(line);
    const double kx = to_klein(frame.to_frame(p)).real();
    const double x = kx / (1.0 + std::sqrt(1.0 - kx * kx));
    return frame.point_from_frame({x, 0.0});
}

double distance_to_line(const PoincarePoint& p, const HLine& line) {
    const DiskFrame frame = DiskFrame::aligned(line);
    return std::abs(signed_distance_to_real_axis(frame.to_frame(p)));
}

PoincarePoint reflect_through_point(const PoincarePoint& p, const PoincarePoint& c) {
    const DiskFrame frame = DiskFrame::centered(c);
    return frame.point_from_frame(-frame.to_frame(p));
}

int side_of_line(const PoincarePoint& p, const HLine& line) {
    if (distance_to_line(p, line) <= geometry_epsilon()) return 0;
    const double o = orient(line.first(), line.second(), to_klein(p.z()));
    return o > 0.0 ? 1 : (o < 0.0 ? -1 : 0);
}

PoincarePoint geodesic_point(const PoincarePoint& p, const PoincarePoint& q, double t) {
    const DiskFrame frame = DiskFrame::centered(p);
    const Complex w = frame.to_frame(q);
    const double r = std::abs(w);
    if (r == 0.0) return p;
    const double dist = 2.0 * std::atanh(r);
    return frame.point_from_frame(w / r * std::tanh(0.5 * t * dist));
}

} // namespace hypertsp
