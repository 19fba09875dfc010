#pragma once

// Hyperbolic-plane primitives in the Poincare disk model, with the
// Beltrami-Klein model used for all linear (orientation) predicates.

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace hypertsp {

using Complex = std::complex<double>;

/// Input points with norm above this are rejected.
inline constexpr double kBoundaryMargin = 1e-6;

/// Global tolerance for on-line / on-arc predicates (default 1e-9).
double geometry_epsilon();
void set_geometry_epsilon(double eps);

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised for geometrically degenerate inputs (overlapping segments, ...).
class DegenerateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PoincarePoint {
public:
    PoincarePoint() = default;
    PoincarePoint(double x, double y);
    explicit PoincarePoint(Complex z) : PoincarePoint(z.real(), z.imag()) {}
    /// For derived points (corners, feet, images): only requires |z| < 1,
    /// not the input margin.
    static PoincarePoint interior(Complex z);

    double x() const { return x_; }
    double y() const { return y_; }
    Complex z() const { return {x_, y_}; }
    double norm_sq() const { return x_ * x_ + y_ * y_; }

    friend bool operator==(const PoincarePoint&, const PoincarePoint&) = default;

private:
    struct Unchecked {};
    PoincarePoint(double x, double y, Unchecked) : x_(x), y_(y) {}
    double x_ = 0.0;
    double y_ = 0.0;
};

class KleinPoint {
public:
    KleinPoint() = default;
    KleinPoint(double x, double y);

    double x() const { return x_; }
    double y() const { return y_; }
    double norm_sq() const { return x_ * x_ + y_ * y_; }

    friend bool operator==(const KleinPoint&, const KleinPoint&) = default;

private:
    double x_ = 0.0;
    double y_ = 0.0;
};

/// A hyperbolic line, stored as its two ideal points (unit complex numbers).
/// Canonical order: the first ideal point has the smaller angle in [-pi, pi).
/// The line is directed first -> second; "left" of that direction is side +1.
class HLine {
public:
    /// The real diameter, directed from -1 to +1.
    HLine() = default;
    static HLine from_ideal_points(Complex e1, Complex e2);
    static HLine from_ideal_angles(double a1, double a2);
    /// Line through two distinct points.
    static HLine through(const PoincarePoint& p, const PoincarePoint& q);
    /// Line through p whose tangent at p makes angle `angle` with the x-axis.
    static HLine through_point_at_angle(const PoincarePoint& p, double angle);

    Complex first() const { return first_; }
    Complex second() const { return second_; }
    double first_angle() const;
    double second_angle() const;

private:
    HLine(Complex a, Complex b) : first_(a), second_(b) {}
    Complex first_{-1.0, 0.0};
    Complex second_{1.0, 0.0};
};

class HSegment {
public:
    HSegment(const PoincarePoint& a, const PoincarePoint& b);

    const PoincarePoint& a() const { return a_; }
    const PoincarePoint& b() const { return b_; }

private:
    PoincarePoint a_;
    PoincarePoint b_;
};

/// Arc of the equidistant curve at distance `offset` from `base`, on `side`.
struct HypercycleArc {
    HLine base;
    double offset = 0.0;
    int side = 1;
    PoincarePoint start;
    PoincarePoint end;
};

/// Orientation-preserving isometry of the disk,
///   w = u * (z - c) / (1 - conj(c) z),  |u| = 1.
/// Tangent directions at c map to the same directions at 0 rotated by arg(u).
class DiskFrame {
public:
    DiskFrame() = default;
    /// Moves c to the origin and rotates so direction `angle` at c becomes +x.
    static DiskFrame centered(const PoincarePoint& c, double angle = 0.0);
    /// Maps `line` onto the real diameter, first ideal point to -1, second to +1.
    static DiskFrame aligned(const HLine& line);

    Complex to_frame(Complex z) const;
    Complex from_frame(Complex w) const;
    Complex to_frame(const PoincarePoint& p) const { return to_frame(p.z()); }
    PoincarePoint point_from_frame(Complex w) const { return PoincarePoint::interior(from_frame(w)); }

private:
    DiskFrame(Complex c, Complex u) : center_(c), rotation_(u) {}
    Complex center_{0.0, 0.0};
    Complex rotation_{1.0, 0.0};
};

double hyp_distance(const PoincarePoint& p, const PoincarePoint& q);

KleinPoint poincare_to_klein(const PoincarePoint& p);
PoincarePoint klein_to_poincare(const KleinPoint& k);

/// True iff the open geodesic segments share exactly one point.
/// Throws DegenerateError for collinear overlapping segments.
bool segments_cross(const HSegment& s1, const HSegment& s2);

double angle_of_parallelism(double d);
double hypercycle_arc_length(double base_len, double offset);

PoincarePoint perpendicular_foot(const PoincarePoint& p, const HLine& line);
double distance_to_line(const PoincarePoint& p, const HLine& line);
PoincarePoint reflect_through_point(const PoincarePoint& p, const PoincarePoint& c);
int side_of_line(const PoincarePoint& p, const HLine& line);

/// Point on the geodesic from p towards q at fraction `t` of the distance.
PoincarePoint geodesic_point(const PoincarePoint& p, const PoincarePoint& q, double t);

// Model-coordinate helpers shared by the separator and SVG code.

/// Poincare frame coordinate -> Klein coordinate (no range checks).
inline Complex to_klein(Complex w) { return 2.0 * w / (1.0 + std::norm(w)); }
/// Klein coordinate -> Poincare coordinate (no range checks).
Complex from_klein(Complex k);
/// Signed distance from frame point w to the real diameter (+ above).
double signed_distance_to_real_axis(Complex w);
/// Signed position along the real diameter of w's perpendicular foot.
double foot_position_on_real_axis(Complex w);

} // namespace hypertsp
