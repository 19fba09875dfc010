#pragma once

// Balanced line separator with an empty double cone, and the narrow region R
// around the separator segment tt'.

#include "hypertsp/geometry.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace hypertsp {

struct DoubleCone {
    PoincarePoint apex;
    HLine axis;
    double half_angle = 0.0;
    /// Direction of the axis at the apex, in [0, pi).
    double axis_angle = 0.0;
};

struct SeparatorBounds {
    double n_in = 0.0;
    double s_cr = 0.0;
};

enum class SegmentClass { Crosses, Entering, Inside, Other, Disjoint };

const char* to_string(SegmentClass c);

/// Intersections of a segment with the two boundary arcs of R, as arc-length
/// positions measured from the arcs' first endpoints (a_t resp. b_t).
struct ArcHits {
    std::vector<double> upper;  ///< hits on arc (a_t, b'_t)
    std::vector<double> lower;  ///< hits on arc (b_t, a'_t)
};

/// Region between lines ab and a'b' within distance rho of segment tt'.
///
/// All membership tests run in the frame that puts the apex q at the origin
/// and the separating line on the real axis, with the a-side above it.
struct SeparatorRegion {
    DoubleCone cone;
    PoincarePoint t;
    PoincarePoint t_prime;
    double qt = 0.0;
    double rho = 0.0;
    PoincarePoint a_t;
    PoincarePoint b_t;
    PoincarePoint a_t_prime;
    PoincarePoint b_t_prime;
    HypercycleArc arc_ab;  ///< from a_t to b'_t
    HypercycleArc arc_ba;  ///< from b_t to a'_t
    std::size_t n = 0;
    DiskFrame frame;

    HLine line() const { return cone.axis; }
    /// Closed membership in R (tolerance geometry_epsilon()).
    bool contains(const PoincarePoint& p) const;
    /// +1 on the a-side of the separating line, -1 on the b-side, 0 on it.
    int side(const PoincarePoint& p) const;
    /// Total length of each boundary arc, 2 |qt| cosh(rho).
    double arc_length() const;
    ArcHits arc_hits(const PoincarePoint& p1, const PoincarePoint& p2) const;
};

PoincarePoint centerpoint(std::span<const PoincarePoint> points);

/// Largest number of points in an open half-plane bounded by a line through c.
std::size_t max_open_halfplane_count(std::span<const PoincarePoint> points,
                                     const PoincarePoint& c);

/// c is a centerpoint iff no open half-plane through c has more than floor(2n/3).
bool is_centerpoint(std::span<const PoincarePoint> points, const PoincarePoint& c);

/// Throws DegenerateError if some point coincides with q.
DoubleCone empty_cone_line(std::span<const PoincarePoint> points, const PoincarePoint& q);

double qt_length(long long n);
double rho_choice(double alpha);

SeparatorRegion build_region(std::span<const PoincarePoint> points, double alpha);
/// Same construction, but the centerpoint is taken over points[boundary[i]].
SeparatorRegion build_region_for_boundary(std::span<const PoincarePoint> points,
                                          std::span<const std::size_t> boundary,
                                          double alpha);

SeparatorBounds separator_bounds(double n, double alpha, double rho);
SeparatorBounds bounds(const SeparatorRegion& region, double alpha);

SegmentClass classify_segment(const HSegment& seg, const SeparatorRegion& region);

/// Arc-length parameter of p along `arc`, measured from arc.start.
double arc_position(const PoincarePoint& p, const HypercycleArc& arc);

} // namespace hypertsp
