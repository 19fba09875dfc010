#pragma once

// Generators and checks for alpha-spaced point sets.

#include "hypertsp/tour.hpp"

#include <cstdint>
#include <vector>

namespace hypertsp {

/// Points f(i, j) on the hypercycle at offset i*c*alpha above the base line
/// and on the perpendicular through the j-th base point.
struct GridEmbedding {
    int n = 0;
    double c = 0.0;
    double alpha = 0.0;
    HLine base_line = HLine::from_ideal_angles(-3.141592653589793, 0.0);
    std::vector<HLine> perp_lines;
    std::vector<double> hypercycle_offsets;  ///< row i at i*c*alpha
    std::vector<double> base_positions;      ///< signed position of x_j along the base line
    std::vector<PoincarePoint> points;       ///< row-major, index i*n + j

    const PoincarePoint& point(int i, int j) const { return points[static_cast<std::size_t>(i * n + j)]; }
    /// Instance over all grid points, declared spacing c*alpha.
    Instance instance() const;
};

struct SpacingReport {
    double min = 0.0;
    bool ok = false;
};

/// Largest hyperbolic radius whose points pass the input margin.
double max_representable_radius();

Instance gen_random_alpha_spaced(int n, double alpha, std::uint64_t seed);
Instance gen_regular_ngon(int n, double side);
GridEmbedding gen_grid_like(int n, double c, double alpha);
SpacingReport verify_spacing(const Instance& inst);

} // namespace hypertsp
