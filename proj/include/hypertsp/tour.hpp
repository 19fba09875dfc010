#pragma once

// Combinatorial layer over point indices, plus the realization predicate
// used when stitching subproblem solutions together.

#include "hypertsp/geometry.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace hypertsp {

using Index = std::size_t;

/// Unordered index pair, stored with u < v.
struct Edge {
    Index u = 0;
    Index v = 0;

    Edge() = default;
    Edge(Index a, Index b);

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Perfect matching on a boundary set; pairs are disjoint.
using Matching = std::vector<Edge>;
/// Set of geodesic segments between instance points.
using SegmentSet = std::vector<Edge>;

/// An alpha-spaced point set. Pairwise distances are cached.
class Instance {
public:
    /// Validates n >= 1, alpha > 0 and pairwise spacing >= alpha - eps.
    Instance(std::vector<PoincarePoint> points, double alpha);
    /// Skips the spacing check (used to inspect invalid inputs).
    static Instance unvalidated(std::vector<PoincarePoint> points, double alpha);

    std::size_t size() const { return points_.size(); }
    double alpha() const { return alpha_; }
    const std::vector<PoincarePoint>& points() const { return points_; }
    const PoincarePoint& point(Index i) const { return points_[i]; }
    double distance(Index i, Index j) const { return dist_[i * points_.size() + j]; }

private:
    Instance(std::vector<PoincarePoint> points, double alpha, bool check_spacing);
    std::vector<PoincarePoint> points_;
    double alpha_ = 0.0;
    std::vector<double> dist_;
};

/// Hyperbolic Path Cover instance (P, B, M) over an ambient Instance.
class PathCoverProblem {
public:
    /// P and B are sorted; throws if B is not a subset of P, |B| is odd or
    /// M is not a perfect matching on B.
    PathCoverProblem(const Instance& inst, std::vector<Index> P, std::vector<Index> B, Matching M);

    const Instance& instance() const { return *inst_; }
    const std::vector<Index>& points() const { return P_; }
    const std::vector<Index>& boundary() const { return B_; }
    const Matching& matching() const { return M_; }

private:
    const Instance* inst_;
    std::vector<Index> P_;
    std::vector<Index> B_;
    Matching M_;
};

struct PathCover {
    std::vector<std::vector<Index>> paths;
};

struct Tour {
    std::vector<Index> order;
};

double edge_length(const Edge& e, const Instance& inst);
double segments_length(std::span<const Edge> edges, const Instance& inst);
double tour_length(const Tour& t, const Instance& inst);
double path_cover_length(const PathCover& pc, const Instance& inst);

SegmentSet tour_edges(const Tour& t);
SegmentSet path_cover_edges(const PathCover& pc);

bool is_valid_tour(const Tour& t, std::size_t n);
bool is_valid_path_cover(const PathCover& pc, const PathCoverProblem& prob);

/// Normalized cyclic order: starts at 0, and order[1] < order[n-1].
Tour canonical_tour(const Tour& t);

/// Paths of the multigraph `edges` if it realizes M on B, each oriented
/// from the smaller-indexed endpoint of its M pair, in the order of M.
std::optional<std::vector<std::vector<Index>>> realized_paths(std::span<const Edge> edges,
                                                              std::span<const Index> B,
                                                              const Matching& M);
bool realizes(std::span<const Edge> edges, std::span<const Index> B, const Matching& M);

struct SideSplit {
    std::vector<Index> P1, B1;  ///< side +1 of the line
    std::vector<Index> P2, B2;  ///< side -1
};

/// Splits the points left uncovered by S into the two sides of `line`.
SideSplit uncovered_split(const Instance& inst, std::span<const Index> P, std::span<const Index> B,
                          std::span<const Edge> S, const HLine& line);

bool tour_is_noncrossing(const Tour& t, const Instance& inst);
double min_spacing(const Instance& inst);

} // namespace hypertsp
