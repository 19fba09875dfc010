#pragma once

// Exact solvers: brute force and Held-Karp oracles, and the separator-based
// divide and conquer for Hyperbolic Path Cover with its TSP reduction.

#include "hypertsp/separator.hpp"
#include "hypertsp/tour.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypertsp {

/// A size cap of some solver was exceeded.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The separator bounds are not finite for this alpha and the fallback
/// oracle cannot take the subproblem either.
class UnsupportedDensity : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SolverConfig {
    int threshold_t = 8;
    std::optional<long long> max_scr_override;
    double epsilon_len = 1e-9;
    bool prune_crossing = true;
    bool prune_reroute = true;
    bool prune_matchings = false;
    bool parallel = false;
    std::size_t brute_force_cap = 10;

    void validate() const;
};

struct SolveStats {
    std::uint64_t nodes = 0;         ///< divide-and-conquer calls actually evaluated
    std::uint64_t leaves = 0;        ///< calls answered by brute force
    std::uint64_t branches = 0;      ///< (S_cr, S_end) choices reaching the matching loop
    std::uint64_t matchings = 0;     ///< (M1, M2) pairs tested with realizes
    std::uint64_t memo_hits = 0;
    std::uint64_t boundary_checks = 0;
    std::uint64_t boundary_violations = 0;
    std::size_t max_boundary = 0;
    double time_ms = 0.0;

    SolveStats& operator+=(const SolveStats& o);
};

struct SolveResult {
    double length = std::numeric_limits<double>::infinity();
    PathCover cover;  ///< witness for path-cover problems
    Tour tour;        ///< witness for TSP problems
    std::string algorithm;
    SolveStats stats;

    bool feasible() const { return length < std::numeric_limits<double>::infinity(); }
};

SolveResult brute_force_path_cover(const PathCoverProblem& prob, std::size_t cap = 10);
SolveResult held_karp_path_cover(const PathCoverProblem& prob);
SolveResult held_karp_tsp(const Instance& inst);
/// Exhaustive enumeration of all (n-1)!/2 tours; n <= 11.
SolveResult brute_force_tsp(const Instance& inst);

SolveResult hyperbolic_tsp_dnc(const PathCoverProblem& prob, double alpha,
                               const SolverConfig& cfg = {});
SolveResult tsp_via_path_cover(const Instance& inst, const SolverConfig& cfg = {});

/// Nearest neighbour tour improved by 2-opt; an upper bound for pruning.
Tour heuristic_tour(const Instance& inst);

/// Calls `visit` with every perfect matching on B, in lexicographic order.
/// Odd |B| yields nothing. Returning false from `visit` stops the stream.
void enumerate_matchings(std::span<const Index> B, const std::function<bool(const Matching&)>& visit);

/// Calls `visit` with every subset of `candidates` of size <= max_size, in
/// increasing cardinality and then lexicographic order of candidate
/// positions. Subsets with two crossing segments are skipped when
/// cfg.prune_crossing is set. The same-direction arc-gap filter needs path
/// orientations and is applied by the solver once a branch realizes M.
void enumerate_scr(const Instance& inst, std::span<const Edge> candidates, std::size_t max_size,
                   const SolverConfig& cfg, const std::function<bool(const SegmentSet&)>& visit);

/// Positions (along each arc, from its first endpoint) where segment p1p2
/// crosses R, if it meets each boundary arc exactly once.
struct CrossingHits {
    double upper = 0.0;
    double lower = 0.0;
};
std::optional<CrossingHits> crossing_hits(const SeparatorRegion& region, const PoincarePoint& p1,
                                          const PoincarePoint& p2);

/// Arc-gap test for two segments crossing R in the same direction.
bool reroute_gap_ok(const CrossingHits& a, const CrossingHits& b, double rho);

/// Upper bound on |S_cr| used by the divide and conquer.
std::size_t scr_cap(const SeparatorBounds& b, const SolverConfig& cfg);

/// Boundary-size bound max(60 ln p / alpha, 12 ln p).
double boundary_bound(std::size_t p, double alpha);

} // namespace hypertsp
