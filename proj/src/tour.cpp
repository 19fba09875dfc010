#include "hypertsp/tour.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace hypertsp {

Edge::Edge(Index a, Index b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b) throw DomainError("self-loop edge");
}

Instance::Instance(std::vector<PoincarePoint> points, double alpha)
    : Instance(std::move(points), alpha, true) {}

Instance Instance::unvalidated(std::vector<PoincarePoint> points, double alpha) {
    return Instance(std::move(points), alpha, false);
}

Instance::Instance(std::vector<PoincarePoint> points, double alpha, bool check_spacing)
    : points_(std::move(points)), alpha_(alpha) {
    if (points_.empty()) throw DomainError("instance needs at least one point");
    if (!(alpha_ > 0.0) || !std::isfinite(alpha_)) throw DomainError("alpha must be positive");
    const std::size_t n = points_.size();
    dist_.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = hyp_distance(points_[i], points_[j]);
            if (check_spacing && d < alpha_ - geometry_epsilon())
                throw DomainError("instance is not alpha-spaced");
            dist_[i * n + j] = dist_[j * n + i] = d;
        }
    }
}

PathCoverProblem::PathCoverProblem(const Instance& inst, std::vector<Index> P, std::vector<Index> B,
                                   Matching M)
    : inst_(&inst), P_(std::move(P)), B_(std::move(B)), M_(std::move(M)) {
    std::sort(P_.begin(), P_.end());
    std::sort(B_.begin(), B_.end());
    if (std::adjacent_find(P_.begin(), P_.end()) != P_.end())
        throw DomainError("duplicate index in P");
    if (!P_.empty() && P_.back() >= inst.size()) throw DomainError("index out of range");
    if (!std::includes(P_.begin(), P_.end(), B_.begin(), B_.end()))
        throw DomainError("B must be a subset of P");
    if (B_.size() % 2 != 0) throw DomainError("boundary set must have even size");
    if (M_.size() * 2 != B_.size()) throw DomainError("M is not a perfect matching on B");
    std::vector<Index> covered;
    for (const Edge& e : M_) {
        covered.push_back(e.u);
        covered.push_back(e.v);
    }
    std::sort(covered.begin(), covered.end());
    if (covered != B_) throw DomainError("M is not a perfect matching on B");
    std::sort(M_.begin(), M_.end());
}

double edge_length(const Edge& e, const Instance& inst) { return inst.distance(e.u, e.v); }

double segments_length(std::span<const Edge> edges, const Instance& inst) {
    double sum = 0.0;
    for (const Edge& e : edges) sum += edge_length(e, inst);
    return sum;
}

double tour_length(const Tour& t, const Instance& inst) {
    const auto& o = t.order;
    if (o.size() < 2) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < o.size(); ++i) sum += inst.distance(o[i], o[(i + 1) % o.size()]);
    return sum;
}

double path_cover_length(const PathCover& pc, const Instance& inst) {
    double sum = 0.0;
    for (const auto& path : pc.paths)
        for (std::size_t i = 0; i + 1 < path.size(); ++i) sum += inst.distance(path[i], path[i + 1]);
    return sum;
}

SegmentSet tour_edges(const Tour& t) {
    SegmentSet out;
    const auto& o = t.order;
    if (o.size() < 3) {
        if (o.size() == 2) out.emplace_back(o[0], o[1]);
        return out;
    }
    for (std::size_t i = 0; i < o.size(); ++i) out.emplace_back(o[i], o[(i + 1) % o.size()]);
    std::sort(out.begin(), out.end());
    return out;
}

SegmentSet path_cover_edges(const PathCover& pc) {
    SegmentSet out;
    for (const auto& path : pc.paths)
        for (std::size_t i = 0; i + 1 < path.size(); ++i) out.emplace_back(path[i], path[i + 1]);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_valid_tour(const Tour& t, std::size_t n) {
    if (t.order.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (Index i : t.order) {
        if (i >= n || seen[i]) return false;
        seen[i] = true;
    }
    return true;
}

bool is_valid_path_cover(const PathCover& pc, const PathCoverProblem& prob) {
    std::vector<Index> visited;
    Matching ends;
    for (const auto& path : pc.paths) {
        if (path.size() < 2) return false;
        visited.insert(visited.end(), path.begin(), path.end());
        ends.emplace_back(path.front(), path.back());
    }
    std::sort(visited.begin(), visited.end());
    std::sort(ends.begin(), ends.end());
    if (visited != prob.points()) return false;
    if (ends != prob.matching()) return false;
    // Interior vertices must not be boundary points.
    for (const auto& path : pc.paths)
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
            if (std::binary_search(prob.boundary().begin(), prob.boundary().end(), path[i])) return false;
    return true;
}

Tour canonical_tour(const Tour& t) {
    Tour out = t;
    auto& o = out.order;
    if (o.empty()) return out;
    auto it = std::min_element(o.begin(), o.end());
    std::rotate(o.begin(), it, o.end());
    if (o.size() > 2 && o[1] > o.back()) std::reverse(o.begin() + 1, o.end());
    return out;
}

std::optional<std::vector<std::vector<Index>>> realized_paths(std::span<const Edge> edges,
                                                              std::span<const Index> B,
                                                              const Matching& M) {
    // Adjacency as (neighbor, edge id) lists so parallel edges stay distinct.
    std::map<Index, std::vector<std::pair<Index, std::size_t>>> adj;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        adj[edges[k].u].emplace_back(edges[k].v, k);
        adj[edges[k].v].emplace_back(edges[k].u, k);
    }
    std::vector<Index> bset(B.begin(), B.end());
    std::sort(bset.begin(), bset.end());
    if (std::adjacent_find(bset.begin(), bset.end()) != bset.end()) return std::nullopt;
    auto in_b = [&](Index x) { return std::binary_search(bset.begin(), bset.end(), x); };

    if (M.size() * 2 != bset.size()) return std::nullopt;
    for (const Edge& e : M)
        if (!in_b(e.u) || !in_b(e.v)) return std::nullopt;

    for (Index b : bset) {
        auto it = adj.find(b);
        if (it == adj.end() || it->second.size() != 1) return std::nullopt;
    }
    for (const auto& [x, nb] : adj)
        if (!in_b(x) && nb.size() != 2) return std::nullopt;

    std::map<Index, bool> visited;
    std::vector<std::vector<Index>> paths;
    paths.reserve(M.size());
    for (const Edge& pair : M) {
        std::vector<Index> path{pair.u};
        visited[pair.u] = true;
        Index cur = pair.u;
        std::size_t via = adj[cur][0].second;
        Index next = adj[cur][0].first;
        while (true) {
            if (visited[next]) return std::nullopt;
            visited[next] = true;
            path.push_back(next);
            if (in_b(next)) break;
            const auto& nb = adj[next];
            const auto& step = nb[0].second == via ? nb[1] : nb[0];
            cur = next;
            via = step.second;
            next = step.first;
        }
        if (path.back() != pair.v) return std::nullopt;
        paths.push_back(std::move(path));
    }
    // Anything not reached lies on a cycle.
    for (const auto& [x, nb] : adj)
        if (!visited[x]) return std::nullopt;
    return paths;
}

bool realizes(std::span<const Edge> edges, std::span<const Index> B, const Matching& M) {
    return realized_paths(edges, B, M).has_value();
}

SideSplit uncovered_split(const Instance& inst, std::span<const Index> P, std::span<const Index> B,
                          std::span<const Edge> S, const HLine& line) {
    std::map<Index, int> degree;
    for (const Edge& e : S) {
        ++degree[e.u];
        ++degree[e.v];
    }
    std::vector<Index> bset(B.begin(), B.end());
    std::sort(bset.begin(), bset.end());
    SideSplit out;
    for (Index p : P) {
        const bool in_b = std::binary_search(bset.begin(), bset.end(), p);
        const int target = in_b ? 1 : 2;
        const int deg = degree.count(p) ? degree[p] : 0;
        if (deg > target) throw DomainError("segment set exceeds the degree limit");
        if (deg == target) continue;
        const int side = side_of_line(inst.point(p), line);
        if (side == 0) throw DegenerateError("uncovered point lies on the separating line");
        const bool boundary = (in_b && deg == 0) || (!in_b && deg == 1);
        auto& Pi = side > 0 ? out.P1 : out.P2;
        auto& Bi = side > 0 ? out.B1 : out.B2;
        Pi.push_back(p);
        if (boundary) Bi.push_back(p);
    }
    return out;
}

bool tour_is_noncrossing(const Tour& t, const Instance& inst) {
    const auto& o = t.order;
    const std::size_t n = o.size();
    if (n < 4) return true;
    for (std::size_t i = 0; i < n; ++i) {
        const HSegment s1(inst.point(o[i]), inst.point(o[(i + 1) % n]));
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;  // adjacent through the wrap
            const HSegment s2(inst.point(o[j]), inst.point(o[(j + 1) % n]));
            try {
                if (segments_cross(s1, s2)) return false;
            } catch (const DegenerateError&) {
                return false;  // overlapping edges are never part of a shortest tour
            }
        }
    }
    return true;
}

double min_spacing(const Instance& inst) {
    const std::size_t n = inst.size();
    if (n < 2) throw DomainError("min_spacing needs at least two points");
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) best = std::min(best, inst.distance(i, j));
    return best;
}

} // namespace hypertsp
