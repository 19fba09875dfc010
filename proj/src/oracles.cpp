#include "hypertsp/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

namespace hypertsp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTieEps = 1e-9;

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

SolveResult empty_boundary_result(const PathCoverProblem& prob, const char* name) {
    SolveResult r;
    r.algorithm = name;
    if (prob.points().empty()) r.length = 0.0;
    return r;
}

} // namespace

void SolverConfig::validate() const {
    if (threshold_t < 3) throw DomainError("threshold_t must be at least 3");
    if (!(epsilon_len > 0.0)) throw DomainError("epsilon_len must be positive");
    if (max_scr_override && *max_scr_override < 0) throw DomainError("max_scr_override must be >= 0");
}

SolveStats& SolveStats::operator+=(const SolveStats& o) {
    nodes += o.nodes;
    leaves += o.leaves;
    branches += o.branches;
    matchings += o.matchings;
    memo_hits += o.memo_hits;
    boundary_checks += o.boundary_checks;
    boundary_violations += o.boundary_violations;
    max_boundary = std::max(max_boundary, o.max_boundary);
    time_ms += o.time_ms;
    return *this;
}

// ── Brute force ──────────────────────────────────────────────────────

SolveResult brute_force_path_cover(const PathCoverProblem& prob, std::size_t cap) {
    if (prob.points().size() > cap)
        throw CapExceeded("brute force path cover is limited to " + std::to_string(cap) + " points");
    if (prob.boundary().empty()) return empty_boundary_result(prob, "brute");

    const auto start = std::chrono::steady_clock::now();
    const Instance& inst = prob.instance();
    const Matching& M = prob.matching();
    std::vector<Index> interior;
    std::set_difference(prob.points().begin(), prob.points().end(), prob.boundary().begin(),
                        prob.boundary().end(), std::back_inserter(interior));
    const std::size_t k = interior.size();
    const std::uint32_t full = (1u << k) - 1u;

    double best = kInf;
    SegmentSet best_edges;
    std::vector<std::vector<Index>> best_paths;
    std::vector<std::vector<Index>> paths(M.size());

    auto finish = [&](double cost) {
        SegmentSet edges;
        for (const auto& p : paths)
            for (std::size_t i = 0; i + 1 < p.size(); ++i) edges.emplace_back(p[i], p[i + 1]);
        std::sort(edges.begin(), edges.end());
        if (cost < best - kTieEps || (cost <= best + kTieEps && edges < best_edges)) {
            best = cost;
            best_edges = std::move(edges);
            best_paths = paths;
        }
    };

    // Depth-first over (pair j, used interior mask); paths[j] ends at the
    // current vertex.
    auto dfs = [&](auto&& self, std::size_t j, std::uint32_t used, double cost) -> void {
        if (cost > best + kTieEps) return;
        const Index cur = paths[j].back();
        for (std::size_t i = 0; i < k; ++i) {
            if (used & (1u << i)) continue;
            paths[j].push_back(interior[i]);
            self(self, j, used | (1u << i), cost + inst.distance(cur, interior[i]));
            paths[j].pop_back();
        }
        paths[j].push_back(M[j].v);
        const double closed = cost + inst.distance(cur, M[j].v);
        if (j + 1 == M.size()) {
            if (used == full && closed <= best + kTieEps) finish(closed);
        } else if (closed <= best + kTieEps) {
            paths[j + 1] = {M[j + 1].u};
            self(self, j + 1, used, closed);
        }
        paths[j].pop_back();
    };
    paths[0] = {M[0].u};
    dfs(dfs, 0, 0, 0.0);

    SolveResult r;
    r.algorithm = "brute";
    r.length = best;
    r.cover.paths = std::move(best_paths);
    r.stats.leaves = 1;
    r.stats.time_ms = elapsed_ms(start);
    return r;
}

SolveResult brute_force_tsp(const Instance& inst) {
    const std::size_t n = inst.size();
    if (n < 3) throw CapExceeded("TSP needs at least 3 points");
    if (n > 11) throw CapExceeded("brute force TSP is limited to 11 points");
    const auto start = std::chrono::steady_clock::now();
    std::vector<Index> rest(n - 1);
    std::iota(rest.begin(), rest.end(), Index{1});
    double best = kInf;
    std::vector<Index> best_order;
    do {
        if (rest.front() > rest.back()) continue;  // each cycle once
        double len = inst.distance(0, rest.front()) + inst.distance(rest.back(), 0);
        for (std::size_t i = 0; i + 1 < rest.size(); ++i) len += inst.distance(rest[i], rest[i + 1]);
        if (len < best) {
            best = len;
            best_order = rest;
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    SolveResult r;
    r.algorithm = "brute";
    r.length = best;
    r.tour.order = {0};
    r.tour.order.insert(r.tour.order.end(), best_order.begin(), best_order.end());
    r.stats.time_ms = elapsed_ms(start);
    return r;
}

// ── Held-Karp ────────────────────────────────────────────────────────

SolveResult held_karp_tsp(const Instance& inst) {
    const std::size_t n = inst.size();
    if (n < 3) throw CapExceeded("TSP needs at least 3 points");
    if (n > 22) throw CapExceeded("Held-Karp is limited to 22 points");
    const auto start = std::chrono::steady_clock::now();

    // dp[mask * m + v]: shortest path from 0 through `mask` (over vertices
    // 1..n-1, bit v-1) ending at v.
    const std::size_t m = n - 1;
    const std::size_t masks = std::size_t{1} << m;
    std::vector<double> dp(masks * m, kInf);
    for (std::size_t v = 0; v < m; ++v) dp[(std::size_t{1} << v) * m + v] = inst.distance(0, v + 1);
    for (std::size_t mask = 1; mask < masks; ++mask) {
        for (std::size_t v = 0; v < m; ++v) {
            const double cur = dp[mask * m + v];
            if (!(mask >> v & 1) || cur == kInf) continue;
            for (std::size_t w = 0; w < m; ++w) {
                if (mask >> w & 1) continue;
                const std::size_t next = mask | (std::size_t{1} << w);
                const double cand = cur + inst.distance(v + 1, w + 1);
                if (cand < dp[next * m + w]) dp[next * m + w] = cand;
            }
        }
    }
    const std::size_t full = masks - 1;
    double best = kInf;
    std::size_t last = 0;
    for (std::size_t v = 0; v < m; ++v) {
        const double cand = dp[full * m + v] + inst.distance(v + 1, 0);
        if (cand < best) {
            best = cand;
            last = v;
        }
    }
    std::vector<Index> rev;
    std::size_t mask = full;
    std::size_t v = last;
    while (true) {
        rev.push_back(v + 1);
        const std::size_t prev_mask = mask & ~(std::size_t{1} << v);
        if (prev_mask == 0) break;
        const double target = dp[mask * m + v];
        std::size_t pred = m;
        for (std::size_t u = 0; u < m; ++u) {
            if (!(prev_mask >> u & 1)) continue;
            if (dp[prev_mask * m + u] + inst.distance(u + 1, v + 1) == target) {
                pred = u;
                break;
            }
        }
        if (pred == m) throw std::logic_error("Held-Karp reconstruction failed");
        mask = prev_mask;
        v = pred;
    }
    SolveResult r;
    r.algorithm = "heldkarp";
    r.length = best;
    r.tour.order = {0};
    r.tour.order.insert(r.tour.order.end(), rev.rbegin(), rev.rend());
    r.tour = canonical_tour(r.tour);
    r.stats.time_ms = elapsed_ms(start);
    return r;
}

SolveResult held_karp_path_cover(const PathCoverProblem& prob) {
    if (prob.points().size() > 18)
        throw CapExceeded("Held-Karp path cover is limited to 18 points");
    if (prob.boundary().empty()) return empty_boundary_result(prob, "heldkarp");
    const auto start = std::chrono::steady_clock::now();

    const Instance& inst = prob.instance();
    const Matching& M = prob.matching();
    std::vector<Index> interior;
    std::set_difference(prob.points().begin(), prob.points().end(), prob.boundary().begin(),
                        prob.boundary().end(), std::back_inserter(interior));
    const std::size_t k = interior.size();
    const std::size_t masks = std::size_t{1} << k;
    const std::size_t slots = k + 1;  // slot k: still at the pair's first endpoint
    const std::size_t m = M.size();

    // layer[j][mask * slots + last]: pairs < j closed, pair j's path at `last`.
    std::vector<std::vector<double>> layer(m + 1, std::vector<double>(masks * slots, kInf));
    auto vertex = [&](std::size_t j, std::size_t slot) { return slot == k ? M[j].u : interior[slot]; };

    layer[0][0 * slots + k] = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        auto& cur = layer[j];
        for (std::size_t mask = 0; mask < masks; ++mask) {
            for (std::size_t s = 0; s < slots; ++s) {
                const double c = cur[mask * slots + s];
                if (c == kInf) continue;
                const Index from = vertex(j, s);
                for (std::size_t w = 0; w < k; ++w) {
                    if (mask >> w & 1) continue;
                    const std::size_t next = mask | (std::size_t{1} << w);
                    const double cand = c + inst.distance(from, interior[w]);
                    if (cand < cur[next * slots + w]) cur[next * slots + w] = cand;
                }
                const double closed = c + inst.distance(from, M[j].v);
                if (closed < layer[j + 1][mask * slots + k]) layer[j + 1][mask * slots + k] = closed;
            }
        }
    }

    SolveResult r;
    r.algorithm = "heldkarp";
    r.stats.time_ms = elapsed_ms(start);
    const double best = layer[m][(masks - 1) * slots + k];
    if (best == kInf) return r;
    r.length = best;

    // Walk back, choosing the smallest predecessor slot on exact ties.
    std::vector<std::vector<Index>> paths(m);
    std::size_t mask = masks - 1;
    for (std::size_t jj = m; jj-- > 0;) {
        const double target = layer[jj + 1][mask * slots + k];
        std::size_t s = slots;
        for (std::size_t c = 0; c < slots; ++c) {
            const double v = layer[jj][mask * slots + c];
            if (v != kInf && v + inst.distance(vertex(jj, c), M[jj].v) == target) {
                s = c;
                break;
            }
        }
        if (s == slots) throw std::logic_error("path cover reconstruction failed");
        std::vector<Index> rev{M[jj].v};
        while (s != k) {
            rev.push_back(interior[s]);
            const std::size_t prev_mask = mask & ~(std::size_t{1} << s);
            const double t = layer[jj][mask * slots + s];
            std::size_t p = slots;
            for (std::size_t c = 0; c < slots; ++c) {
                if (c != k && !(prev_mask >> c & 1)) continue;
                const double v = layer[jj][prev_mask * slots + c];
                if (v != kInf && v + inst.distance(vertex(jj, c), interior[s]) == t) {
                    p = c;
                    break;
                }
            }
            if (p == slots) throw std::logic_error("path cover reconstruction failed");
            mask = prev_mask;
            s = p;
        }
        rev.push_back(M[jj].u);
        paths[jj].assign(rev.rbegin(), rev.rend());
    }
    r.cover.paths = std::move(paths);
    return r;
}

// ── Heuristic upper bound ────────────────────────────────────────────

Tour heuristic_tour(const Instance& inst) {
    const std::size_t n = inst.size();
    Tour t;
    std::vector<bool> used(n, false);
    t.order.push_back(0);
    used[0] = true;
    for (std::size_t step = 1; step < n; ++step) {
        const Index cur = t.order.back();
        Index best = n;
        for (Index v = 0; v < n; ++v)
            if (!used[v] && (best == n || inst.distance(cur, v) < inst.distance(cur, best))) best = v;
        used[best] = true;
        t.order.push_back(best);
    }
    if (n < 4) return t;
    auto& o = t.order;
    bool improved = true;
    while (improved) {
        improved = false;
        for (std::size_t i = 0; i + 2 < n; ++i) {
            for (std::size_t j = i + 2; j < n; ++j) {
                if (i == 0 && j == n - 1) continue;
                const Index a = o[i], b = o[i + 1], c = o[j], d = o[(j + 1) % n];
                const double delta = inst.distance(a, c) + inst.distance(b, d) -
                                     inst.distance(a, b) - inst.distance(c, d);
                if (delta < -1e-12) {
                    std::reverse(o.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                 o.begin() + static_cast<std::ptrdiff_t>(j) + 1);
                    improved = true;
                }
            }
        }
    }
    return t;
}

// ── Enumeration helpers ──────────────────────────────────────────────

void enumerate_matchings(std::span<const Index> B, const std::function<bool(const Matching&)>& visit) {
    if (B.size() % 2 != 0) return;
    std::vector<Index> pts(B.begin(), B.end());
    std::sort(pts.begin(), pts.end());
    std::vector<bool> used(pts.size(), false);
    Matching cur;
    bool stop = false;
    auto rec = [&](auto&& self) -> void {
        if (stop) return;
        std::size_t first = 0;
        while (first < pts.size() && used[first]) ++first;
        if (first == pts.size()) {
            if (!visit(cur)) stop = true;
            return;
        }
        used[first] = true;
        for (std::size_t j = first + 1; j < pts.size() && !stop; ++j) {
            if (used[j]) continue;
            used[j] = true;
            cur.emplace_back(pts[first], pts[j]);
            self(self);
            cur.pop_back();
            used[j] = false;
        }
        used[first] = false;
    };
    rec(rec);
}

void enumerate_scr(const Instance& inst, std::span<const Edge> candidates, std::size_t max_size,
                   const SolverConfig& cfg, const std::function<bool(const SegmentSet&)>& visit) {
    const std::size_t c = candidates.size();
    std::vector<std::vector<char>> cross(c, std::vector<char>(c, 0));
    if (cfg.prune_crossing) {
        for (std::size_t i = 0; i < c; ++i) {
            for (std::size_t j = i + 1; j < c; ++j) {
                const HSegment a(inst.point(candidates[i].u), inst.point(candidates[i].v));
                const HSegment b(inst.point(candidates[j].u), inst.point(candidates[j].v));
                bool x = false;
                try {
                    x = segments_cross(a, b);
                } catch (const DegenerateError&) {
                    x = false;
                }
                cross[i][j] = cross[j][i] = x;
            }
        }
    }
    std::vector<std::size_t> chosen;
    SegmentSet current;
    bool stop = false;
    auto rec = [&](auto&& self, std::size_t from, std::size_t k) -> void {
        if (stop) return;
        if (chosen.size() == k) {
            if (!visit(current)) stop = true;
            return;
        }
        for (std::size_t i = from; i + (k - chosen.size()) <= c && !stop; ++i) {
            bool ok = true;
            for (std::size_t j : chosen)
                if (cross[i][j]) ok = false;
            if (!ok) continue;
            chosen.push_back(i);
            current.push_back(candidates[i]);
            self(self, i + 1, k);
            current.pop_back();
            chosen.pop_back();
        }
    };
    for (std::size_t k = 0; k <= std::min(max_size, c) && !stop; ++k) rec(rec, 0, k);
}

std::optional<CrossingHits> crossing_hits(const SeparatorRegion& region, const PoincarePoint& p1,
                                          const PoincarePoint& p2) {
    const ArcHits h = region.arc_hits(p1, p2);
    if (h.upper.size() != 1 || h.lower.size() != 1) return std::nullopt;
    return CrossingHits{h.upper.front(), h.lower.front()};
}

bool reroute_gap_ok(const CrossingHits& a, const CrossingHits& b, double rho) {
    return std::abs(a.upper - b.upper) + std::abs(a.lower - b.lower) >= 4.0 * rho - 1e-6;
}

std::size_t scr_cap(const SeparatorBounds& b, const SolverConfig& cfg) {
    if (cfg.max_scr_override) return static_cast<std::size_t>(*cfg.max_scr_override);
    return static_cast<std::size_t>(std::floor(b.s_cr));
}

double boundary_bound(std::size_t p, double alpha) {
    const double l = std::log(static_cast<double>(p));
    return std::max(60.0 * l / alpha, 12.0 * l);
}

} // namespace hypertsp
