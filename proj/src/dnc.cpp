#include "hypertsp/solvers.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cassert>
#include <chrono>
#include <cmath>
#include <exception>
#include <map>
#include <memory>
#include <numeric>
#include <thread>
#include <unordered_map>

namespace hypertsp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kMaxPoints = 64;
using Mask = std::uint64_t;

Mask mask_of(std::span<const Index> xs) {
    Mask m = 0;
    for (Index x : xs) m |= Mask{1} << x;
    return m;
}

struct Candidate {
    double length = kInf;
    SegmentSet edges;  // sorted witness edges
    bool feasible() const { return length < kInf; }
};

// Tracks the best solution so far; the incumbent may start from an
// external bound without a witness.
struct Incumbent {
    double length = kInf;
    SegmentSet edges;
    bool has_witness = false;
    double eps = 1e-9;

    bool accepts(double len, const SegmentSet& e) const {
        if (!has_witness) return len <= length + eps;
        if (len < length - eps) return true;
        if (len > length + eps) return false;
        return e < edges;
    }
    void take(double len, SegmentSet e) {
        length = len;
        edges = std::move(e);
        has_witness = true;
    }
    bool beaten_by_bound(double lower) const { return lower > length + eps; }
};

SegmentSet merged(const SegmentSet& a, const SegmentSet& b, const SegmentSet& c) {
    SegmentSet out;
    out.reserve(a.size() + b.size() + c.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    out.insert(out.end(), c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        history_.push_back(b);
        return true;
    }
    std::size_t mark() const { return history_.size(); }
    void rollback(std::size_t mark) {
        while (history_.size() > mark) {
            const std::size_t b = history_.back();
            history_.pop_back();
            size_[parent_[b]] -= size_[b];
            parent_[b] = b;
        }
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
    std::vector<std::size_t> history_;
};

// Where segment p1p2 meets the separating line, as a Klein abscissa in the
// region frame (monotone in the hyperbolic position along the line).
double line_crossing_abscissa(const SeparatorRegion& region, const PoincarePoint& p1,
                              const PoincarePoint& p2) {
    const Complex k1 = to_klein(region.frame.to_frame(p1));
    const Complex k2 = to_klein(region.frame.to_frame(p2));
    const double lam = k1.imag() / (k1.imag() - k2.imag());
    return k1.real() + lam * (k2.real() - k1.real());
}

class DncSolver {
public:
    // `noncrossing_optimum`: the top-level optimum has no two crossing
    // segments (true for one path or a tour), so any crossing pair may be
    // pruned. Otherwise only pairs on the same path are.
    DncSolver(const Instance& inst, double alpha, const SolverConfig& cfg, bool noncrossing_optimum)
        : inst_(inst), alpha_(alpha), cfg_(cfg), noncrossing_optimum_(noncrossing_optimum) {}

    Candidate solve(const std::vector<Index>& P, const std::vector<Index>& B, const Matching& M,
                    double bound);

    SolveStats stats;

private:

    Candidate solve_uncached(const std::vector<Index>& P, const std::vector<Index>& B,
                             const Matching& M, double bound);
    Candidate oracle(const std::vector<Index>& P, const std::vector<Index>& B, const Matching& M,
                     bool brute);
    const SeparatorRegion& region_for(const std::vector<Index>& P, const std::vector<Index>& B,
                                      bool use_boundary);

    const Instance& inst_;
    double alpha_;
    SolverConfig cfg_;
    bool noncrossing_optimum_;
    std::unordered_map<std::string, Candidate> memo_;
    std::map<std::pair<Mask, Mask>, std::unique_ptr<SeparatorRegion>> regions_;
};

std::string memo_key(const std::vector<Index>& P, const std::vector<Index>& B, const Matching& M) {
    std::string key(16 + 2 * M.size(), '\0');
    const Mask pm = mask_of(P);
    const Mask bm = mask_of(B);
    for (int i = 0; i < 8; ++i) {
        key[i] = static_cast<char>(pm >> (8 * i));
        key[8 + i] = static_cast<char>(bm >> (8 * i));
    }
    Matching sorted = M;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        key[16 + 2 * i] = static_cast<char>(sorted[i].u);
        key[17 + 2 * i] = static_cast<char>(sorted[i].v);
    }
    return key;
}

Candidate DncSolver::solve(const std::vector<Index>& P, const std::vector<Index>& B,
                           const Matching& M, double bound) {
    const bool exact = bound == kInf;
    std::string key;
    if (exact) {
        key = memo_key(P, B, M);
        if (auto it = memo_.find(key); it != memo_.end()) {
            ++stats.memo_hits;
            return it->second;
        }
    }
    ++stats.nodes;
    Candidate res = solve_uncached(P, B, M, bound);
    if (exact) memo_.emplace(std::move(key), res);
    return res;
}

Candidate DncSolver::oracle(const std::vector<Index>& P, const std::vector<Index>& B,
                            const Matching& M, bool brute) {
    const PathCoverProblem prob(inst_, P, B, M);
    const SolveResult r =
        brute ? brute_force_path_cover(prob, std::max<std::size_t>(cfg_.brute_force_cap,
                                                                    static_cast<std::size_t>(cfg_.threshold_t)))
              : held_karp_path_cover(prob);
    Candidate c;
    c.length = r.length;
    if (r.feasible()) c.edges = path_cover_edges(r.cover);
    return c;
}

const SeparatorRegion& DncSolver::region_for(const std::vector<Index>& P,
                                             const std::vector<Index>& B, bool use_boundary) {
    const auto key = std::make_pair(mask_of(P), use_boundary ? mask_of(B) : mask_of(P));
    auto& slot = regions_[key];
    if (!slot) {
        std::vector<PoincarePoint> pts;
        pts.reserve(P.size());
        for (Index i : P) pts.push_back(inst_.point(i));
        if (use_boundary) {
            std::vector<std::size_t> local;
            for (Index b : B)
                local.push_back(static_cast<std::size_t>(
                    std::lower_bound(P.begin(), P.end(), b) - P.begin()));
            slot = std::make_unique<SeparatorRegion>(build_region_for_boundary(pts, local, alpha_));
        } else {
            slot = std::make_unique<SeparatorRegion>(build_region(pts, alpha_));
        }
    }
    return *slot;
}

Candidate DncSolver::solve_uncached(const std::vector<Index>& P, const std::vector<Index>& B,
                                    const Matching& M, double bound) {
    if (B.empty()) {
        Candidate c;
        if (P.empty()) c.length = 0.0;
        return c;
    }
    if (P.size() <= static_cast<std::size_t>(cfg_.threshold_t)) {
        ++stats.leaves;
        return oracle(P, B, M, true);
    }

    const double logp = std::log(static_cast<double>(P.size()));
    ++stats.boundary_checks;
    stats.max_boundary = std::max(stats.max_boundary, B.size());
    if (static_cast<double>(B.size()) > boundary_bound(P.size(), alpha_)) ++stats.boundary_violations;
    assert(static_cast<double>(B.size()) <= boundary_bound(P.size(), alpha_));

    const bool use_boundary =
        static_cast<double>(B.size()) >= std::max(40.0 * logp / alpha_, 8.0 * logp);
    const SeparatorRegion* region_ptr = nullptr;
    SeparatorBounds bnd;
    try {
        region_ptr = &region_for(P, B, use_boundary);
        bnd = bounds(*region_ptr, alpha_);
    } catch (const DomainError&) {
        if (P.size() <= 18) return oracle(P, B, M, false);
        throw UnsupportedDensity("separator bounds are not finite for this alpha");
    }
    const SeparatorRegion& region = *region_ptr;
    const HLine line = region.line();

    // Local numbering of P.
    const std::size_t m = P.size();
    std::vector<int> local(inst_.size(), -1);
    for (std::size_t l = 0; l < m; ++l) local[P[l]] = static_cast<int>(l);
    std::vector<int> target(m, 2), side(m, 0);
    std::vector<bool> in_region(m, false), in_b(m, false);
    for (Index b : B) {
        target[local[b]] = 1;
        in_b[local[b]] = true;
    }
    for (std::size_t l = 0; l < m; ++l) {
        side[l] = side_of_line(inst_.point(P[l]), line);
        if (side[l] == 0) throw DegenerateError("input point on the separating line");
        in_region[l] = region.contains(inst_.point(P[l]));
    }

    // Candidate segments: every segment crossing the line. Those without an
    // endpoint in R must cross R (the part of the line beyond t and t' lies
    // in the empty cone), those with one form End.
    std::vector<Edge> cand;
    std::vector<std::pair<int, int>> ends;
    std::size_t n_cr = 0;
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = a + 1; b < m; ++b) {
                if (side[a] == side[b]) continue;
                const bool end = in_region[a] || in_region[b];
                if (end != (pass == 1)) continue;
                cand.emplace_back(P[a], P[b]);
                ends.emplace_back(static_cast<int>(a), static_cast<int>(b));
            }
        }
        if (pass == 0) n_cr = cand.size();
    }
    const std::size_t n_cand = cand.size();
    std::vector<double> len(n_cand);
    for (std::size_t i = 0; i < n_cand; ++i) len[i] = edge_length(cand[i], inst_);

    std::vector<std::vector<char>> crosses;
    if (cfg_.prune_crossing) {
        crosses.assign(n_cand, std::vector<char>(n_cand, 0));
        for (std::size_t i = 0; i < n_cand; ++i) {
            const HSegment si(inst_.point(cand[i].u), inst_.point(cand[i].v));
            for (std::size_t j = i + 1; j < n_cand; ++j) {
                const HSegment sj(inst_.point(cand[j].u), inst_.point(cand[j].v));
                bool x = false;
                try {
                    x = segments_cross(si, sj);
                } catch (const DegenerateError&) {
                    x = false;
                }
                crosses[i][j] = crosses[j][i] = x;
            }
        }
    }

    // Degree lower bound: a vertex still needing r edges pays at least its r
    // nearest distances; every edge is counted from both ends.
    std::vector<std::array<double, 3>> near_sum(m);
    for (std::size_t a = 0; a < m; ++a) {
        double d1 = kInf, d2 = kInf;
        for (std::size_t b = 0; b < m; ++b) {
            if (a == b) continue;
            const double d = inst_.distance(P[a], P[b]);
            if (d < d1) {
                d2 = d1;
                d1 = d;
            } else if (d < d2) {
                d2 = d;
            }
        }
        near_sum[a] = {0.0, d1, d1 + d2};
    }

    Incumbent best;
    best.length = bound;
    best.eps = cfg_.epsilon_len;

    std::vector<int> deg(m, 0);
    UnionFind uf(m);
    std::vector<std::size_t> chosen;
    double s_len = 0.0;
    double lb_twice = 0.0;
    for (std::size_t l = 0; l < m; ++l) lb_twice += near_sum[l][target[l]];

    auto can_add = [&](std::size_t i) {
        const auto [a, b] = ends[i];
        if (deg[a] >= target[a] || deg[b] >= target[b]) return false;
        if (uf.find(a) == uf.find(b)) return false;
        if (cfg_.prune_crossing && noncrossing_optimum_)
            for (std::size_t j : chosen)
                if (crosses[i][j]) return false;
        const double lb_after = lb_twice - (near_sum[a][target[a] - deg[a]] - near_sum[a][target[a] - deg[a] - 1]) -
                                (near_sum[b][target[b] - deg[b]] - near_sum[b][target[b] - deg[b] - 1]);
        return !best.beaten_by_bound(s_len + len[i] + 0.5 * lb_after);
    };

    struct Undo {
        std::size_t uf_mark;
        double lb_twice;
    };
    auto push = [&](std::size_t i) {
        const auto [a, b] = ends[i];
        Undo u{uf.mark(), lb_twice};
        lb_twice -= near_sum[a][target[a] - deg[a]] - near_sum[a][target[a] - deg[a] - 1];
        lb_twice -= near_sum[b][target[b] - deg[b]] - near_sum[b][target[b] - deg[b] - 1];
        ++deg[a];
        ++deg[b];
        uf.unite(a, b);
        chosen.push_back(i);
        s_len += len[i];
        return u;
    };
    auto pop = [&](const Undo& u) {
        const std::size_t i = chosen.back();
        chosen.pop_back();
        const auto [a, b] = ends[i];
        --deg[a];
        --deg[b];
        uf.rollback(u.uf_mark);
        lb_twice = u.lb_twice;
        s_len -= len[i];
    };

    // Exactly `k` more candidates from [from, hi); calls on_done per subset.
    auto choose = [&](auto&& self, std::size_t from, std::size_t hi, std::size_t k,
                      const std::function<void()>& on_done) -> bool {
        if (k == 0) {
            on_done();
            return true;
        }
        bool reached = false;
        for (std::size_t i = from; i + k <= hi; ++i) {
            if (!can_add(i)) continue;
            const Undo u = push(i);
            reached = self(self, i + 1, hi, k - 1, on_done) || reached;
            pop(u);
        }
        return reached;
    };

    // Crossing hits of Cr segments, for the reroute filter.
    std::vector<std::optional<CrossingHits>> hits(n_cr);
    if (cfg_.prune_reroute)
        for (std::size_t i = 0; i < n_cr; ++i)
            hits[i] = crossing_hits(region, inst_.point(cand[i].u), inst_.point(cand[i].v));
    std::vector<double> abscissa(n_cand);
    if (cfg_.prune_matchings)
        for (std::size_t i = 0; i < n_cand; ++i)
            abscissa[i] = line_crossing_abscissa(region, inst_.point(cand[i].u), inst_.point(cand[i].v));

    const std::size_t cap = std::min(scr_cap(bnd, cfg_), n_cr);

    auto process = [&]() {
        SegmentSet S;
        S.reserve(chosen.size());
        for (std::size_t i : chosen) S.push_back(cand[i]);
        const SideSplit split = uncovered_split(inst_, P, B, S, line);
        if (split.B1.size() % 2 != 0 || split.B2.size() % 2 != 0) return;
        if ((split.B1.empty() && !split.P1.empty()) || (split.B2.empty() && !split.P2.empty())) return;
        ++stats.branches;

        auto side_lb = [&](const std::vector<Index>& Ps, const std::vector<Index>& Bs) {
            double twice = 0.0;
            for (Index a : Ps) {
                const int need = std::binary_search(Bs.begin(), Bs.end(), a) ? 1 : 2;
                double d1 = kInf, d2 = kInf;
                for (Index b : Ps) {
                    if (a == b) continue;
                    const double d = inst_.distance(a, b);
                    if (d < d1) {
                        d2 = d1;
                        d1 = d;
                    } else if (d < d2) {
                        d2 = d;
                    }
                }
                twice += need == 1 ? d1 : d1 + d2;
            }
            return 0.5 * twice;
        };
        const double lb1 = side_lb(split.P1, split.B1);
        const double lb2 = side_lb(split.P2, split.B2);
        if (best.beaten_by_bound(s_len + lb1 + lb2)) return;

        // The single S segment at each half-covered boundary point.
        std::vector<int> port(m, -1);
        for (std::size_t i : chosen) {
            port[ends[i].first] = static_cast<int>(i);
            port[ends[i].second] = static_cast<int>(i);
        }
        std::vector<std::vector<int>> seg_at(m, std::vector<int>(m, -1));
        for (std::size_t i : chosen) {
            seg_at[ends[i].first][ends[i].second] = static_cast<int>(i);
            seg_at[ends[i].second][ends[i].first] = static_cast<int>(i);
        }

        // Perfect matchings on one side, rejecting pairs that close a cycle
        // with S and (optionally) pairs whose line crossings interleave.
        auto match_side = [&](const std::vector<Index>& Bs,
                              const std::function<bool(const Matching&)>& visit) {
            std::vector<bool> used(Bs.size(), false);
            Matching cur;
            std::vector<std::pair<double, double>> spans;
            bool stop = false;
            auto rec = [&](auto&& self) -> void {
                std::size_t first = 0;
                while (first < Bs.size() && used[first]) ++first;
                if (first == Bs.size()) {
                    if (!visit(cur)) stop = true;
                    return;
                }
                used[first] = true;
                for (std::size_t j = first + 1; j < Bs.size() && !stop; ++j) {
                    if (used[j]) continue;
                    const int a = local[Bs[first]];
                    const int b = local[Bs[j]];
                    const std::size_t mark = uf.mark();
                    if (!uf.unite(a, b)) continue;
                    bool has_span = false;
                    if (cfg_.prune_matchings && !in_b[a] && !in_b[b]) {
                        const double x = abscissa[port[a]];
                        const double y = abscissa[port[b]];
                        const double lo = std::min(x, y), hi = std::max(x, y);
                        bool ok = true;
                        for (const auto& [l2, h2] : spans)
                            if ((lo < l2 && l2 < hi && hi < h2) || (l2 < lo && lo < h2 && h2 < hi)) ok = false;
                        if (!ok) {
                            uf.rollback(mark);
                            continue;
                        }
                        spans.emplace_back(lo, hi);
                        has_span = true;
                    }
                    used[j] = true;
                    cur.emplace_back(Bs[first], Bs[j]);
                    self(self);
                    cur.pop_back();
                    used[j] = false;
                    if (has_span) spans.pop_back();
                    uf.rollback(mark);
                }
                used[first] = false;
            };
            rec(rec);
        };

        match_side(split.B1, [&](const Matching& M1) {
            Candidate sub1;
            bool solved1 = false;
            match_side(split.B2, [&](const Matching& M2) {
                ++stats.matchings;
                SegmentSet all = S;
                all.insert(all.end(), M1.begin(), M1.end());
                all.insert(all.end(), M2.begin(), M2.end());
                const auto paths = realized_paths(all, B, M);
                if (!paths) return true;

                if (cfg_.prune_crossing && !noncrossing_optimum_) {
                    for (const auto& path : *paths) {
                        std::vector<int> ids;
                        for (std::size_t k = 0; k + 1 < path.size(); ++k) {
                            const int id = seg_at[local[path[k]]][local[path[k + 1]]];
                            if (id < 0) continue;
                            for (int o : ids)
                                if (crosses[id][o]) return true;
                            ids.push_back(id);
                        }
                    }
                }

                if (cfg_.prune_reroute) {
                    for (const auto& path : *paths) {
                        std::vector<std::pair<int, CrossingHits>> seen;
                        for (std::size_t k = 0; k + 1 < path.size(); ++k) {
                            const int a = local[path[k]];
                            const int b = local[path[k + 1]];
                            const int id = seg_at[a][b];
                            if (id < 0 || static_cast<std::size_t>(id) >= n_cr || !hits[id]) continue;
                            for (const auto& [dir, h] : seen)
                                if (dir == side[a] && !reroute_gap_ok(h, *hits[id], region.rho)) return true;
                            seen.emplace_back(side[a], *hits[id]);
                        }
                    }
                }

                if (!solved1) {
                    sub1 = solve(split.P1, split.B1, M1, kInf);
                    solved1 = true;
                }
                if (!sub1.feasible()) return false;
                if (best.beaten_by_bound(s_len + sub1.length + lb2)) return false;
                const Candidate sub2 = solve(split.P2, split.B2, M2, kInf);
                if (!sub2.feasible()) return true;
                const double total = s_len + sub1.length + sub2.length;
                if (total > best.length + best.eps) return true;
                SegmentSet edges = merged(S, sub1.edges, sub2.edges);
                if (best.accepts(total, edges)) best.take(total, std::move(edges));
                return true;
            });
            return true;
        });
    };

    for (std::size_t k_cr = 0; k_cr <= cap; ++k_cr) {
        const bool reached = choose(choose, 0, n_cr, k_cr, [&]() {
            for (std::size_t k_end = 0; k_end <= n_cand - n_cr; ++k_end)
                if (!choose(choose, n_cr, n_cand, k_end, process)) break;
        });
        if (!reached) break;
    }

    Candidate out;
    if (best.has_witness) {
        out.length = best.length;
        out.edges = std::move(best.edges);
    }
    return out;
}

void check_dnc_size(std::size_t n) {
    if (n > kMaxPoints)
        throw CapExceeded("divide and conquer supports at most 64 points");
}

} // namespace

SolveResult hyperbolic_tsp_dnc(const PathCoverProblem& prob, double alpha, const SolverConfig& cfg) {
    cfg.validate();
    check_dnc_size(prob.instance().size());
    const auto start = std::chrono::steady_clock::now();
    DncSolver solver(prob.instance(), alpha, cfg, prob.matching().size() <= 1);
    const Candidate c = solver.solve(prob.points(), prob.boundary(), prob.matching(), kInf);
    SolveResult r;
    r.algorithm = "dnc";
    r.stats = solver.stats;
    r.length = c.length;
    if (c.feasible()) {
        auto paths = realized_paths(c.edges, prob.boundary(), prob.matching());
        if (!paths) throw std::logic_error("divide and conquer produced an invalid witness");
        r.cover.paths = std::move(*paths);
    }
    r.stats.time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

SolveResult tsp_via_path_cover(const Instance& inst, const SolverConfig& cfg) {
    cfg.validate();
    const std::size_t n = inst.size();
    if (n < 3) throw CapExceeded("TSP needs at least 3 points");
    check_dnc_size(n);
    const auto start = std::chrono::steady_clock::now();
    const double alpha = inst.alpha();
    const double heuristic = tour_length(heuristic_tour(inst), inst);

    std::vector<Index> all(n);
    std::iota(all.begin(), all.end(), Index{0});

    struct PerQ {
        Candidate c;
        SolveStats stats;
    };
    std::vector<PerQ> results(n);

    auto run_q = [&](DncSolver& solver, Index q, double bound) {
        const std::vector<Index> B{0, q};
        const Matching M{Edge(0, q)};
        results[q].c = solver.solve(all, B, M, bound);
    };

    Incumbent best;
    best.length = heuristic;
    best.eps = cfg.epsilon_len;
    SolveStats stats;

    auto consider = [&](Index q) {
        const Candidate& c = results[q].c;
        if (!c.feasible()) return;
        const double total = c.length + inst.distance(0, q);
        SegmentSet edges = c.edges;
        edges.emplace_back(0, q);
        std::sort(edges.begin(), edges.end());
        if (best.accepts(total, edges)) best.take(total, std::move(edges));
    };

    if (cfg.parallel && n > 3) {
        const std::size_t workers =
            std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), n - 1));
        std::atomic<std::size_t> next{1};
        std::vector<std::exception_ptr> errors(workers);
        std::vector<SolveStats> worker_stats(workers);
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w]() {
                try {
                    DncSolver solver(inst, alpha, cfg, true);
                    for (Index q = next++; q < n; q = next++)
                        run_q(solver, q, heuristic - inst.distance(0, q));
                    worker_stats[w] = solver.stats;
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
        for (const auto& s : worker_stats) stats += s;
        for (Index q = 1; q < n; ++q) consider(q);
    } else {
        DncSolver solver(inst, alpha, cfg, true);
        for (Index q = 1; q < n; ++q) {
            run_q(solver, q, best.length - inst.distance(0, q));
            consider(q);
        }
        stats = solver.stats;
    }

    SolveResult r;
    r.algorithm = "dnc";
    r.stats = stats;
    if (best.has_witness) {
        r.length = best.length;
        // Tour edges form a Hamiltonian cycle; walk it from vertex 0.
        std::vector<std::vector<Index>> adj(n);
        for (const Edge& e : best.edges) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        std::vector<Index> order{0};
        Index prev = 0, cur = std::min(adj[0][0], adj[0][1]);
        while (cur != 0) {
            order.push_back(cur);
            const Index nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nxt;
        }
        r.tour = canonical_tour(Tour{order});
        r.length = tour_length(r.tour, inst);
    }
    r.stats.time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace hypertsp
