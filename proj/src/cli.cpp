#include "hypertsp/cli.hpp"

#include "hypertsp/instances.hpp"
#include "hypertsp/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace hypertsp {

namespace {

struct SolveFlags {
    std::string algo = "dnc";
    int threshold_t = 8;
    double epsilon = 1e-9;
    bool no_prune_crossing = false;
    bool no_prune_reroute = false;
    bool prune_matchings = false;
    bool parallel = false;
};

void add_solver_flags(CLI::App* cmd, SolveFlags& f) {
    cmd->add_option("--threshold-t", f.threshold_t, "brute-force cutoff |P| <= t")->check(CLI::Range(3, 64));
    cmd->add_option("--epsilon", f.epsilon, "length comparison tolerance")->check(CLI::PositiveNumber);
    cmd->add_flag("--no-prune-crossing", f.no_prune_crossing, "keep crossing segment pairs");
    cmd->add_flag("--no-prune-reroute", f.no_prune_reroute, "skip the arc-gap reroute filter");
    cmd->add_flag("--prune-matchings", f.prune_matchings, "only non-interleaving matchings");
    cmd->add_flag("--parallel", f.parallel, "one thread per path-cover endpoint");
}

SolverConfig to_config(const SolveFlags& f) {
    SolverConfig cfg;
    cfg.threshold_t = f.threshold_t;
    cfg.epsilon_len = f.epsilon;
    cfg.prune_crossing = !f.no_prune_crossing;
    cfg.prune_reroute = !f.no_prune_reroute;
    cfg.prune_matchings = f.prune_matchings;
    cfg.parallel = f.parallel;
    return cfg;
}

SolveResult solve_with(const Instance& inst, const std::string& algo, const SolverConfig& cfg) {
    if (inst.size() < 3) throw CapExceeded("a tour needs at least 3 points");
    if (algo == "heldkarp") return held_karp_tsp(inst);
    if (algo == "brute") return brute_force_tsp(inst);
    return tsp_via_path_cover(inst, cfg);
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << content;
    } else {
        write_file(path, content);
    }
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(static_cast<int>(parse_decimal(item)));
    return out;
}

std::vector<std::string> parse_word_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

bool lengths_match(double stated, double actual) {
    return std::abs(stated - actual) <= 1e-9 * std::max(1.0, std::abs(actual));
}

std::string inspect_report(const Instance& inst, const SeparatorRegion& region,
                           const std::optional<Tour>& tour) {
    using nlohmann::json;
    const std::size_t n = inst.size();
    std::size_t inside = 0, pos = 0, neg = 0;
    for (const auto& p : inst.points()) {
        if (region.contains(p)) ++inside;
        const int s = side_of_line(p, region.line());
        if (s > 0) ++pos;
        if (s < 0) ++neg;
    }
    const SeparatorBounds b = bounds(region, inst.alpha());
    const std::size_t limit = 2 * n / 3;
    json doc = {
        {"n", n},
        {"alpha", format_exact(inst.alpha())},
        {"q", {format_exact(region.cone.apex.x()), format_exact(region.cone.apex.y())}},
        {"line",
         {{"first", {format_exact(region.line().first().real()), format_exact(region.line().first().imag())}},
          {"second",
           {format_exact(region.line().second().real()), format_exact(region.line().second().imag())}}}},
        {"cone_half_angle", region.cone.half_angle},
        {"qt", region.qt},
        {"rho", region.rho},
        {"n_in", b.n_in},
        {"s_cr", b.s_cr},
        {"points_in_region", inside},
        {"region_count_below_n_in", static_cast<double>(inside) < b.n_in},
        {"side_counts", {{"positive", pos}, {"negative", neg}}},
        {"balance_limit", limit},
        {"balanced", pos <= limit && neg <= limit},
    };
    if (tour) {
        json hist = {{"crosses", 0}, {"entering", 0}, {"inside", 0}, {"other", 0}, {"disjoint", 0}};
        const auto& o = tour->order;
        for (std::size_t i = 0; i < o.size(); ++i) {
            const HSegment seg(inst.point(o[i]), inst.point(o[(i + 1) % o.size()]));
            auto& count = hist[to_string(classify_segment(seg, region))];
            count = count.get<int>() + 1;
        }
        doc["segment_classes"] = hist;
    }
    return doc.dump(1) + "\n";
}

Tour tour_from_document(const ResultDocument& doc, std::size_t n) {
    Tour t;
    for (long long v : doc.tour) {
        if (v < 0) throw ParseError("negative tour index");
        t.order.push_back(static_cast<Index>(v));
    }
    if (!is_valid_tour(t, n)) throw ParseError("tour is not a permutation of the instance points");
    return t;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (const char* env = std::getenv("HYPERTSP_EPS")) {
        try {
            set_geometry_epsilon(parse_decimal(env));
        } catch (const std::exception& e) {
            err << "error: HYPERTSP_EPS: " << e.what() << "\n";
            return kExitParse;
        }
    }

    CLI::App app{"Exact TSP in the hyperbolic plane", "hypertsp"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->require_subcommand(1);
    std::string gen_out;
    int gen_n = 8;
    double gen_alpha = 1.0, gen_side = 1.0, gen_c = 1.0;
    std::uint64_t gen_seed = 1;
    auto* gen_random = gen->add_subcommand("random", "uniform alpha-spaced points");
    gen_random->add_option("--n", gen_n)->required();
    gen_random->add_option("--alpha", gen_alpha)->required();
    gen_random->add_option("--seed", gen_seed);
    gen_random->add_option("--out", gen_out);
    auto* gen_ngon = gen->add_subcommand("ngon", "regular polygon");
    gen_ngon->add_option("--n", gen_n)->required();
    gen_ngon->add_option("--side", gen_side)->required();
    gen_ngon->add_option("--out", gen_out);
    auto* gen_grid = gen->add_subcommand("grid", "grid-like hypercycle embedding");
    gen_grid->add_option("--n", gen_n)->required();
    gen_grid->add_option("--c", gen_c)->required();
    gen_grid->add_option("--alpha", gen_alpha)->required();
    gen_grid->add_option("--out", gen_out);

    // solve
    auto* solve = app.add_subcommand("solve", "solve an instance");
    std::string solve_in, solve_out;
    SolveFlags flags;
    bool check = false;
    solve->add_option("instance", solve_in)->required();
    solve->add_option("--algo", flags.algo)->check(CLI::IsMember({"dnc", "heldkarp", "brute"}));
    solve->add_option("--out", solve_out);
    solve->add_flag("--check", check, "re-verify the witness");
    add_solver_flags(solve, flags);

    // verify
    auto* verify = app.add_subcommand("verify", "check a result against an instance");
    std::string verify_in, verify_result;
    verify->add_option("instance", verify_in)->required();
    verify->add_option("result", verify_result)->required();

    // inspect
    auto* inspect = app.add_subcommand("inspect", "separator diagnostics");
    std::string inspect_in, inspect_tour, inspect_svg, inspect_out;
    inspect->add_option("instance", inspect_in)->required();
    inspect->add_option("--tour", inspect_tour, "result file whose tour is classified");
    inspect->add_option("--svg", inspect_svg, "write a Poincare-disk SVG");
    inspect->add_option("--out", inspect_out);

    // bench
    auto* bench = app.add_subcommand("bench", "node counts and timings as CSV");
    std::string bench_ns = "6,8,10", bench_algos = "dnc,heldkarp", bench_out;
    double bench_alpha = 1.5;
    std::uint64_t bench_seed = 1;
    SolveFlags bench_flags;
    bench->add_option("--n", bench_ns, "comma-separated sizes");
    bench->add_option("--alpha", bench_alpha);
    bench->add_option("--algos", bench_algos, "comma-separated algorithms");
    bench->add_option("--seed", bench_seed);
    bench->add_option("--out", bench_out);
    add_solver_flags(bench, bench_flags);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*gen) {
            Instance inst = [&] {
                if (*gen_random) return gen_random_alpha_spaced(gen_n, gen_alpha, gen_seed);
                if (*gen_ngon) return gen_regular_ngon(gen_n, gen_side);
                return gen_grid_like(gen_n, gen_c, gen_alpha).instance();
            }();
            emit(gen_out, instance_to_json(inst), out);
            return kExitOk;
        }

        if (*solve) {
            const Instance inst = instance_from_json(read_file(solve_in));
            const SolveResult r = solve_with(inst, flags.algo, to_config(flags));
            if (check) {
                if (!is_valid_tour(r.tour, inst.size())) {
                    err << "check failed: witness is not a tour\n";
                    return kExitFailure;
                }
                if (!lengths_match(r.length, tour_length(r.tour, inst))) {
                    err << "check failed: witness length differs\n";
                    return kExitFailure;
                }
            }
            emit(solve_out, result_to_json(r), out);
            return kExitOk;
        }

        if (*verify) {
            const Instance inst = instance_from_json(read_file(verify_in));
            const ResultDocument doc = result_from_json(read_file(verify_result));
            Tour t;
            for (long long v : doc.tour) t.order.push_back(v < 0 ? inst.size() : static_cast<Index>(v));
            if (!is_valid_tour(t, inst.size())) {
                out << "INVALID TOUR\n";
                return kExitFailure;
            }
            if (!lengths_match(doc.length, tour_length(t, inst))) {
                out << "LENGTH MISMATCH\n";
                return kExitFailure;
            }
            if (inst.size() >= 4 && !tour_is_noncrossing(t, inst))
                out << "warning: tour self-crosses (cannot be optimal)\n";
            out << "OK\n";
            return kExitOk;
        }

        if (*inspect) {
            const Instance inst = instance_from_json(read_file(inspect_in));
            if (inst.size() < 2) throw CapExceeded("inspect needs at least 2 points");
            const SeparatorRegion region = build_region(inst.points(), inst.alpha());
            std::optional<Tour> tour;
            if (!inspect_tour.empty())
                tour = tour_from_document(result_from_json(read_file(inspect_tour)), inst.size());
            emit(inspect_out, inspect_report(inst, region, tour), out);
            if (!inspect_svg.empty()) write_file(inspect_svg, separator_svg(inst, region, tour));
            return kExitOk;
        }

        if (*bench) {
            std::ostringstream csv;
            csv << "n,alpha,algo,nodes,time_ms\n";
            const SolverConfig cfg = to_config(bench_flags);
            for (int n : parse_int_list(bench_ns)) {
                const Instance inst = gen_random_alpha_spaced(n, bench_alpha, bench_seed);
                for (const auto& algo : parse_word_list(bench_algos)) {
                    if (algo != "dnc" && algo != "heldkarp" && algo != "brute")
                        throw ParseError("unknown algorithm '" + algo + "'");
                    const SolveResult r = solve_with(inst, algo, cfg);
                    std::uint64_t nodes = r.stats.nodes;
                    if (algo == "heldkarp") nodes = static_cast<std::uint64_t>(n - 1) << (n - 1);
                    char time_buf[32];
                    std::snprintf(time_buf, sizeof time_buf, "%.3f", r.stats.time_ms);
                    csv << n << "," << format_exact(bench_alpha) << "," << algo << "," << nodes << ","
                        << time_buf << "\n";
                }
            }
            emit(bench_out, csv.str(), out);
            return kExitOk;
        }
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const UnsupportedDensity& e) {
        err << "error: unsupported density: " << e.what() << "\n";
        return kExitDensity;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}

} // namespace hypertsp
