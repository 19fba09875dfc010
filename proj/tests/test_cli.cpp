#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypertsp/cli.hpp"
#include "hypertsp/instances.hpp"
#include "hypertsp/io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>

using namespace hypertsp;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("hypertsp_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string tmp(const std::string& name) { return (scratch() / name).string(); }

} // namespace

TEST_CASE("gen writes valid instances") {
    Run r = run({"gen", "grid", "--n", "4", "--c", "21", "--alpha", "0.05"});
    REQUIRE(r.code == kExitOk);
    const Instance grid = instance_from_json(r.out);
    CHECK(grid.size() == 16);
    CHECK(grid.alpha() == doctest::Approx(1.05));

    r = run({"gen", "ngon", "--n", "8", "--side", "4.1589", "--out", tmp("oct.json")});
    REQUIRE(r.code == kExitOk);
    const Instance oct = instance_from_json(read_file(tmp("oct.json")));
    CHECK(oct.size() == 8);
    CHECK(hyp_distance(oct.point(0), oct.point(1)) == doctest::Approx(4.1589).epsilon(1e-9));

    r = run({"gen", "random", "--n", "9", "--alpha", "1.3", "--seed", "4"});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out == instance_to_json(gen_random_alpha_spaced(9, 1.3, 4)));
}

TEST_CASE("solve and verify") {
    write_file(tmp("r.json"), instance_to_json(gen_random_alpha_spaced(9, 1.1, 2)));
    Run dnc = run({"solve", tmp("r.json"), "--algo", "dnc", "--check", "--out", tmp("dnc.json")});
    REQUIRE(dnc.code == kExitOk);
    Run hk = run({"solve", tmp("r.json"), "--algo", "heldkarp"});
    REQUIRE(hk.code == kExitOk);
    write_file(tmp("hk.json"), hk.out);
    const ResultDocument a = result_from_json(read_file(tmp("dnc.json")));
    const ResultDocument b = result_from_json(hk.out);
    CHECK(a.algorithm == "dnc");
    CHECK(b.algorithm == "heldkarp");
    CHECK(a.length == doctest::Approx(b.length).epsilon(1e-9));

    Run v = run({"verify", tmp("r.json"), tmp("dnc.json")});
    CHECK(v.code == kExitOk);
    CHECK(v.out == "OK\n");

    auto doc = nlohmann::json::parse(read_file(tmp("dnc.json")));
    doc["length"] = "1.5";
    write_file(tmp("bad_len.json"), doc.dump());
    v = run({"verify", tmp("r.json"), tmp("bad_len.json")});
    CHECK(v.code == kExitFailure);
    CHECK(v.out == "LENGTH MISMATCH\n");

    doc = nlohmann::json::parse(read_file(tmp("dnc.json")));
    doc["tour"] = {0, 1, 2};
    write_file(tmp("bad_tour.json"), doc.dump());
    v = run({"verify", tmp("r.json"), tmp("bad_tour.json")});
    CHECK(v.code == kExitFailure);
    CHECK(v.out == "INVALID TOUR\n");
}

TEST_CASE("verify warns about self-crossing tours") {
    const Instance sq({{0.3, 0.3}, {-0.3, 0.3}, {-0.3, -0.3}, {0.3, -0.3}}, 0.5);
    write_file(tmp("sq.json"), instance_to_json(sq));
    SolveResult crossing;
    crossing.tour.order = {0, 2, 1, 3};
    crossing.length = tour_length(crossing.tour, sq);
    crossing.algorithm = "manual";
    write_file(tmp("cross.json"), result_to_json(crossing));
    const Run v = run({"verify", tmp("sq.json"), tmp("cross.json")});
    CHECK(v.code == kExitOk);
    CHECK(v.out == "warning: tour self-crosses (cannot be optimal)\nOK\n");
}

TEST_CASE("exit codes") {
    write_file(tmp("big.json"), instance_to_json(gen_random_alpha_spaced(25, 1.0, 1)));
    CHECK(run({"solve", tmp("big.json"), "--algo", "heldkarp"}).code == kExitCap);
    write_file(tmp("two.json"), instance_to_json(gen_random_alpha_spaced(2, 1.0, 1)));
    CHECK(run({"solve", tmp("two.json")}).code == kExitCap);
    write_file(tmp("broken.json"), "{\"model\": ");
    CHECK(run({"solve", tmp("broken.json")}).code == kExitParse);
    CHECK(run({"solve", tmp("missing.json")}).code == kExitParse);
    CHECK(run({"solve", tmp("two.json"), "--algo", "nope"}).code != kExitOk);
    CHECK(run({}).code != kExitOk);
    // A declared spacing this small leaves no positive region width, and 30
    // points are too many for the fallback oracle.
    std::vector<PoincarePoint> pts;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 5; ++j) pts.emplace_back(0.1 * i - 0.25, 0.1 * j - 0.2);
    write_file(tmp("dense.json"), instance_to_json(Instance(pts, 1e-10)));
    CHECK(run({"solve", tmp("dense.json")}).code == kExitDensity);
}

TEST_CASE("solver flags are accepted") {
    write_file(tmp("f.json"), instance_to_json(gen_random_alpha_spaced(8, 1.5, 8)));
    const Run base = run({"solve", tmp("f.json")});
    REQUIRE(base.code == kExitOk);
    const double len = result_from_json(base.out).length;
    for (const auto& flag : {"--no-prune-crossing", "--no-prune-reroute", "--prune-matchings", "--parallel"}) {
        const Run r = run({"solve", tmp("f.json"), flag, "--threshold-t", "4", "--epsilon", "1e-10"});
        REQUIRE(r.code == kExitOk);
        CHECK(result_from_json(r.out).length == doctest::Approx(len).epsilon(1e-9));
    }
}

TEST_CASE("environment epsilon") {
    const double old = geometry_epsilon();
    ::setenv("HYPERTSP_EPS", "1e-8", 1);
    CHECK(run({"gen", "ngon", "--n", "5", "--side", "1"}).code == kExitOk);
    CHECK(geometry_epsilon() == 1e-8);
    ::setenv("HYPERTSP_EPS", "abc", 1);
    CHECK(run({"gen", "ngon", "--n", "5", "--side", "1"}).code == kExitParse);
    ::unsetenv("HYPERTSP_EPS");
    set_geometry_epsilon(old);
}

TEST_CASE("bench emits one row per size and algorithm") {
    const Run r = run({"bench", "--n", "6,8,10", "--algos", "dnc,heldkarp", "--seed", "3"});
    REQUIRE(r.code == kExitOk);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "n,alpha,algo,nodes,time_ms");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        if (line.find("heldkarp") != std::string::npos && line.rfind("10,", 0) == 0)
            CHECK(line.find(",4608,") != std::string::npos);
    }
    CHECK(rows == 6);
}

TEST_CASE("inspect report") {
    write_file(tmp("oct8.json"), instance_to_json(gen_regular_ngon(8, 2.0 * std::log(8.0))));
    REQUIRE(run({"solve", tmp("oct8.json"), "--algo", "heldkarp", "--out", tmp("oct8_res.json")}).code == kExitOk);
    const Run r = run({"inspect", tmp("oct8.json"), "--tour", tmp("oct8_res.json"), "--svg", tmp("oct8.svg")});
    REQUIRE(r.code == kExitOk);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["balanced"] == true);
    CHECK(doc["side_counts"]["positive"] == 4);
    CHECK(doc["side_counts"]["negative"] == 4);
    CHECK(doc["region_count_below_n_in"] == true);
    const auto& cls = doc["segment_classes"];
    int total = 0;
    for (const auto& [k, v] : cls.items()) total += v.get<int>();
    CHECK(total == 8);
    CHECK(fs::exists(tmp("oct8.svg")));
}

TEST_CASE("separator SVG matches golden file") {
    const Instance oct = gen_regular_ngon(8, 2.0 * std::log(8.0));
    const SeparatorRegion region = build_region(oct.points(), oct.alpha());
    const Tour tour{{0, 1, 2, 3, 4, 5, 6, 7}};
    const std::string svg = separator_svg(oct, region, tour);
    const std::string golden = std::string(HYPERTSP_TEST_DATA) + "/octagon_separator.svg";
    if (std::getenv("HYPERTSP_UPDATE_GOLDEN")) write_file(golden, svg);
    CHECK(svg == read_file(golden));
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("class=\"region\"") != std::string::npos);
}
