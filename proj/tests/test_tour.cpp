#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypertsp/instances.hpp"
#include "hypertsp/tour.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace hypertsp;

namespace {

Instance square() {
    return Instance({{0.3, 0.3}, {-0.3, 0.3}, {-0.3, -0.3}, {0.3, -0.3}}, 0.5);
}

} // namespace

TEST_CASE("edges are normalized") {
    const Edge e(5, 2);
    CHECK(e.u == 2);
    CHECK(e.v == 5);
    CHECK(Edge(2, 5) == e);
    CHECK(Edge(1, 9) < Edge(2, 3));
    CHECK_THROWS(Edge(3, 3));
}

TEST_CASE("instance validation and distance cache") {
    const Instance sq = square();
    CHECK(sq.size() == 4);
    CHECK(sq.distance(0, 2) == doctest::Approx(oracle::distance(sq.point(0).z(), sq.point(2).z())));
    CHECK(sq.distance(1, 1) == 0.0);
    CHECK_THROWS_AS(Instance({{0.0, 0.0}, {0.01, 0.0}}, 1.0), DomainError);
    CHECK_THROWS_AS(Instance({}, 1.0), DomainError);
    CHECK_THROWS_AS(Instance({{0.0, 0.0}}, 0.0), DomainError);
    CHECK_NOTHROW(Instance::unvalidated({{0.0, 0.0}, {0.01, 0.0}}, 1.0));
    CHECK(min_spacing(sq) == doctest::Approx(sq.distance(0, 1)));
}

TEST_CASE("tour helpers") {
    const Instance sq = square();
    const Tour t{{2, 3, 0, 1}};
    CHECK(is_valid_tour(t, 4));
    CHECK_FALSE(is_valid_tour(Tour{{0, 1, 1, 2}}, 4));
    CHECK_FALSE(is_valid_tour(Tour{{0, 1, 2}}, 4));
    CHECK(canonical_tour(t).order == std::vector<Index>{0, 1, 2, 3});
    CHECK(canonical_tour(Tour{{0, 3, 2, 1}}).order == std::vector<Index>{0, 1, 2, 3});
    CHECK(tour_length(t, sq) == doctest::Approx(4.0 * sq.distance(0, 1)));
    CHECK(tour_edges(t) == SegmentSet{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
    CHECK(tour_is_noncrossing(t, sq));
    CHECK_FALSE(tour_is_noncrossing(Tour{{0, 2, 1, 3}}, sq));
}

TEST_CASE("collinear overlap counts as crossing") {
    const Instance line({{-0.6, 0.0}, {-0.2, 0.0}, {0.2, 0.0}, {0.6, 0.0}, {0.0, 0.5}}, 0.5);
    CHECK_FALSE(tour_is_noncrossing(Tour{{0, 2, 1, 3, 4}}, line));
    CHECK(tour_is_noncrossing(Tour{{0, 1, 2, 3, 4}}, line));
}

TEST_CASE("path cover problem validation") {
    const Instance sq = square();
    CHECK_NOTHROW(PathCoverProblem(sq, {0, 1, 2, 3}, {0, 1}, {{0, 1}}));
    CHECK_THROWS(PathCoverProblem(sq, {0, 1, 2}, {0, 3}, {{0, 3}}));
    CHECK_THROWS(PathCoverProblem(sq, {0, 1, 2}, {0, 1, 2}, {{0, 1}}));
    CHECK_THROWS(PathCoverProblem(sq, {0, 1, 2, 3}, {0, 1, 2, 3}, {{0, 1}, {1, 2}}));
    CHECK_THROWS(PathCoverProblem(sq, {0, 1, 2, 3}, {0, 1}, {{0, 2}}));
    CHECK_THROWS(PathCoverProblem(sq, {0, 0, 1}, {0, 1}, {{0, 1}}));
    CHECK_THROWS(PathCoverProblem(sq, {0, 9}, {0, 9}, {{0, 9}}));

    const PathCoverProblem prob(sq, {0, 1, 2, 3}, {0, 1, 2, 3}, {{0, 3}, {1, 2}});
    CHECK(is_valid_path_cover(PathCover{{{0, 3}, {1, 2}}}, prob));
    CHECK(is_valid_path_cover(PathCover{{{3, 0}, {2, 1}}}, prob));
    CHECK_FALSE(is_valid_path_cover(PathCover{{{0, 1}, {3, 2}}}, prob));
    CHECK_FALSE(is_valid_path_cover(PathCover{{{0, 3}}}, prob));
    CHECK(path_cover_length(PathCover{{{0, 3}, {1, 2}}}, sq) ==
          doctest::Approx(sq.distance(0, 3) + sq.distance(1, 2)));
}

TEST_CASE("realized paths") {
    const std::vector<Index> B{0, 3, 5, 7};
    const Matching M{{0, 5}, {3, 7}};
    const SegmentSet edges{{0, 1}, {1, 5}, {3, 2}, {2, 7}};
    const auto paths = realized_paths(edges, B, M);
    REQUIRE(paths);
    CHECK((*paths)[0] == std::vector<Index>{0, 1, 5});
    CHECK((*paths)[1] == std::vector<Index>{3, 2, 7});
    CHECK(realizes(edges, B, M));
    CHECK_FALSE(realizes(edges, B, Matching{{0, 3}, {5, 7}}));
    // A detached cycle is not a path cover.
    SegmentSet with_cycle = edges;
    for (Edge e : {Edge{10, 11}, Edge{11, 12}, Edge{10, 12}}) with_cycle.push_back(e);
    CHECK_FALSE(realizes(with_cycle, B, M));
    // Parallel edges between two boundary points form a 2-cycle, not a path.
    CHECK_FALSE(realizes(SegmentSet{{0, 5}, {0, 5}}, std::vector<Index>{0, 5}, Matching{{0, 5}}));
    CHECK(realizes(SegmentSet{{0, 5}}, std::vector<Index>{0, 5}, Matching{{0, 5}}));
    CHECK(realizes(SegmentSet{}, std::vector<Index>{}, Matching{}));
}

TEST_CASE("uncovered split") {
    const Instance inst({{-0.5, 0.3}, {-0.2, 0.4}, {0.3, 0.35}, {-0.4, -0.3}, {0.1, -0.4}, {0.5, -0.2}}, 0.3);
    const HLine axis = HLine::from_ideal_angles(-3.141592653589793, 0.0);
    const std::vector<Index> P{0, 1, 2, 3, 4, 5};
    const std::vector<Index> B{0, 5};
    const SegmentSet S{{2, 4}};
    const SideSplit split = uncovered_split(inst, P, B, S, axis);
    const int up = side_of_line(inst.point(0), axis);
    const auto& Pup = up > 0 ? split.P1 : split.P2;
    const auto& Bup = up > 0 ? split.B1 : split.B2;
    const auto& Pdn = up > 0 ? split.P2 : split.P1;
    const auto& Bdn = up > 0 ? split.B2 : split.B1;
    CHECK(Pup == std::vector<Index>{0, 1, 2});
    CHECK(Bup == std::vector<Index>{0, 2});
    CHECK(Pdn == std::vector<Index>{3, 4, 5});
    CHECK(Bdn == std::vector<Index>{4, 5});
    // A boundary point whose single slot is used disappears.
    const SideSplit used = uncovered_split(inst, P, B, SegmentSet{{0, 3}}, axis);
    CHECK(std::find(used.P1.begin(), used.P1.end(), 0) == used.P1.end());
    CHECK(std::find(used.P2.begin(), used.P2.end(), 0) == used.P2.end());
    CHECK_THROWS(uncovered_split(inst, P, B, SegmentSet{{0, 3}, {0, 4}}, axis));
}
