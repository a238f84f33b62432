#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "aco/instance.hpp"
#include "aco/rng.hpp"
#include "test_util.hpp"

using namespace aco;

TEST_CASE("euc2d distance on known points") {
    CHECK(euc2d_distance({0, 0}, {3, 4}) == 5);
    CHECK(euc2d_distance({7, 7}, {7, 7}) == 0);
    // floor(sqrt(2) + 0.5) = 1
    CHECK(euc2d_distance({0, 0}, {1, 1}) == 1);
    // rounding goes up past the halfway point: sqrt(0.36+0.36) = 0.848...
    CHECK(euc2d_distance({0, 0}, {0.6, 0.6}) == 1);
}

TEST_CASE("euc2d distance is symmetric on random points") {
    Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        const Point p{rng.uniform01() * 200 - 100, rng.uniform01() * 200 - 100};
        const Point q{rng.uniform01() * 200 - 100, rng.uniform01() * 200 - 100};
        CHECK(euc2d_distance(p, q) == euc2d_distance(q, p));
        CHECK(euc2d_distance(p, q) >= 0);
    }
}

TEST_CASE("distance matrix matches the pairwise metric") {
    TspInstance inst;
    inst.points = {{0, 0}, {3, 4}};
    const DistanceMatrix dm = build_distance_matrix(inst);
    CHECK(dm.at(0, 0) == 0);
    CHECK(dm.at(1, 1) == 0);
    CHECK(dm.at(0, 1) == 5);
    CHECK(dm.at(1, 0) == 5);
}

TEST_CASE("distance matrix on collinear points adds up") {
    TspInstance inst;
    inst.points = {{0, 0}, {1, 0}, {2, 0}};
    const DistanceMatrix dm = build_distance_matrix(inst);
    CHECK(dm.at(0, 2) == 2);
    CHECK(dm.at(0, 2) == dm.at(0, 1) + dm.at(1, 2));
}

TEST_CASE("distance matrix invariants hold for random instances") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const TspInstance inst = random_instance(30, seed);
        const DistanceMatrix dm = build_distance_matrix(inst);
        for (int i = 0; i < dm.size(); ++i) {
            CHECK(dm.at(i, i) == 0);
            for (int j = i + 1; j < dm.size(); ++j) {
                CHECK(dm.at(i, j) == dm.at(j, i));
                CHECK(dm.at(i, j) >= 0);
            }
        }
    }
}

TEST_CASE("tour length of the unit square walk") {
    const DistanceMatrix dm = build_distance_matrix(testutil::square_instance());
    const std::vector<int> order{0, 1, 2, 3};
    CHECK(tour_length(order, dm) == 40);
}

TEST_CASE("tour length of a two-node instance is out and back") {
    TspInstance inst;
    inst.points = {{0, 0}, {3, 4}};
    const DistanceMatrix dm = build_distance_matrix(inst);
    CHECK(tour_length(std::vector<int>{0, 1}, dm) == 10);
}

TEST_CASE("tour length is invariant under order reversal") {
    const TspInstance inst = random_instance(12, 7);
    const DistanceMatrix dm = build_distance_matrix(inst);
    std::vector<int> order(12);
    std::iota(order.begin(), order.end(), 0);
    Rng rng(3);
    for (int round = 0; round < 20; ++round) {
        for (std::size_t i = order.size() - 1; i > 0; --i) {
            std::swap(order[i], order[rng.below(i + 1)]);
        }
        std::vector<int> reversed(order.rbegin(), order.rend());
        CHECK(tour_length(order, dm) == tour_length(reversed, dm));
        CHECK(tour_length(order, dm) >= 0);
    }
}

TEST_CASE("tour length rejects non-permutations") {
    const DistanceMatrix dm = build_distance_matrix(testutil::square_instance());
    CHECK_THROWS_AS(tour_length(std::vector<int>{0, 1, 2, 2}, dm), std::invalid_argument);
    CHECK_THROWS_AS(tour_length(std::vector<int>{0, 1, 2}, dm), std::invalid_argument);
    CHECK_THROWS_AS(tour_length(std::vector<int>{0, 1, 2, 4}, dm), std::invalid_argument);
}

TEST_CASE("tour length is zero only for coincident points") {
    TspInstance inst;
    inst.points = {{5, 5}, {5, 5}, {5, 5}};
    const DistanceMatrix dm = build_distance_matrix(inst);
    CHECK(tour_length(std::vector<int>{0, 1, 2}, dm) == 0);
}

TEST_CASE("random instances are deterministic per seed") {
    const TspInstance a = random_instance(50, 1);
    const TspInstance b = random_instance(50, 1);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].x == b.points[i].x);
        CHECK(a.points[i].y == b.points[i].y);
    }
    const TspInstance c = random_instance(50, 2);
    bool all_equal = true;
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        all_equal = all_equal && a.points[i].x == c.points[i].x && a.points[i].y == c.points[i].y;
    }
    CHECK_FALSE(all_equal);
}

TEST_CASE("random instance coordinates stay in the requested box") {
    const TspInstance inst = random_instance(250, 7, -100.0, 100.0);
    CHECK(inst.size() == 250);
    for (const Point& p : inst.points) {
        CHECK(p.x >= -100.0);
        CHECK(p.x <= 100.0);
        CHECK(p.y >= -100.0);
        CHECK(p.y <= 100.0);
    }
}

TEST_CASE("random instance rejects degenerate requests") {
    CHECK_THROWS_AS(random_instance(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_instance(10, 1, 5.0, 5.0), std::invalid_argument);
}

TEST_CASE("instance validation catches bad depots and sizes") {
    TspInstance inst;
    inst.points = {{0, 0}};
    CHECK_THROWS_AS(inst.validate(), std::invalid_argument);
    inst.points = {{0, 0}, {1, 1}};
    inst.depot = 2;
    CHECK_THROWS_AS(inst.validate(), std::invalid_argument);
    inst.depot = 0;
    CHECK_NOTHROW(inst.validate());
}
