#include "test_support.hpp"

#include "tvws/conflict.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace tvws;

namespace {

std::vector<Position> random_positions(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_real_distribution<double> u(0.0, 10.0);
    std::vector<Position> out(n);
    for (auto& p : out)
        p = {u(rng), u(rng)};
    return out;
}

} // namespace

TEST_CASE("threshold is strict")
{
    const std::vector<Position> close{{0, 0}, {3.9, 0}};
    const std::vector<Position> at{{0, 0}, {4.0, 0}};
    CHECK(build_interference_matrix(close, 4.0).interferes(0, 1));
    CHECK_FALSE(build_interference_matrix(at, 4.0).interferes(0, 1));
}

TEST_CASE("single eNB")
{
    const std::vector<Position> one{{5, 5}};
    const auto c = build_interference_matrix(one, 4.0);
    CHECK(c.size() == 1);
    CHECK(neighbor_set(c, 0).empty());
    CHECK(max_degree(c) == 0);
}

TEST_CASE("path and triangle neighbour sets")
{
    const auto path = build_interference_matrix(tvws::test::line_positions({2, 5, 8}), 4.0);
    CHECK(neighbor_set(path, 0) == std::vector<std::size_t>{1});
    CHECK(neighbor_set(path, 1) == std::vector<std::size_t>{0, 2});
    CHECK(neighbor_set(path, 2) == std::vector<std::size_t>{1});
    CHECK(degree(path, 1) == 2);

    const std::vector<Position> tri{{3, 3}, {6, 3}, {4.5, 5.5}};
    const auto c = build_interference_matrix(tri, 4.0);
    CHECK(neighbor_set(c, 0) == std::vector<std::size_t>{1, 2});
    CHECK(max_degree(c) == 2);
    CHECK_THROWS_AS(neighbor_set(c, 3), std::out_of_range);
}

TEST_CASE("matrix properties on random layouts")
{
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 200; ++iter) {
        const auto pos = random_positions(rng, 1 + rng() % 12);
        const auto c = build_interference_matrix(pos, 4.0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            REQUIRE_FALSE(c.interferes(k, k));
            for (std::size_t j = 0; j < c.size(); ++j) {
                REQUIRE(c.interferes(k, j) == c.interferes(j, k));
                if (k != j)
                    REQUIRE(c.interferes(k, j) == (distance_km(pos[k], pos[j]) < 4.0));
            }
        }
        // Raising the threshold only adds edges.
        const auto wider = build_interference_matrix(pos, 5.0);
        for (std::size_t i = 0; i < c.entries().size(); ++i)
            REQUIRE(c.entries()[i] <= wider.entries()[i]);
        // A zero threshold gives an edgeless graph.
        REQUIRE(max_degree(build_interference_matrix(pos, 0.0)) == 0);
    }
}
