// Helpers shared by the unit test binaries.

#ifndef TVWS_TEST_SUPPORT_HPP
#define TVWS_TEST_SUPPORT_HPP

#include "tvws/conflict.hpp"
#include "tvws/model.hpp"

#include <random>
#include <string>
#include <vector>

namespace tvws::test {

inline std::string fixture(const std::string& name)
{
    return std::string(TVWS_FIXTURES) + "/" + name;
}

inline std::vector<Position> line_positions(std::initializer_list<double> xs, double y = 5.0)
{
    std::vector<Position> out;
    for (double x : xs)
        out.push_back({x, y});
    return out;
}

inline InterferenceMatrix matrix_from_edges(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> edges)
{
    std::vector<std::uint8_t> e(n * n, 0);
    for (auto [a, b] : edges) {
        e[a * n + b] = 1;
        e[b * n + a] = 1;
    }
    return InterferenceMatrix(n, std::move(e), 4.0);
}

/// Random graph on n vertices with every degree <= max_deg, built by adding
/// random edges that keep the cap.
inline InterferenceMatrix random_capped_graph(std::mt19937_64& rng, std::size_t n, std::size_t max_deg)
{
    std::vector<std::uint8_t> e(n * n, 0);
    std::vector<std::size_t> deg(n, 0);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    const std::size_t tries = n * n;
    for (std::size_t i = 0; i < tries && n > 1; ++i) {
        const auto a = pick(rng);
        const auto b = pick(rng);
        if (a == b || e[a * n + b] || deg[a] >= max_deg || deg[b] >= max_deg)
            continue;
        if (rng() % 2 == 0)
            continue;
        e[a * n + b] = e[b * n + a] = 1;
        ++deg[a];
        ++deg[b];
    }
    return InterferenceMatrix(n, std::move(e), 4.0);
}

/// Topology with eNBs at `enbs` and one CPE per eNB at the given offset.
inline Topology simple_topology(std::vector<Position> enbs, double cpe_dx_km = 1.0, double area_km = 10.0)
{
    Topology t;
    t.area_km = area_km;
    t.enb_positions = std::move(enbs);
    for (const auto& p : t.enb_positions)
        t.cpe_positions.push_back({{p.x_km + cpe_dx_km, p.y_km}});
    return t;
}

} // namespace tvws::test

#endif
