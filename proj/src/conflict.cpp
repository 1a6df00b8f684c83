#include "tvws/conflict.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tvws {

InterferenceMatrix build_interference_matrix(std::span<const Position> positions, double threshold_km)
{
    const std::size_t n = positions.size();
    std::vector<std::uint8_t> entries(n * n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = k + 1; j < n; ++j) {
            if (distance_km(positions[k], positions[j]) < threshold_km) {
                entries[k * n + j] = 1;
                entries[j * n + k] = 1;
            }
        }
    }
    return InterferenceMatrix(n, std::move(entries), threshold_km);
}

std::vector<std::size_t> neighbor_set(const InterferenceMatrix& c, std::size_t k)
{
    if (k >= c.size())
        throw std::out_of_range("eNB index " + std::to_string(k) + " out of range for " + std::to_string(c.size()) +
                                " eNBs");
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < c.size(); ++j)
        if (c.interferes(k, j))
            out.push_back(j);
    return out;
}

std::size_t degree(const InterferenceMatrix& c, std::size_t k)
{
    return neighbor_set(c, k).size();
}

std::size_t max_degree(const InterferenceMatrix& c)
{
    std::size_t best = 0;
    for (std::size_t k = 0; k < c.size(); ++k)
        best = std::max(best, degree(c, k));
    return best;
}

} // namespace tvws
