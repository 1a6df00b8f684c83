// Protocol-model conflict graph: two eNBs interfere iff they are strictly
// closer than the threshold distance.

#ifndef TVWS_CONFLICT_HPP
#define TVWS_CONFLICT_HPP

#include "tvws/model.hpp"

#include <span>
#include <vector>

namespace tvws {

inline constexpr double kDefaultThresholdKm = 4.0;

InterferenceMatrix build_interference_matrix(std::span<const Position> positions, double threshold_km);

/// Ascending indices j with c[k][j] = 1. Throws std::out_of_range for k >= K.
std::vector<std::size_t> neighbor_set(const InterferenceMatrix& c, std::size_t k);

std::size_t degree(const InterferenceMatrix& c, std::size_t k);
std::size_t max_degree(const InterferenceMatrix& c);

} // namespace tvws

#endif
