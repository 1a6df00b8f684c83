// Hata path loss, link budget, coverage radius and SINR-to-rate mapping.
//
// All distances in km, frequencies in MHz, antenna heights in m, powers in
// dBm and gains/losses in dB.

#ifndef TVWS_PROPAGATION_HPP
#define TVWS_PROPAGATION_HPP

#include "tvws/model.hpp"

#include <cmath>
#include <span>

namespace tvws {

inline constexpr double kThermalNoiseDbmPerHz = -174.0;
inline constexpr double kDefaultSpectralEfficiencyCap = 4.8; // b/s/Hz, 64-QAM ceiling

/// Okumura-Hata urban loss with the small/medium-city mobile antenna
/// correction. Throws std::domain_error outside 1-20 km, 150-1500 MHz,
/// 30-200 m base height or 1-10 m mobile height.
double hata_urban_pl(double d_km, double f_mhz, double ht_m, double hr_m);

/// Urban loss minus 2 (log10(f/28))^2 + 5.4.
double hata_suburban_pl(double d_km, double f_mhz, double ht_m, double hr_m);

struct LinkBudget
{
    double max_allowed_pl_db = 0.0;
    double noise_floor_dbm = 0.0;
};

LinkBudget link_budget(const RadioParams& radio, double bandwidth_hz);

double noise_floor_dbm(double bandwidth_hz, double noise_figure_db);

/// Distance at which suburban loss reaches the link budget's maximum allowed
/// loss, bisected to 1 m. Beyond 20 km the closed form is extrapolated.
/// Throws ValidationError when the budget does not even cover 1 km.
double coverage_radius(const RadioParams& radio);

/// Transmit EIRP minus cable loss minus suburban loss. Distances below 1 km
/// use the 1 km loss; distances beyond 20 km extrapolate the closed form.
double received_power(const RadioParams& radio, double d_km);

double sinr_db(double signal_dbm, std::span<const double> interferer_powers_dbm, double noise_floor_dbm);

/// bandwidth x min(log2(1 + SINR), cap).
double link_rate_bps(double sinr_db, double bandwidth_hz, double cap_bps_hz = kDefaultSpectralEfficiencyCap);

inline double dbm_to_mw(double dbm)
{
    return std::pow(10.0, dbm / 10.0);
}

inline double mw_to_dbm(double mw)
{
    return 10.0 * std::log10(mw);
}

} // namespace tvws

#endif
