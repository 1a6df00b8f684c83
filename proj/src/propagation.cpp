#include "tvws/propagation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tvws {

namespace {

constexpr double kHataMinKm = 1.0;
constexpr double kHataMaxKm = 20.0;

// Closed form without the distance range check; coverage search and
// interference at long range extrapolate it.
double urban_closed_form(double d_km, double f_mhz, double ht_m, double hr_m)
{
    const double lf = std::log10(f_mhz);
    const double lh = std::log10(ht_m);
    const double a_hr = (1.1 * lf - 0.7) * hr_m - (1.56 * lf - 0.8);
    return 69.55 + 26.16 * lf - 13.82 * lh - a_hr + (44.9 - 6.55 * lh) * std::log10(d_km);
}

double suburban_correction(double f_mhz)
{
    const double l = std::log10(f_mhz / 28.0);
    return 2.0 * l * l + 5.4;
}

double suburban_closed_form(double d_km, const RadioParams& r)
{
    return urban_closed_form(d_km, r.center_freq_mhz, r.tx_height_m, r.rx_height_m) -
           suburban_correction(r.center_freq_mhz);
}

void check_hata_params(double f_mhz, double ht_m, double hr_m)
{
    if (!(f_mhz >= 150.0 && f_mhz <= 1500.0))
        throw std::domain_error("Hata frequency " + std::to_string(f_mhz) + " MHz outside [150, 1500]");
    if (!(ht_m >= 30.0 && ht_m <= 200.0))
        throw std::domain_error("Hata base height " + std::to_string(ht_m) + " m outside [30, 200]");
    if (!(hr_m >= 1.0 && hr_m <= 10.0))
        throw std::domain_error("Hata mobile height " + std::to_string(hr_m) + " m outside [1, 10]");
}

double eirp_minus_losses(const RadioParams& r)
{
    return r.tx_power_dbm + r.tx_gain_db + r.rx_gain_db - r.cable_loss_db;
}

} // namespace

double hata_urban_pl(double d_km, double f_mhz, double ht_m, double hr_m)
{
    if (!(d_km >= kHataMinKm && d_km <= kHataMaxKm))
        throw std::domain_error("Hata distance " + std::to_string(d_km) + " km outside [1, 20]");
    check_hata_params(f_mhz, ht_m, hr_m);
    return urban_closed_form(d_km, f_mhz, ht_m, hr_m);
}

double hata_suburban_pl(double d_km, double f_mhz, double ht_m, double hr_m)
{
    return hata_urban_pl(d_km, f_mhz, ht_m, hr_m) - suburban_correction(f_mhz);
}

double noise_floor_dbm(double bandwidth_hz, double noise_figure_db)
{
    return kThermalNoiseDbmPerHz + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

LinkBudget link_budget(const RadioParams& r, double bandwidth_hz)
{
    LinkBudget lb;
    lb.max_allowed_pl_db = eirp_minus_losses(r) - r.noise_figure_db - r.rx_sensitivity_dbm;
    lb.noise_floor_dbm = noise_floor_dbm(bandwidth_hz, r.noise_figure_db);
    return lb;
}

double coverage_radius(const RadioParams& r)
{
    check_hata_params(r.center_freq_mhz, r.tx_height_m, r.rx_height_m);
    const double target = link_budget(r, 1.0).max_allowed_pl_db;
    if (target < suburban_closed_form(kHataMinKm, r))
        throw ValidationError("coverage below Hata validity floor: max allowed path loss " + std::to_string(target) +
                              " dB is less than the 1 km loss");

    double lo = kHataMinKm;
    double hi = kHataMaxKm;
    while (suburban_closed_form(hi, r) < target) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e6)
            throw ValidationError("coverage radius unbounded for the given link budget");
    }
    while (hi - lo > 1e-4) {
        const double mid = 0.5 * (lo + hi);
        if (suburban_closed_form(mid, r) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double received_power(const RadioParams& r, double d_km)
{
    check_hata_params(r.center_freq_mhz, r.tx_height_m, r.rx_height_m);
    if (!(d_km >= 0.0))
        throw std::domain_error("distance must be non-negative");
    return eirp_minus_losses(r) - suburban_closed_form(std::max(d_km, kHataMinKm), r);
}

double sinr_db(double signal_dbm, std::span<const double> interferer_powers_dbm, double noise_dbm)
{
    double denom = dbm_to_mw(noise_dbm);
    for (double p : interferer_powers_dbm)
        denom += dbm_to_mw(p);
    return mw_to_dbm(dbm_to_mw(signal_dbm) / denom);
}

double link_rate_bps(double sinr, double bandwidth_hz, double cap_bps_hz)
{
    const double linear = std::pow(10.0, sinr / 10.0);
    return bandwidth_hz * std::min(std::log2(1.0 + linear), cap_bps_hz);
}

} // namespace tvws
