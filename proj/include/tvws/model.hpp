// Domain types shared by every module: radio parameters, channel plan,
// deployment topology, the protocol-model interference matrix, and the
// channel/mode allocation produced by the spectrum manager.

#ifndef TVWS_MODEL_HPP
#define TVWS_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace tvws {

/// Input rejected by a contract check (bad config, bad topology, bad
/// precondition). The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// File could not be read or written. The CLI maps this to exit code 2.
class IoError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

struct Position
{
    double x_km = 0.0;
    double y_km = 0.0;

    friend bool operator==(const Position&, const Position&) = default;
};

double distance_km(const Position& a, const Position& b);

/// Per-site link-budget parameters. Defaults are the rural TVWS values
/// (18 dBm eNB, 30 m mast, 5 m CPE, 500 MHz).
struct RadioParams
{
    double tx_power_dbm = 18.0;
    double tx_gain_db = 10.0;
    double rx_gain_db = 0.0;
    double cable_loss_db = 2.0;
    double noise_figure_db = 7.0;
    double tx_height_m = 30.0;
    double rx_height_m = 5.0;
    double center_freq_mhz = 500.0;
    double rx_sensitivity_dbm = -101.0;

    friend bool operator==(const RadioParams&, const RadioParams&) = default;
};

/// Returns one message per violated invariant; empty when valid.
std::vector<std::string> check_radio(const RadioParams& radio);

struct ChannelPlan
{
    int num_channels = 4;
    double channel_bandwidth_hz = 5e6;
    std::vector<double> channel_center_freqs_mhz{502.5, 507.5, 512.5, 517.5};

    /// `count` adjacent channels of `bandwidth_hz` starting at `lower_edge_mhz`.
    static ChannelPlan contiguous(int count, double bandwidth_hz, double lower_edge_mhz);

    double total_bandwidth_hz() const { return num_channels * channel_bandwidth_hz; }
};

std::vector<std::string> check_plan(const ChannelPlan& plan);

struct Topology
{
    double area_km = 10.0;
    std::vector<Position> enb_positions;
    /// cpe_positions[k] lists the CPEs served by eNB k.
    std::vector<std::vector<Position>> cpe_positions;
    RadioParams radio;

    std::size_t num_enbs() const { return enb_positions.size(); }
};

/// Binary symmetric K x K matrix with zero diagonal. Construction checks all
/// three properties and throws ValidationError otherwise.
class InterferenceMatrix
{
  public:
    InterferenceMatrix() = default;
    InterferenceMatrix(std::size_t size, std::vector<std::uint8_t> entries, double threshold_km);

    std::size_t size() const { return size_; }
    double threshold_km() const { return threshold_km_; }
    bool interferes(std::size_t k, std::size_t j) const { return entries_[k * size_ + j] != 0; }
    const std::vector<std::uint8_t>& entries() const { return entries_; }

    friend bool operator==(const InterferenceMatrix&, const InterferenceMatrix&) = default;

  private:
    std::size_t size_ = 0;
    std::vector<std::uint8_t> entries_;
    double threshold_km_ = 0.0;
};

enum class ChannelMode : std::uint8_t
{
    Unassigned,
    Dedicated,
    Shared,
};

/// The (A, B) pair: A[k][m] = channel m assigned to eNB k, B[k][m] = that
/// assignment is shared. Stored as one mode per cell, so B implies A by
/// construction; from_matrices() checks it for externally supplied data.
class Allocation
{
  public:
    Allocation() = default;
    Allocation(std::size_t num_enbs, std::size_t num_channels);

    static Allocation from_matrices(const std::vector<std::vector<int>>& channel_matrix,
                                    const std::vector<std::vector<int>>& mode_matrix);

    std::size_t num_enbs() const { return num_enbs_; }
    std::size_t num_channels() const { return num_channels_; }

    ChannelMode mode(std::size_t k, std::size_t m) const { return cells_.at(k * num_channels_ + m); }
    bool holds(std::size_t k, std::size_t m) const { return mode(k, m) != ChannelMode::Unassigned; }
    void assign(std::size_t k, std::size_t m, ChannelMode mode);

    std::size_t channel_count(std::size_t k) const;
    std::size_t count(std::size_t k, ChannelMode mode) const;

    std::vector<std::vector<int>> channel_matrix() const;
    std::vector<std::vector<int>> mode_matrix() const;

    friend bool operator==(const Allocation&, const Allocation&) = default;

  private:
    std::size_t num_enbs_ = 0;
    std::size_t num_channels_ = 0;
    std::vector<ChannelMode> cells_;
};

enum class SubAlgorithm
{
    Mdca,
    OdrsCa,
    None,
};

const char* to_string(SubAlgorithm s);

struct ThroughputReport
{
    std::vector<double> per_enb_bps;
    double jfi = 0.0;
    std::vector<double> spectral_efficiency_bps_hz;
    SubAlgorithm sub_algorithm_used = SubAlgorithm::None;
    /// airtime[k][m]: fraction of simulated time eNB k transmitted on channel m.
    std::vector<std::vector<double>> airtime;
};

/// Plain-text matrix formats: one row per eNB, cells separated by a single
/// space. Allocation cells are 0 (unassigned), D (dedicated) or S (shared);
/// interference cells are 0 or 1. Blank lines and '#' comments are skipped on
/// read.
std::string format_allocation(const Allocation& alloc);
Allocation parse_allocation(std::istream& in);
Allocation parse_allocation(const std::string& text);
std::string format_interference(const InterferenceMatrix& c);
InterferenceMatrix parse_interference(std::istream& in, double threshold_km);

/// Checks the deployment assumptions: positions inside the square area, every
/// CPE inside its eNB's coverage radius, and protocol-model degree at most
/// num_channels - 1 for every eNB. Returns one message per violation.
std::vector<std::string> validate_topology(const Topology& t, const ChannelPlan& plan,
                                           double threshold_km);

} // namespace tvws

#endif
