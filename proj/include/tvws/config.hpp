// Key-value configuration files.
//
//     # comment
//     tx_power_dbm = 18
//     enb = 2.0 3.5          (repeatable; order is eNB index order)
//     cpe = 0 2.4 3.9        (repeatable; serving eNB index, x km, y km)
//
// Keys are case-sensitive. Values run to end of line; trailing '#' comments
// are stripped.

#ifndef TVWS_CONFIG_HPP
#define TVWS_CONFIG_HPP

#include "tvws/model.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tvws {

class KeyValueFile
{
  public:
    static KeyValueFile parse(std::istream& in, std::string source = "<input>");
    static KeyValueFile load(const std::filesystem::path& path);

    const std::string& source() const { return source_; }
    bool has(const std::string& key) const;

    /// Last value for `key`; throws ValidationError naming the key if absent.
    std::string get(const std::string& key) const;
    double get_double(const std::string& key) const;
    long long get_int(const std::string& key) const;
    std::optional<double> find_double(const std::string& key) const;
    std::optional<long long> find_int(const std::string& key) const;

    /// Every value of a repeated key, in file order.
    std::vector<std::string> get_all(const std::string& key) const;

    /// Whitespace- or comma-separated numbers from one value.
    std::vector<double> get_doubles(const std::string& key) const;

  private:
    std::string source_;
    std::vector<std::pair<std::string, std::string>> entries_;
};

std::vector<double> parse_number_list(const std::string& text, const std::string& what);
double parse_number(const std::string& text, const std::string& what);

/// All nine radio keys are required:
/// tx_power_dbm, tx_gain_db, rx_gain_db, cable_loss_db, noise_figure_db,
/// tx_height_m, rx_height_m, center_freq_mhz, rx_sensitivity_dbm.
RadioParams read_radio(const KeyValueFile& kv);

/// Optional keys num_channels (4), channel_bandwidth_hz (5e6),
/// channel_center_freqs_mhz (contiguous from 500 MHz).
ChannelPlan read_plan(const KeyValueFile& kv);

/// Radio keys plus area_km, repeated `enb = x y` and `cpe = k x y`.
Topology read_topology(const KeyValueFile& kv);

struct TopologyFile
{
    Topology topology;
    ChannelPlan plan;
    double threshold_km = 4.0;
};

TopologyFile load_topology(const std::filesystem::path& path);
std::string format_topology(const Topology& t, const ChannelPlan& plan, double threshold_km);

} // namespace tvws

#endif
