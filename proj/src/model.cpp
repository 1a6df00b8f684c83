#include "tvws/model.hpp"

#include "tvws/conflict.hpp"
#include "tvws/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>

namespace tvws {

double distance_km(const Position& a, const Position& b)
{
    return std::hypot(a.x_km - b.x_km, a.y_km - b.y_km);
}

std::vector<std::string> check_radio(const RadioParams& r)
{
    std::vector<std::string> out;
    if (!(r.rx_height_m > 0.0))
        out.emplace_back("rx_height_m must be positive");
    if (!(r.tx_height_m > r.rx_height_m))
        out.emplace_back("tx_height_m must exceed rx_height_m");
    if (!(r.center_freq_mhz >= 150.0 && r.center_freq_mhz <= 1500.0))
        out.emplace_back("center_freq_mhz outside Hata range [150, 1500]");
    if (!(r.cable_loss_db >= 0.0))
        out.emplace_back("cable_loss_db must be >= 0");
    if (!(r.noise_figure_db >= 0.0))
        out.emplace_back("noise_figure_db must be >= 0");
    return out;
}

ChannelPlan ChannelPlan::contiguous(int count, double bandwidth_hz, double lower_edge_mhz)
{
    ChannelPlan plan;
    plan.num_channels = count;
    plan.channel_bandwidth_hz = bandwidth_hz;
    plan.channel_center_freqs_mhz.clear();
    const double bw_mhz = bandwidth_hz / 1e6;
    for (int m = 0; m < count; ++m)
        plan.channel_center_freqs_mhz.push_back(lower_edge_mhz + (m + 0.5) * bw_mhz);
    return plan;
}

std::vector<std::string> check_plan(const ChannelPlan& plan)
{
    std::vector<std::string> out;
    if (plan.num_channels < 1)
        out.emplace_back("num_channels must be >= 1");
    if (!(plan.channel_bandwidth_hz > 0.0))
        out.emplace_back("channel_bandwidth_hz must be positive");
    if (static_cast<int>(plan.channel_center_freqs_mhz.size()) != plan.num_channels)
        out.emplace_back("channel_center_freqs_mhz must list num_channels entries");

    // Orthogonal: sorted centres at least one bandwidth apart.
    auto centres = plan.channel_center_freqs_mhz;
    std::sort(centres.begin(), centres.end());
    const double bw_mhz = plan.channel_bandwidth_hz / 1e6;
    for (std::size_t i = 1; i < centres.size(); ++i) {
        if (centres[i] - centres[i - 1] < bw_mhz - 1e-9) {
            out.emplace_back("channels overlap in frequency");
            break;
        }
    }
    return out;
}

InterferenceMatrix::InterferenceMatrix(std::size_t size, std::vector<std::uint8_t> entries, double threshold_km)
    : size_(size), entries_(std::move(entries)), threshold_km_(threshold_km)
{
    if (entries_.size() != size_ * size_)
        throw ValidationError("interference matrix must have K*K entries");
    for (std::size_t k = 0; k < size_; ++k) {
        if (entries_[k * size_ + k] != 0)
            throw ValidationError("interference matrix diagonal must be zero");
        for (std::size_t j = 0; j < size_; ++j) {
            const auto v = entries_[k * size_ + j];
            if (v > 1)
                throw ValidationError("interference matrix entries must be 0 or 1");
            if (v != entries_[j * size_ + k])
                throw ValidationError("interference matrix must be symmetric");
        }
    }
}

Allocation::Allocation(std::size_t num_enbs, std::size_t num_channels)
    : num_enbs_(num_enbs), num_channels_(num_channels), cells_(num_enbs * num_channels, ChannelMode::Unassigned)
{
}

Allocation Allocation::from_matrices(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b)
{
    if (a.size() != b.size())
        throw ValidationError("channel and mode matrices differ in row count");
    const std::size_t m = a.empty() ? 0 : a.front().size();
    Allocation out(a.size(), m);
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k].size() != m || b[k].size() != m)
            throw ValidationError("allocation rows must all have the same length");
        for (std::size_t c = 0; c < m; ++c) {
            const int av = a[k][c];
            const int bv = b[k][c];
            if ((av != 0 && av != 1) || (bv != 0 && bv != 1))
                throw ValidationError("allocation matrices must be binary");
            if (bv == 1 && av == 0)
                throw ValidationError("mode matrix marks a channel shared that is not assigned");
            if (av == 1)
                out.assign(k, c, bv == 1 ? ChannelMode::Shared : ChannelMode::Dedicated);
        }
    }
    return out;
}

void Allocation::assign(std::size_t k, std::size_t m, ChannelMode mode)
{
    cells_.at(k * num_channels_ + m) = mode;
}

std::size_t Allocation::channel_count(std::size_t k) const
{
    return num_channels_ - count(k, ChannelMode::Unassigned);
}

std::size_t Allocation::count(std::size_t k, ChannelMode mode) const
{
    std::size_t n = 0;
    for (std::size_t m = 0; m < num_channels_; ++m)
        n += this->mode(k, m) == mode ? 1 : 0;
    return n;
}

std::vector<std::vector<int>> Allocation::channel_matrix() const
{
    std::vector<std::vector<int>> out(num_enbs_, std::vector<int>(num_channels_, 0));
    for (std::size_t k = 0; k < num_enbs_; ++k)
        for (std::size_t m = 0; m < num_channels_; ++m)
            out[k][m] = holds(k, m) ? 1 : 0;
    return out;
}

std::vector<std::vector<int>> Allocation::mode_matrix() const
{
    std::vector<std::vector<int>> out(num_enbs_, std::vector<int>(num_channels_, 0));
    for (std::size_t k = 0; k < num_enbs_; ++k)
        for (std::size_t m = 0; m < num_channels_; ++m)
            out[k][m] = mode(k, m) == ChannelMode::Shared ? 1 : 0;
    return out;
}

const char* to_string(SubAlgorithm s)
{
    switch (s) {
    case SubAlgorithm::Mdca:
        return "MDCA";
    case SubAlgorithm::OdrsCa:
        return "ODRS_CA";
    case SubAlgorithm::None:
        break;
    }
    return "N/A";
}

namespace {

char mode_char(ChannelMode mode)
{
    switch (mode) {
    case ChannelMode::Dedicated:
        return 'D';
    case ChannelMode::Shared:
        return 'S';
    case ChannelMode::Unassigned:
        break;
    }
    return '0';
}

// Splits the stream into rows of whitespace-separated tokens, skipping blank
// lines and comments.
std::vector<std::vector<std::string>> read_rows(std::istream& in)
{
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> row;
        for (std::string tok; ls >> tok;)
            row.push_back(tok);
        if (!row.empty())
            rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::string format_allocation(const Allocation& alloc)
{
    std::string out;
    for (std::size_t k = 0; k < alloc.num_enbs(); ++k) {
        for (std::size_t m = 0; m < alloc.num_channels(); ++m) {
            if (m > 0)
                out += ' ';
            out += mode_char(alloc.mode(k, m));
        }
        out += '\n';
    }
    return out;
}

Allocation parse_allocation(std::istream& in)
{
    const auto rows = read_rows(in);
    const std::size_t m = rows.empty() ? 0 : rows.front().size();
    Allocation alloc(rows.size(), m);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (rows[k].size() != m)
            throw ValidationError("allocation row " + std::to_string(k) + " has " + std::to_string(rows[k].size()) +
                                  " cells, expected " + std::to_string(m));
        for (std::size_t c = 0; c < m; ++c) {
            const auto& cell = rows[k][c];
            if (cell == "0")
                continue;
            if (cell == "D")
                alloc.assign(k, c, ChannelMode::Dedicated);
            else if (cell == "S")
                alloc.assign(k, c, ChannelMode::Shared);
            else
                throw ValidationError("allocation cell '" + cell + "' is not one of 0, D, S");
        }
    }
    return alloc;
}

Allocation parse_allocation(const std::string& text)
{
    std::istringstream in(text);
    return parse_allocation(in);
}

std::string format_interference(const InterferenceMatrix& c)
{
    std::string out;
    for (std::size_t k = 0; k < c.size(); ++k) {
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (j > 0)
                out += ' ';
            out += c.interferes(k, j) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

InterferenceMatrix parse_interference(std::istream& in, double threshold_km)
{
    const auto rows = read_rows(in);
    const std::size_t k = rows.size();
    std::vector<std::uint8_t> entries;
    entries.reserve(k * k);
    for (const auto& row : rows) {
        if (row.size() != k)
            throw ValidationError("interference matrix must be square");
        for (const auto& cell : row) {
            if (cell != "0" && cell != "1")
                throw ValidationError("interference cell '" + cell + "' is not 0 or 1");
            entries.push_back(cell == "1" ? 1 : 0);
        }
    }
    return InterferenceMatrix(k, std::move(entries), threshold_km);
}

std::vector<std::string> validate_topology(const Topology& t, const ChannelPlan& plan, double threshold_km)
{
    std::vector<std::string> out = check_radio(t.radio);
    const bool radio_ok = out.empty();
    for (auto& msg : check_plan(plan))
        out.push_back(std::move(msg));

    if (t.enb_positions.empty())
        out.emplace_back("topology has no eNBs");
    if (t.cpe_positions.size() != t.enb_positions.size())
        out.emplace_back("cpe lists (" + std::to_string(t.cpe_positions.size()) + ") do not match eNB count (" +
                         std::to_string(t.enb_positions.size()) + ")");

    auto inside = [&](const Position& p) {
        return p.x_km >= 0.0 && p.x_km <= t.area_km && p.y_km >= 0.0 && p.y_km <= t.area_km;
    };
    for (std::size_t k = 0; k < t.enb_positions.size(); ++k) {
        if (!inside(t.enb_positions[k]))
            out.push_back("eNB " + std::to_string(k) + ": position outside area");
    }

    double radius = -1.0;
    if (radio_ok) {
        try {
            radius = coverage_radius(t.radio);
        }
        catch (const ValidationError& e) {
            out.emplace_back(e.what());
        }
    }
    for (std::size_t k = 0; k < t.cpe_positions.size() && k < t.enb_positions.size(); ++k) {
        for (std::size_t i = 0; i < t.cpe_positions[k].size(); ++i) {
            const auto& p = t.cpe_positions[k][i];
            const std::string tag = "CPE " + std::to_string(i) + " of eNB " + std::to_string(k);
            if (!inside(p))
                out.push_back(tag + ": position outside area");
            else if (radius > 0.0 && distance_km(p, t.enb_positions[k]) > radius)
                out.push_back(tag + ": outside coverage radius");
        }
    }

    if (!t.enb_positions.empty() && plan.num_channels >= 1) {
        const auto c = build_interference_matrix(t.enb_positions, threshold_km);
        const auto cap = static_cast<std::size_t>(plan.num_channels);
        for (std::size_t k = 0; k < c.size(); ++k) {
            const auto d = degree(c, k);
            if (d >= cap)
                out.push_back("eNB " + std::to_string(k) + ": degree " + std::to_string(d) + " >= M (" +
                              std::to_string(cap) + ")");
        }
    }
    return out;
}

} // namespace tvws
