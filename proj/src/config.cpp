#include "tvws/config.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace tvws {

namespace {

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string shortest(double v)
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

} // namespace

double parse_number(const std::string& text, const std::string& what)
{
    const std::string s = trim(text);
    double v = 0.0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    // from_chars rejects a leading '+'.
    if (begin != end && *begin == '+')
        ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end || s.empty())
        throw ValidationError(what + ": '" + s + "' is not a number");
    return v;
}

std::vector<double> parse_number_list(const std::string& text, const std::string& what)
{
    std::string s = text;
    for (auto& ch : s)
        if (ch == ',')
            ch = ' ';
    std::istringstream in(s);
    std::vector<double> out;
    for (std::string tok; in >> tok;)
        out.push_back(parse_number(tok, what));
    return out;
}

KeyValueFile KeyValueFile::parse(std::istream& in, std::string source)
{
    KeyValueFile kv;
    kv.source_ = std::move(source);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ValidationError(kv.source_ + ":" + std::to_string(line_no) + ": expected 'key = value'");
        auto key = trim(line.substr(0, eq));
        if (key.empty())
            throw ValidationError(kv.source_ + ":" + std::to_string(line_no) + ": empty key");
        kv.entries_.emplace_back(std::move(key), trim(line.substr(eq + 1)));
    }
    return kv;
}

KeyValueFile KeyValueFile::load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path.string());
    return parse(in, path.string());
}

bool KeyValueFile::has(const std::string& key) const
{
    for (const auto& [k, v] : entries_)
        if (k == key)
            return true;
    return false;
}

std::string KeyValueFile::get(const std::string& key) const
{
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
        if (it->first == key)
            return it->second;
    throw ValidationError(source_ + ": missing key '" + key + "'");
}

double KeyValueFile::get_double(const std::string& key) const
{
    return parse_number(get(key), source_ + ": key '" + key + "'");
}

long long KeyValueFile::get_int(const std::string& key) const
{
    const double v = get_double(key);
    const auto i = static_cast<long long>(v);
    if (static_cast<double>(i) != v)
        throw ValidationError(source_ + ": key '" + key + "' must be an integer");
    return i;
}

std::optional<double> KeyValueFile::find_double(const std::string& key) const
{
    if (!has(key))
        return std::nullopt;
    return get_double(key);
}

std::optional<long long> KeyValueFile::find_int(const std::string& key) const
{
    if (!has(key))
        return std::nullopt;
    return get_int(key);
}

std::vector<std::string> KeyValueFile::get_all(const std::string& key) const
{
    std::vector<std::string> out;
    for (const auto& [k, v] : entries_)
        if (k == key)
            out.push_back(v);
    return out;
}

std::vector<double> KeyValueFile::get_doubles(const std::string& key) const
{
    return parse_number_list(get(key), source_ + ": key '" + key + "'");
}

RadioParams read_radio(const KeyValueFile& kv)
{
    RadioParams r;
    r.tx_power_dbm = kv.get_double("tx_power_dbm");
    r.tx_gain_db = kv.get_double("tx_gain_db");
    r.rx_gain_db = kv.get_double("rx_gain_db");
    r.cable_loss_db = kv.get_double("cable_loss_db");
    r.noise_figure_db = kv.get_double("noise_figure_db");
    r.tx_height_m = kv.get_double("tx_height_m");
    r.rx_height_m = kv.get_double("rx_height_m");
    r.center_freq_mhz = kv.get_double("center_freq_mhz");
    r.rx_sensitivity_dbm = kv.get_double("rx_sensitivity_dbm");
    if (auto errors = check_radio(r); !errors.empty())
        throw ValidationError(kv.source() + ": " + errors.front());
    return r;
}

ChannelPlan read_plan(const KeyValueFile& kv)
{
    const auto count = static_cast<int>(kv.find_int("num_channels").value_or(4));
    const double bw = kv.find_double("channel_bandwidth_hz").value_or(5e6);
    auto plan = ChannelPlan::contiguous(count, bw, 500.0);
    if (kv.has("channel_center_freqs_mhz"))
        plan.channel_center_freqs_mhz = kv.get_doubles("channel_center_freqs_mhz");
    if (auto errors = check_plan(plan); !errors.empty())
        throw ValidationError(kv.source() + ": " + errors.front());
    return plan;
}

Topology read_topology(const KeyValueFile& kv)
{
    Topology t;
    t.radio = read_radio(kv);
    t.area_km = kv.get_double("area_km");
    for (const auto& v : kv.get_all("enb")) {
        const auto xy = parse_number_list(v, kv.source() + ": enb");
        if (xy.size() != 2)
            throw ValidationError(kv.source() + ": enb needs 'x y', got '" + v + "'");
        t.enb_positions.push_back({xy[0], xy[1]});
    }
    t.cpe_positions.resize(t.enb_positions.size());
    for (const auto& v : kv.get_all("cpe")) {
        const auto kxy = parse_number_list(v, kv.source() + ": cpe");
        if (kxy.size() != 3)
            throw ValidationError(kv.source() + ": cpe needs 'enb x y', got '" + v + "'");
        const auto k = static_cast<std::size_t>(kxy[0]);
        if (kxy[0] < 0 || static_cast<double>(k) != kxy[0] || k >= t.enb_positions.size())
            throw ValidationError(kv.source() + ": cpe refers to unknown eNB '" + v + "'");
        t.cpe_positions[k].push_back({kxy[1], kxy[2]});
    }
    return t;
}

TopologyFile load_topology(const std::filesystem::path& path)
{
    const auto kv = KeyValueFile::load(path);
    TopologyFile f;
    f.topology = read_topology(kv);
    f.plan = read_plan(kv);
    f.threshold_km = kv.find_double("threshold_km").value_or(4.0);
    return f;
}

std::string format_topology(const Topology& t, const ChannelPlan& plan, double threshold_km)
{
    std::ostringstream out;
    const auto& r = t.radio;
    out << "tx_power_dbm = " << shortest(r.tx_power_dbm) << '\n'
        << "tx_gain_db = " << shortest(r.tx_gain_db) << '\n'
        << "rx_gain_db = " << shortest(r.rx_gain_db) << '\n'
        << "cable_loss_db = " << shortest(r.cable_loss_db) << '\n'
        << "noise_figure_db = " << shortest(r.noise_figure_db) << '\n'
        << "tx_height_m = " << shortest(r.tx_height_m) << '\n'
        << "rx_height_m = " << shortest(r.rx_height_m) << '\n'
        << "center_freq_mhz = " << shortest(r.center_freq_mhz) << '\n'
        << "rx_sensitivity_dbm = " << shortest(r.rx_sensitivity_dbm) << '\n'
        << "num_channels = " << plan.num_channels << '\n'
        << "channel_bandwidth_hz = " << shortest(plan.channel_bandwidth_hz) << '\n'
        << "channel_center_freqs_mhz =";
    for (double f : plan.channel_center_freqs_mhz)
        out << ' ' << shortest(f);
    out << '\n'
        << "area_km = " << shortest(t.area_km) << '\n'
        << "threshold_km = " << shortest(threshold_km) << '\n';
    for (const auto& p : t.enb_positions)
        out << "enb = " << shortest(p.x_km) << ' ' << shortest(p.y_km) << '\n';
    for (std::size_t k = 0; k < t.cpe_positions.size(); ++k)
        for (const auto& p : t.cpe_positions[k])
            out << "cpe = " << k << ' ' << shortest(p.x_km) << ' ' << shortest(p.y_km) << '\n';
    return out.str();
}

} // namespace tvws
