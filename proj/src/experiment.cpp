#include "tvws/experiment.hpp"

#include "tvws/conflict.hpp"
#include "tvws/fcca.hpp"
#include "tvws/propagation.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

namespace tvws {

const char* to_string(Scheme s)
{
    switch (s) {
    case Scheme::NoCoex:
        return "NO_COEX";
    case Scheme::FullLbt:
        return "FULL_LBT";
    case Scheme::Fcca:
        break;
    }
    return "FCCA";
}

Scheme parse_scheme(const std::string& name)
{
    for (auto s : {Scheme::NoCoex, Scheme::FullLbt, Scheme::Fcca})
        if (name == to_string(s))
            return s;
    throw ValidationError("unknown scheme '" + name + "' (expected NO_COEX, FULL_LBT or FCCA)");
}

void check_sweep(const SweepConfig& cfg)
{
    if (cfg.enb_counts.empty())
        throw ValidationError("enb_counts must not be empty");
    for (auto n : cfg.enb_counts)
        if (n < 1 || n > kMaxEnbs)
            throw ValidationError("enb_counts entries must lie in [1, 64]");
    if (cfg.seeds < 1)
        throw ValidationError("seeds must be >= 1");
    if (cfg.schemes.empty())
        throw ValidationError("at least one scheme is required");
    if (!(cfg.area_km > 0.0) || !(cfg.threshold_km > 0.0))
        throw ValidationError("area_km and threshold_km must be positive");
    if (!(cfg.delta > 0.0 && cfg.delta <= 1.0))
        throw ValidationError("delta must lie in (0, 1]");
    if (cfg.min_cpe_offset_km < 0.0)
        throw ValidationError("min_cpe_offset_km must be >= 0");
    if (auto e = check_radio(cfg.radio); !e.empty())
        throw ValidationError(e.front());
    if (auto e = check_plan(cfg.plan); !e.empty())
        throw ValidationError(e.front());
    check_mac(cfg.mac);
}

SweepConfig read_sweep_config(const KeyValueFile& kv)
{
    SweepConfig cfg;
    cfg.radio = read_radio(kv);
    cfg.plan = read_plan(kv);
    if (kv.has("enb_counts")) {
        cfg.enb_counts.clear();
        for (double v : kv.get_doubles("enb_counts")) {
            if (v < 1 || v != std::floor(v))
                throw ValidationError(kv.source() + ": enb_counts must be positive integers");
            cfg.enb_counts.push_back(static_cast<std::size_t>(v));
        }
    }
    if (auto v = kv.find_int("seeds"))
        cfg.seeds = static_cast<std::size_t>(*v);
    if (auto v = kv.find_int("first_seed"))
        cfg.first_seed = static_cast<std::uint64_t>(*v);
    cfg.area_km = kv.find_double("area_km").value_or(cfg.area_km);
    cfg.threshold_km = kv.find_double("threshold_km").value_or(cfg.threshold_km);
    if (auto v = kv.find_int("cpes_per_enb"))
        cfg.cpes_per_enb = static_cast<std::size_t>(*v);
    cfg.min_cpe_offset_km = kv.find_double("min_cpe_offset_km").value_or(cfg.min_cpe_offset_km);
    if (auto v = kv.find_int("max_degree"))
        cfg.max_degree = static_cast<std::size_t>(*v);
    if (auto v = kv.find_int("rejection_budget"))
        cfg.rejection_budget = static_cast<std::uint64_t>(*v);
    if (kv.has("schemes")) {
        cfg.schemes.clear();
        std::string s = kv.get("schemes");
        std::replace(s.begin(), s.end(), ',', ' ');
        std::istringstream in(s);
        for (std::string tok; in >> tok;)
            cfg.schemes.push_back(parse_scheme(tok));
    }
    cfg.delta = kv.find_double("delta").value_or(cfg.delta);
    cfg.mac.slot_us = kv.find_double("slot_us").value_or(cfg.mac.slot_us);
    cfg.mac.txop_ms = kv.find_double("txop_ms").value_or(cfg.mac.txop_ms);
    cfg.mac.sim_time_s = kv.find_double("sim_time_s").value_or(cfg.mac.sim_time_s);
    if (auto v = kv.find_int("contention_window_slots"))
        cfg.mac.contention_window_slots = static_cast<int>(*v);
    if (auto v = kv.find_int("rng_seed"))
        cfg.mac.rng_seed = static_cast<std::uint64_t>(*v);
    cfg.mac.spectral_efficiency_cap =
        kv.find_double("spectral_efficiency_cap").value_or(cfg.mac.spectral_efficiency_cap);
    check_sweep(cfg);
    return cfg;
}

namespace {

std::mt19937_64 topology_rng(std::uint64_t seed, std::size_t n_enb)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(n_enb), 0x70706f74u};
    return std::mt19937_64(seq);
}

// Degree of every eNB stays within `cap`.
bool sparse_enough(const std::vector<Position>& enbs, double threshold_km, std::size_t cap)
{
    std::vector<std::size_t> deg(enbs.size(), 0);
    for (std::size_t k = 0; k < enbs.size(); ++k) {
        for (std::size_t j = k + 1; j < enbs.size(); ++j) {
            if (distance_km(enbs[k], enbs[j]) < threshold_km) {
                if (++deg[k] > cap || ++deg[j] > cap)
                    return false;
            }
        }
    }
    return true;
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t seed, std::uint64_t n_enb)
{
    // splitmix64 finaliser over the combined inputs
    std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (seed + 1) + 0xbf58476d1ce4e5b9ull * (n_enb + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

SweepRecord make_record(std::uint64_t seed, std::size_t n, Scheme scheme, const std::vector<double>& per_enb_bps,
                        double total_bandwidth_hz, SubAlgorithm chosen)
{
    SweepRecord r;
    r.seed = seed;
    r.enb_count = n;
    r.scheme = scheme;
    double sum = 0.0;
    for (double v : per_enb_bps)
        sum += v;
    const double mean = sum / static_cast<double>(per_enb_bps.size());
    r.mean_throughput_mbps = mean / 1e6;
    r.mean_spectral_efficiency = mean / total_bandwidth_hz;
    r.jfi = jfi(per_enb_bps);
    r.chosen_sub_algorithm = chosen;
    return r;
}

std::string shortest(double v)
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

} // namespace

Topology generate_topology(std::uint64_t seed, std::size_t n_enb, const SweepConfig& cfg)
{
    if (n_enb < 1)
        throw ValidationError("at least one eNB is required");
    auto rng = topology_rng(seed, n_enb);
    std::uniform_real_distribution<double> coord(0.0, cfg.area_km);
    const std::size_t cap = std::min(cfg.max_degree, static_cast<std::size_t>(cfg.plan.num_channels - 1));

    Topology t;
    t.area_km = cfg.area_km;
    t.radio = cfg.radio;
    t.enb_positions.resize(n_enb);

    bool accepted = false;
    for (std::uint64_t attempt = 0; attempt < cfg.rejection_budget && !accepted; ++attempt) {
        for (auto& p : t.enb_positions)
            p = {coord(rng), coord(rng)};
        accepted = sparse_enough(t.enb_positions, cfg.threshold_km, cap);
    }
    if (!accepted)
        throw ValidationError("rejection budget of " + std::to_string(cfg.rejection_budget) +
                              " exhausted placing " + std::to_string(n_enb) + " eNBs with degree <= " +
                              std::to_string(cap));

    const double radius = coverage_radius(cfg.radio);
    const double r0 = std::min(cfg.min_cpe_offset_km, radius);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    t.cpe_positions.assign(n_enb, {});
    for (std::size_t k = 0; k < n_enb; ++k) {
        const auto& enb = t.enb_positions[k];
        while (t.cpe_positions[k].size() < cfg.cpes_per_enb) {
            // Uniform over the annulus r0 <= r <= radius.
            const double r = std::sqrt(r0 * r0 + unit(rng) * (radius * radius - r0 * r0));
            const double theta = 2.0 * std::numbers::pi * unit(rng);
            const Position p{enb.x_km + r * std::cos(theta), enb.y_km + r * std::sin(theta)};
            if (p.x_km >= 0.0 && p.x_km <= cfg.area_km && p.y_km >= 0.0 && p.y_km <= cfg.area_km)
                t.cpe_positions[k].push_back(p);
        }
    }
    return t;
}

std::vector<SweepRecord> run_item(std::uint64_t seed, std::size_t n_enb, const SweepConfig& cfg)
{
    const auto topo = generate_topology(seed, n_enb, cfg);
    const auto c = build_interference_matrix(topo.enb_positions, cfg.threshold_km);
    MacConfig mac = cfg.mac;
    mac.rng_seed = mix_seed(cfg.mac.rng_seed, seed, n_enb);
    const double band = cfg.plan.total_bandwidth_hz();

    std::vector<SweepRecord> out;
    for (auto scheme : cfg.schemes) {
        switch (scheme) {
        case Scheme::NoCoex: {
            const auto rep = baseline_no_coexistence(topo, cfg.plan, c, mac);
            out.push_back(make_record(seed, n_enb, scheme, rep.per_enb_bps, band, SubAlgorithm::None));
            break;
        }
        case Scheme::FullLbt: {
            const auto rep = baseline_full_lbt(topo, cfg.plan, c, mac);
            out.push_back(make_record(seed, n_enb, scheme, rep.per_enb_bps, band, SubAlgorithm::None));
            break;
        }
        case Scheme::Fcca: {
            FccaConfig fc{cfg.delta, static_cast<std::size_t>(cfg.plan.num_channels)};
            const auto outcome = fcca(c, fc, [&](const Allocation& a) {
                return evaluate(topo, cfg.plan, a, c, mac).per_enb_bps;
            });
            const auto& chosen = outcome.chosen_sub_algorithm == SubAlgorithm::Mdca ? outcome.candidate_mdca
                                                                                    : outcome.candidate_odrs;
            out.push_back(
                make_record(seed, n_enb, scheme, chosen.throughput, band, outcome.chosen_sub_algorithm));
            break;
        }
        }
    }
    return out;
}

SweepResult run_sweep(const SweepConfig& cfg, unsigned jobs, const ProgressFn& progress)
{
    check_sweep(cfg);
    struct Item
    {
        std::size_t n;
        std::uint64_t seed;
    };
    std::vector<Item> items;
    for (auto n : cfg.enb_counts)
        for (std::size_t s = 0; s < cfg.seeds; ++s)
            items.push_back({n, cfg.first_seed + s});

    struct Slot
    {
        std::vector<SweepRecord> records;
        std::optional<std::string> error;
    };
    std::vector<Slot> slots(items.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    std::mutex progress_mutex;

    auto worker = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) {
            try {
                slots[i].records = run_item(items[i].seed, items[i].n, cfg);
            }
            catch (const std::exception& e) {
                slots[i].error = e.what();
            }
            const auto d = ++done;
            if (progress) {
                std::lock_guard lock(progress_mutex);
                progress(d, items.size());
            }
        }
    };

    const unsigned width = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));
    {
        std::vector<std::jthread> pool;
        for (unsigned j = 1; j < width; ++j)
            pool.emplace_back(worker);
        worker();
    }

    SweepResult result;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (slots[i].error)
            result.failures.push_back({items[i].seed, items[i].n, *slots[i].error});
        else
            result.records.insert(result.records.end(), slots[i].records.begin(), slots[i].records.end());
    }
    return result;
}

std::vector<SummaryRow> summarize(const std::vector<SweepRecord>& records)
{
    std::map<std::pair<std::size_t, int>, std::vector<const SweepRecord*>> groups;
    for (const auto& r : records)
        groups[{r.enb_count, static_cast<int>(r.scheme)}].push_back(&r);

    auto stats = [](const std::vector<const SweepRecord*>& g, double SweepRecord::*field) {
        const double n = static_cast<double>(g.size());
        double sum = 0.0;
        for (const auto* r : g)
            sum += r->*field;
        const double mean = sum / n;
        if (g.size() < 2)
            return std::pair{mean, 0.0};
        double ss = 0.0;
        for (const auto* r : g)
            ss += (r->*field - mean) * (r->*field - mean);
        return std::pair{mean, 1.96 * std::sqrt(ss / (n - 1.0)) / std::sqrt(n)};
    };

    std::vector<SummaryRow> rows;
    for (const auto& [key, g] : groups) {
        SummaryRow row;
        row.enb_count = key.first;
        row.scheme = static_cast<Scheme>(key.second);
        row.samples = g.size();
        std::tie(row.mean_spectral_efficiency, row.ci95_spectral_efficiency) =
            stats(g, &SweepRecord::mean_spectral_efficiency);
        std::tie(row.mean_throughput_mbps, row.ci95_throughput_mbps) = stats(g, &SweepRecord::mean_throughput_mbps);
        std::tie(row.mean_jfi, row.ci95_jfi) = stats(g, &SweepRecord::jfi);
        std::size_t mdca = 0;
        std::size_t odrs = 0;
        for (const auto* r : g) {
            mdca += r->chosen_sub_algorithm == SubAlgorithm::Mdca ? 1 : 0;
            odrs += r->chosen_sub_algorithm == SubAlgorithm::OdrsCa ? 1 : 0;
        }
        row.mdca_fraction = static_cast<double>(mdca) / static_cast<double>(g.size());
        row.odrs_fraction = static_cast<double>(odrs) / static_cast<double>(g.size());
        rows.push_back(row);
    }
    return rows;
}

namespace {

constexpr const char* kSweepHeader =
    "seed,enb_count,scheme,mean_spectral_efficiency,mean_throughput_mbps,jfi,chosen_sub_algorithm";

std::vector<std::string> split_csv(const std::string& line)
{
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ','))
        out.push_back(cell);
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    return out;
}

SubAlgorithm parse_sub_algorithm(const std::string& s)
{
    if (s == "MDCA")
        return SubAlgorithm::Mdca;
    if (s == "ODRS_CA")
        return SubAlgorithm::OdrsCa;
    if (s == "N/A")
        return SubAlgorithm::None;
    throw ValidationError("unknown sub-algorithm '" + s + "'");
}

} // namespace

std::string sweep_csv(const std::vector<SweepRecord>& records)
{
    std::string out = kSweepHeader;
    out += '\n';
    for (const auto& r : records) {
        out += std::to_string(r.seed) + ',' + std::to_string(r.enb_count) + ',' + to_string(r.scheme) + ',' +
               shortest(r.mean_spectral_efficiency) + ',' + shortest(r.mean_throughput_mbps) + ',' +
               shortest(r.jfi) + ',' + to_string(r.chosen_sub_algorithm) + '\n';
    }
    return out;
}

std::vector<SweepRecord> parse_sweep_csv(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kSweepHeader)
        throw ValidationError("sweep CSV header mismatch");
    std::vector<SweepRecord> out;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const auto cells = split_csv(line);
        if (cells.size() != 7)
            throw ValidationError("sweep CSV row has " + std::to_string(cells.size()) + " cells: " + line);
        SweepRecord r;
        r.seed = static_cast<std::uint64_t>(std::stoull(cells[0]));
        r.enb_count = static_cast<std::size_t>(std::stoull(cells[1]));
        r.scheme = parse_scheme(cells[2]);
        r.mean_spectral_efficiency = parse_number(cells[3], "mean_spectral_efficiency");
        r.mean_throughput_mbps = parse_number(cells[4], "mean_throughput_mbps");
        r.jfi = parse_number(cells[5], "jfi");
        r.chosen_sub_algorithm = parse_sub_algorithm(cells[6]);
        out.push_back(r);
    }
    return out;
}

std::string summary_csv(const std::vector<SummaryRow>& rows)
{
    std::string out = "enb_count,scheme,samples,mean_spectral_efficiency,ci95_spectral_efficiency,"
                      "mean_throughput_mbps,ci95_throughput_mbps,mean_jfi,ci95_jfi,mdca_fraction,odrs_fraction\n";
    for (const auto& r : rows) {
        out += std::to_string(r.enb_count) + ',' + to_string(r.scheme) + ',' + std::to_string(r.samples) + ',' +
               shortest(r.mean_spectral_efficiency) + ',' + shortest(r.ci95_spectral_efficiency) + ',' +
               shortest(r.mean_throughput_mbps) + ',' + shortest(r.ci95_throughput_mbps) + ',' +
               shortest(r.mean_jfi) + ',' + shortest(r.ci95_jfi) + ',' + shortest(r.mdca_fraction) + ',' +
               shortest(r.odrs_fraction) + '\n';
    }
    return out;
}

std::string line_chart_svg(const std::vector<SummaryRow>& rows, Metric metric)
{
    constexpr double width = 640, height = 420;
    constexpr double left = 70, right = 150, top = 40, bottom = 60;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    auto value = [metric](const SummaryRow& r) {
        switch (metric) {
        case Metric::SpectralEfficiency:
            return r.mean_spectral_efficiency;
        case Metric::Throughput:
            return r.mean_throughput_mbps;
        case Metric::Fairness:
            break;
        }
        return r.mean_jfi;
    };
    const char* title = metric == Metric::SpectralEfficiency ? "Spectral efficiency per eNB"
                        : metric == Metric::Throughput       ? "Average throughput per eNB"
                                                             : "Jain's fairness index";
    const char* y_label = metric == Metric::SpectralEfficiency ? "bits/s/Hz"
                          : metric == Metric::Throughput       ? "Mbps"
                                                               : "JFI";

    std::size_t x_min = SIZE_MAX, x_max = 0;
    double y_max = 0.0;
    std::map<int, std::vector<std::pair<std::size_t, double>>> series;
    for (const auto& r : rows) {
        x_min = std::min(x_min, r.enb_count);
        x_max = std::max(x_max, r.enb_count);
        y_max = std::max(y_max, value(r));
        series[static_cast<int>(r.scheme)].emplace_back(r.enb_count, value(r));
    }
    if (rows.empty()) {
        x_min = 0;
        x_max = 1;
    }
    if (metric == Metric::Fairness)
        y_max = 1.0;
    else
        y_max = y_max > 0.0 ? y_max * 1.1 : 1.0;
    const double x_span = x_max > x_min ? static_cast<double>(x_max - x_min) : 1.0;

    auto px = [&](std::size_t x) { return left + plot_w * (static_cast<double>(x - x_min) / x_span); };
    auto py = [&](double y) { return top + plot_h * (1.0 - y / y_max); };

    std::ostringstream svg;
    svg << std::fixed;
    svg.precision(2);
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << left + plot_w / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"16\">" << title << "</text>\n"
        << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w << "\" y2=\""
        << top + plot_h << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + plot_h
        << "\" stroke=\"black\"/>\n";

    for (std::size_t x = x_min; x <= x_max && !rows.empty(); ++x) {
        svg << "<text x=\"" << px(x) << "\" y=\"" << top + plot_h + 18
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << x << "</text>\n";
    }
    for (int i = 0; i <= 5; ++i) {
        const double y = y_max * i / 5.0;
        svg << "<line x1=\"" << left - 4 << "\" y1=\"" << py(y) << "\" x2=\"" << left << "\" y2=\"" << py(y)
            << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << left - 8 << "\" y=\"" << py(y) + 4
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" << y << "</text>\n";
    }
    svg << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 16
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">Number of eNBs</text>\n"
        << "<text x=\"18\" y=\"" << top + plot_h / 2 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"13\" transform=\"rotate(-90 18 " << top + plot_h / 2 << ")\">" << y_label << "</text>\n";

    static constexpr const char* colours[] = {"#d62728", "#1f77b4", "#2ca02c"};
    int legend_row = 0;
    for (const auto& [scheme, points] : series) {
        const char* colour = colours[scheme % 3];
        svg << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < points.size(); ++i)
            svg << (i ? " " : "") << px(points[i].first) << ',' << py(points[i].second);
        svg << "\"/>\n";
        for (const auto& [x, y] : points)
            svg << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"3\" fill=\"" << colour << "\"/>\n";
        const double ly = top + 20.0 * legend_row++;
        svg << "<line x1=\"" << left + plot_w + 15 << "\" y1=\"" << ly << "\" x2=\"" << left + plot_w + 40
            << "\" y2=\"" << ly << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n"
            << "<text x=\"" << left + plot_w + 45 << "\" y=\"" << ly + 4
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << to_string(static_cast<Scheme>(scheme))
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open " + path.string() + " for writing");
    out << content;
    if (!out)
        throw IoError("failed writing " + path.string());
}

} // namespace

void emit_results(const std::vector<SweepRecord>& records, const std::filesystem::path& out_dir)
{
    if (records.empty())
        throw ValidationError("no sweep records to emit");
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

    const auto rows = summarize(records);
    write_file(out_dir / "sweep.csv", sweep_csv(records));
    write_file(out_dir / "summary.csv", summary_csv(rows));
    write_file(out_dir / "spectral_efficiency.svg", line_chart_svg(rows, Metric::SpectralEfficiency));
    write_file(out_dir / "throughput.svg", line_chart_svg(rows, Metric::Throughput));
    write_file(out_dir / "jfi.svg", line_chart_svg(rows, Metric::Fairness));
}

double demand_mbps(double population_per_village, double villages, double rate_mbps, double contention_ratio,
                   double subscribers_divisor)
{
    if (contention_ratio == 0.0 || subscribers_divisor == 0.0)
        throw ValidationError("contention ratio and subscriber divisor must be non-zero");
    if (population_per_village < 0.0 || villages < 0.0 || rate_mbps < 0.0 || contention_ratio < 0.0 ||
        subscribers_divisor < 0.0)
        throw ValidationError("demand inputs must be non-negative");
    return population_per_village * villages * rate_mbps / (contention_ratio * subscribers_divisor);
}

} // namespace tvws
