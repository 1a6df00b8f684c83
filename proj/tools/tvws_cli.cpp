// tvws: command-line front end for coverage, allocation, simulation, the
// density sweep and the demand calculator.
//
// Exit codes: 0 success, 1 validation error, 2 I/O error, 3 internal error.

#include "tvws/config.hpp"
#include "tvws/conflict.hpp"
#include "tvws/experiment.hpp"
#include "tvws/fcca.hpp"
#include "tvws/macsim.hpp"
#include "tvws/propagation.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;
constexpr int kExitInternal = 3;

struct RadioOverrides
{
    std::optional<double> tx_power_dbm, tx_gain_db, rx_gain_db, cable_loss_db, noise_figure_db, tx_height_m,
        rx_height_m, center_freq_mhz, rx_sensitivity_dbm;

    void add_to(CLI::App* app)
    {
        app->add_option("--tx-power-dbm", tx_power_dbm, "Override transmit power (dBm)");
        app->add_option("--tx-gain-db", tx_gain_db, "Override transmit antenna gain (dB)");
        app->add_option("--rx-gain-db", rx_gain_db, "Override receive antenna gain (dB)");
        app->add_option("--cable-loss-db", cable_loss_db, "Override cable loss (dB)");
        app->add_option("--noise-figure-db", noise_figure_db, "Override receiver noise figure (dB)");
        app->add_option("--tx-height-m", tx_height_m, "Override eNB antenna height (m)");
        app->add_option("--rx-height-m", rx_height_m, "Override CPE antenna height (m)");
        app->add_option("--center-freq-mhz", center_freq_mhz, "Override centre frequency (MHz)");
        app->add_option("--rx-sensitivity-dbm", rx_sensitivity_dbm, "Override receiver sensitivity (dBm)");
    }

    void apply(tvws::RadioParams& r) const
    {
        r.tx_power_dbm = tx_power_dbm.value_or(r.tx_power_dbm);
        r.tx_gain_db = tx_gain_db.value_or(r.tx_gain_db);
        r.rx_gain_db = rx_gain_db.value_or(r.rx_gain_db);
        r.cable_loss_db = cable_loss_db.value_or(r.cable_loss_db);
        r.noise_figure_db = noise_figure_db.value_or(r.noise_figure_db);
        r.tx_height_m = tx_height_m.value_or(r.tx_height_m);
        r.rx_height_m = rx_height_m.value_or(r.rx_height_m);
        r.center_freq_mhz = center_freq_mhz.value_or(r.center_freq_mhz);
        r.rx_sensitivity_dbm = rx_sensitivity_dbm.value_or(r.rx_sensitivity_dbm);
    }
};

struct MacOverrides
{
    std::optional<std::uint64_t> seed;
    std::optional<double> sim_time_s, slot_us, txop_ms;
    std::optional<int> cw;

    void add_to(CLI::App* app)
    {
        app->add_option("--seed", seed, "RNG seed for the LBT backoff draws");
        app->add_option("--sim-time", sim_time_s, "Simulated time in seconds (default 30)");
        app->add_option("--slot-us", slot_us, "Slot time in microseconds (default 9)");
        app->add_option("--txop-ms", txop_ms, "Transmit opportunity in milliseconds (default 10)");
        app->add_option("--cw", cw, "Contention window in slots (default 16)");
    }

    void apply(tvws::MacConfig& m) const
    {
        m.rng_seed = seed.value_or(m.rng_seed);
        m.sim_time_s = sim_time_s.value_or(m.sim_time_s);
        m.slot_us = slot_us.value_or(m.slot_us);
        m.txop_ms = txop_ms.value_or(m.txop_ms);
        m.contention_window_slots = cw.value_or(m.contention_window_slots);
    }
};

std::string fixed(double v, int digits)
{
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << v;
    return s.str();
}

std::string join(const std::vector<double>& v, int digits)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? ", " : "") + fixed(v[i], digits);
    return out;
}

void write_text(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw tvws::IoError("cannot open " + path.string() + " for writing");
    out << text;
    if (!out)
        throw tvws::IoError("failed writing " + path.string());
}

tvws::TopologyFile load_valid_topology(const std::filesystem::path& path)
{
    auto tf = tvws::load_topology(path);
    const auto violations = tvws::validate_topology(tf.topology, tf.plan, tf.threshold_km);
    if (!violations.empty()) {
        std::string msg = path.string() + ": invalid topology";
        for (const auto& v : violations)
            msg += "\n  " + v;
        throw tvws::ValidationError(msg);
    }
    return tf;
}

int run_coverage(const std::string& config_path, const RadioOverrides& overrides)
{
    const auto kv = tvws::KeyValueFile::load(config_path);
    auto radio = tvws::read_radio(kv);
    overrides.apply(radio);
    if (auto errors = tvws::check_radio(radio); !errors.empty())
        throw tvws::ValidationError(errors.front());
    const auto plan = tvws::read_plan(kv);
    const auto budget = tvws::link_budget(radio, plan.channel_bandwidth_hz);
    const double radius = tvws::coverage_radius(radio);

    std::cout << "link budget (RS = Pt + Gt + Gr - PL - CL - NF)\n"
              << "  transmit power      Pt  " << fixed(radio.tx_power_dbm, 2) << " dBm\n"
              << "  transmit gain       Gt  " << fixed(radio.tx_gain_db, 2) << " dB\n"
              << "  receive gain        Gr  " << fixed(radio.rx_gain_db, 2) << " dB\n"
              << "  cable loss          CL  " << fixed(radio.cable_loss_db, 2) << " dB\n"
              << "  noise figure        NF  " << fixed(radio.noise_figure_db, 2) << " dB\n"
              << "  rx sensitivity      RS  " << fixed(radio.rx_sensitivity_dbm, 2) << " dBm\n"
              << "  eNB height          ht  " << fixed(radio.tx_height_m, 2) << " m\n"
              << "  CPE height          hr  " << fixed(radio.rx_height_m, 2) << " m\n"
              << "  centre frequency    fc  " << fixed(radio.center_freq_mhz, 2) << " MHz\n"
              << "  noise floor             " << fixed(budget.noise_floor_dbm, 2) << " dBm per "
              << fixed(plan.channel_bandwidth_hz / 1e6, 3) << " MHz\n"
              << "max_allowed_pl_db = " << fixed(budget.max_allowed_pl_db, 2) << '\n'
              << "coverage_radius_km = " << fixed(radius, 3) << '\n';
    return 0;
}

int run_allocate(const std::string& topology_path, const std::string& out_dir, double delta,
                 const MacOverrides& mac_overrides)
{
    const auto tf = load_valid_topology(topology_path);
    const auto c = tvws::build_interference_matrix(tf.topology.enb_positions, tf.threshold_km);
    tvws::MacConfig mac;
    mac_overrides.apply(mac);
    tvws::check_mac(mac);

    const tvws::FccaConfig cfg{delta, static_cast<std::size_t>(tf.plan.num_channels)};
    const auto outcome = tvws::fcca(c, cfg, [&](const tvws::Allocation& a) {
        return tvws::evaluate(tf.topology, tf.plan, a, c, mac).per_enb_bps;
    });

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw tvws::IoError("cannot create " + out_dir + ": " + ec.message());
    const std::filesystem::path dir(out_dir);
    write_text(dir / "mdca.alloc", tvws::format_allocation(outcome.candidate_mdca.allocation));
    write_text(dir / "odrs_ca.alloc", tvws::format_allocation(outcome.candidate_odrs.allocation));
    write_text(dir / "chosen.alloc", tvws::format_allocation(outcome.chosen));

    auto mbps = [](std::vector<double> v) {
        for (auto& x : v)
            x /= 1e6;
        return v;
    };
    auto print_candidate = [&](const char* name, const tvws::Candidate& cand) {
        std::cout << name << ": T = " << fixed(cand.total() / 1e6, 3) << " Mbps, F = " << fixed(cand.fairness, 4)
                  << "\n  per-eNB Mbps: " << join(mbps(cand.throughput), 3) << '\n'
                  << tvws::format_allocation(cand.allocation);
    };
    std::cout << "interference matrix (threshold " << fixed(tf.threshold_km, 3) << " km)\n"
              << tvws::format_interference(c);
    print_candidate("MDCA", outcome.candidate_mdca);
    print_candidate("ODRS_CA", outcome.candidate_odrs);
    std::cout << "delta = " << fixed(delta, 4) << '\n'
              << "chosen = " << tvws::to_string(outcome.chosen_sub_algorithm) << '\n'
              << "reason = " << tvws::to_string(outcome.reason) << '\n'
              << tvws::format_allocation(outcome.chosen);
    return 0;
}

int run_simulate(const std::string& topology_path, const std::string& allocation_path, const std::string& trace_path,
                 const MacOverrides& mac_overrides)
{
    const auto tf = load_valid_topology(topology_path);
    std::ifstream alloc_in(allocation_path);
    if (!alloc_in)
        throw tvws::IoError("cannot open " + allocation_path);
    const auto alloc = tvws::parse_allocation(alloc_in);
    const auto c = tvws::build_interference_matrix(tf.topology.enb_positions, tf.threshold_km);
    tvws::MacConfig mac;
    mac_overrides.apply(mac);

    std::ofstream trace_out;
    tvws::TraceSink sink;
    if (!trace_path.empty()) {
        trace_out.open(trace_path, std::ios::binary);
        if (!trace_out)
            throw tvws::IoError("cannot open " + trace_path + " for writing");
        trace_out << "# channel start_slot length transmitters\n";
        sink = [&](const tvws::TraceInterval& iv) { tvws::write_trace_line(trace_out, iv); };
    }
    const auto report = tvws::evaluate(tf.topology, tf.plan, alloc, c, mac, sink);
    if (trace_out.is_open() && !trace_out.flush())
        throw tvws::IoError("failed writing " + trace_path);

    std::cout << "enb,throughput_bps,spectral_efficiency_bps_hz,jfi";
    for (std::size_t m = 0; m < alloc.num_channels(); ++m)
        std::cout << ",airtime_ch" << m;
    std::cout << '\n' << std::setprecision(10);
    for (std::size_t k = 0; k < report.per_enb_bps.size(); ++k) {
        std::cout << k << ',' << report.per_enb_bps[k] << ',' << report.spectral_efficiency_bps_hz[k] << ','
                  << report.jfi;
        for (double a : report.airtime[k])
            std::cout << ',' << a;
        std::cout << '\n';
    }
    return 0;
}

struct SweepOptions
{
    std::string config;
    std::vector<std::size_t> densities;
    std::optional<std::size_t> seeds;
    std::optional<double> sim_time_s;
    std::vector<std::string> schemes;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string out_dir = "results";
    bool quiet = false;
};

int run_sweep(const SweepOptions& opt)
{
    tvws::SweepConfig cfg;
    if (!opt.config.empty())
        cfg = tvws::read_sweep_config(tvws::KeyValueFile::load(opt.config));
    if (!opt.densities.empty())
        cfg.enb_counts = opt.densities;
    if (opt.seeds)
        cfg.seeds = *opt.seeds;
    if (opt.sim_time_s)
        cfg.mac.sim_time_s = *opt.sim_time_s;
    if (!opt.schemes.empty()) {
        cfg.schemes.clear();
        for (const auto& s : opt.schemes)
            cfg.schemes.push_back(tvws::parse_scheme(s));
    }
    tvws::check_sweep(cfg);

    tvws::ProgressFn progress;
    if (!opt.quiet) {
        progress = [](std::size_t done, std::size_t total) {
            if (done == total || done % 50 == 0)
                std::cout << "sweep: " << done << "/" << total << " topologies\n";
        };
    }
    const auto result = tvws::run_sweep(cfg, opt.jobs, progress);
    if (!result.records.empty())
        tvws::emit_results(result.records, opt.out_dir);

    std::cout << "records = " << result.records.size() << '\n'
              << "enb_count,scheme,mean_spectral_efficiency,mean_throughput_mbps,mean_jfi,mdca_fraction\n";
    for (const auto& row : tvws::summarize(result.records)) {
        std::cout << row.enb_count << ',' << tvws::to_string(row.scheme) << ','
                  << fixed(row.mean_spectral_efficiency, 4) << ',' << fixed(row.mean_throughput_mbps, 3) << ','
                  << fixed(row.mean_jfi, 4) << ',' << fixed(row.mdca_fraction, 2) << '\n';
    }
    if (!result.failures.empty()) {
        std::cerr << result.failures.size() << " sweep item(s) failed:\n";
        for (const auto& f : result.failures)
            std::cerr << "  enb_count=" << f.enb_count << " seed=" << f.seed << ": " << f.message << '\n';
        return kExitValidation;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"TV white space middle-mile channel allocation and coexistence simulator"};
    app.require_subcommand(1);

    std::string coverage_config;
    RadioOverrides radio_overrides;
    auto* coverage = app.add_subcommand("coverage", "Print the link budget and Hata suburban coverage radius");
    coverage->add_option("config", coverage_config, "Key-value config file with the radio keys")->required();
    radio_overrides.add_to(coverage);

    std::string alloc_topology;
    std::string alloc_out = "allocation";
    double delta = tvws::kDefaultDelta;
    MacOverrides alloc_mac;
    auto* allocate = app.add_subcommand("allocate", "Run MDCA and ODRS-CA on a topology and select by fairness");
    allocate->add_option("topology", alloc_topology, "Topology file")->required();
    allocate->add_option("--out-dir", alloc_out, "Directory for mdca.alloc, odrs_ca.alloc and chosen.alloc");
    allocate->add_option("--delta", delta, "Fairness threshold in (0, 1]");
    alloc_mac.add_to(allocate);

    std::string sim_topology;
    std::string sim_allocation;
    std::string sim_trace;
    MacOverrides sim_mac;
    auto* simulate = app.add_subcommand("simulate", "Simulate an allocation and print per-eNB throughput as CSV");
    simulate->add_option("topology", sim_topology, "Topology file")->required();
    simulate->add_option("allocation", sim_allocation, "Allocation matrix file (cells 0, D, S)")->required();
    simulate->add_option("--trace", sim_trace, "Write a run-length slot trace to this file");
    sim_mac.add_to(simulate);

    SweepOptions sweep_opt;
    auto* sweep = app.add_subcommand("sweep", "Density sweep of NO_COEX, FULL_LBT and FCCA over random topologies");
    sweep->add_option("--config", sweep_opt.config, "Key-value sweep config file");
    sweep->add_option("--densities", sweep_opt.densities, "eNB counts to sweep (default 3..10)")->delimiter(',');
    sweep->add_option("--seeds", sweep_opt.seeds, "Random topologies per density (default 100)");
    sweep->add_option("--sim-time", sweep_opt.sim_time_s, "Simulated seconds per run (default 30)");
    sweep->add_option("--schemes", sweep_opt.schemes, "Subset of NO_COEX, FULL_LBT, FCCA")->delimiter(',');
    sweep->add_option("--jobs", sweep_opt.jobs, "Parallel worker threads");
    sweep->add_option("--out-dir", sweep_opt.out_dir, "Directory for sweep.csv, summary.csv and SVG charts");
    sweep->add_flag("--quiet", sweep_opt.quiet, "Suppress progress lines");

    double population = 1000, villages = 10, rate = 2, contention = 50, divisor = 5;
    auto* demand = app.add_subcommand("demand", "Average middle-mile throughput demand in Mbps");
    demand->add_option("--population", population, "Population per village (default 1000)");
    demand->add_option("--villages", villages, "Number of villages (default 10)");
    demand->add_option("--rate", rate, "Minimum broadband rate per subscriber in Mbps (default 2)");
    demand->add_option("--contention", contention, "Contention ratio 1:N (default 50)");
    demand->add_option("--divisor", divisor, "People per subscribing household (default 5)");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (*coverage)
            return run_coverage(coverage_config, radio_overrides);
        if (*allocate)
            return run_allocate(alloc_topology, alloc_out, delta, alloc_mac);
        if (*simulate)
            return run_simulate(sim_topology, sim_allocation, sim_trace, sim_mac);
        if (*sweep)
            return run_sweep(sweep_opt);
        if (*demand) {
            std::cout << tvws::demand_mbps(population, villages, rate, contention, divisor) << '\n';
            return 0;
        }
    }
    catch (const tvws::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    catch (const tvws::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitInternal;
}
