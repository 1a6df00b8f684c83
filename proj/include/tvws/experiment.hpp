// Random-topology density sweep comparing FCCA against the no-coexistence
// and full-LBT baselines, plus the village demand arithmetic.

#ifndef TVWS_EXPERIMENT_HPP
#define TVWS_EXPERIMENT_HPP

#include "tvws/config.hpp"
#include "tvws/macsim.hpp"
#include "tvws/model.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace tvws {

enum class Scheme
{
    NoCoex,
    FullLbt,
    Fcca,
};

const char* to_string(Scheme s);
Scheme parse_scheme(const std::string& name);

struct SweepConfig
{
    std::vector<std::size_t> enb_counts{3, 4, 5, 6, 7, 8, 9, 10};
    std::size_t seeds = 100;
    std::uint64_t first_seed = 1;
    double area_km = 10.0;
    double threshold_km = 4.0;
    std::size_t cpes_per_enb = 5;
    double min_cpe_offset_km = 0.05;
    std::size_t max_degree = 2;
    std::uint64_t rejection_budget = 10'000'000;
    std::vector<Scheme> schemes{Scheme::NoCoex, Scheme::FullLbt, Scheme::Fcca};
    MacConfig mac;
    RadioParams radio;
    ChannelPlan plan;
    double delta = 0.75;
};

void check_sweep(const SweepConfig& cfg);

/// Optional keys over the defaults: enb_counts, seeds, first_seed, area_km,
/// threshold_km, cpes_per_enb, min_cpe_offset_km, max_degree,
/// rejection_budget, schemes, delta, slot_us, txop_ms, sim_time_s,
/// contention_window_slots, rng_seed, spectral_efficiency_cap, plus the
/// channel plan keys. The radio keys are required.
SweepConfig read_sweep_config(const KeyValueFile& kv);

struct SweepRecord
{
    std::uint64_t seed = 0;
    std::size_t enb_count = 0;
    Scheme scheme = Scheme::Fcca;
    double mean_spectral_efficiency = 0.0; // b/s/Hz over the whole band
    double mean_throughput_mbps = 0.0;
    double jfi = 0.0;
    SubAlgorithm chosen_sub_algorithm = SubAlgorithm::None;

    friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

struct SweepFailure
{
    std::uint64_t seed = 0;
    std::size_t enb_count = 0;
    std::string message;
};

struct SweepResult
{
    std::vector<SweepRecord> records;
    std::vector<SweepFailure> failures;
};

/// Uniform eNB positions, rejected as a whole until every eNB has at most
/// min(max_degree, M - 1) neighbours; then cpes_per_enb CPEs uniform in the
/// coverage disk (at least min_cpe_offset_km from the eNB, inside the area).
/// Deterministic in (seed, n_enb). Throws ValidationError when the rejection
/// budget runs out.
Topology generate_topology(std::uint64_t seed, std::size_t n_enb, const SweepConfig& cfg);

/// Runs every requested scheme on one topology, in cfg.schemes order.
std::vector<SweepRecord> run_item(std::uint64_t seed, std::size_t n_enb, const SweepConfig& cfg);

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

/// Records ordered by (enb_count, seed, scheme) regardless of `jobs`.
SweepResult run_sweep(const SweepConfig& cfg, unsigned jobs = 1, const ProgressFn& progress = {});

struct SummaryRow
{
    std::size_t enb_count = 0;
    Scheme scheme = Scheme::Fcca;
    std::size_t samples = 0;
    double mean_spectral_efficiency = 0.0;
    double ci95_spectral_efficiency = 0.0;
    double mean_throughput_mbps = 0.0;
    double ci95_throughput_mbps = 0.0;
    double mean_jfi = 0.0;
    double ci95_jfi = 0.0;
    double mdca_fraction = 0.0; // FCCA rows only
    double odrs_fraction = 0.0;
};

/// Per (enb_count, scheme) means and 95% normal-approximation half-widths.
std::vector<SummaryRow> summarize(const std::vector<SweepRecord>& records);

std::string sweep_csv(const std::vector<SweepRecord>& records);
std::vector<SweepRecord> parse_sweep_csv(const std::string& text);
std::string summary_csv(const std::vector<SummaryRow>& rows);

enum class Metric
{
    SpectralEfficiency,
    Throughput,
    Fairness,
};

std::string line_chart_svg(const std::vector<SummaryRow>& rows, Metric metric);

/// Writes sweep.csv, summary.csv, spectral_efficiency.svg, throughput.svg and
/// jfi.svg into out_dir (created if missing). Throws IoError with the path.
void emit_results(const std::vector<SweepRecord>& records, const std::filesystem::path& out_dir);

/// population x villages x rate / (contention x subscribers_divisor).
double demand_mbps(double population_per_village, double villages, double rate_mbps, double contention_ratio,
                   double subscribers_divisor);

} // namespace tvws

#endif
