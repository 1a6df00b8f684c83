#include "tvws/macsim.hpp"

#include "tvws/fcca.hpp"
#include "tvws/propagation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>
#include <string>

namespace tvws {

std::int64_t MacConfig::txop_slots() const
{
    return std::llround(txop_ms * 1000.0 / slot_us);
}

std::int64_t MacConfig::total_slots() const
{
    return std::llround(sim_time_s * 1e6 / slot_us);
}

void check_mac(const MacConfig& mac)
{
    if (!(mac.slot_us > 0.0))
        throw ValidationError("slot_us must be positive");
    if (!(mac.sim_time_s > 0.0))
        throw ValidationError("zero-length simulation");
    if (mac.contention_window_slots < 1)
        throw ValidationError("contention_window_slots must be >= 1");
    if (mac.txop_slots() < 10)
        throw ValidationError("TxOp must span at least 10 slots");
    if (mac.total_slots() < 100 * mac.txop_slots())
        throw ValidationError("simulation must cover at least 100 TxOps");
    if (!(mac.spectral_efficiency_cap > 0.0))
        throw ValidationError("spectral_efficiency_cap must be positive");
}

namespace {

constexpr std::int64_t kForever = std::numeric_limits<std::int64_t>::max();

enum class LbtState
{
    Idle, // not holding the channel
    Sensing,
    Backoff,
    Transmitting,
};

struct LbtNode
{
    LbtState state = LbtState::Idle;
    bool dedicated = false;
    std::int64_t counter = 0; // backoff slots left, or TxOp slots left
    TxMask neighbours = 0;    // conflict-graph neighbours holding the channel
};

TxMask bit(std::size_t k)
{
    return TxMask{1} << k;
}

class TraceCoalescer
{
  public:
    TraceCoalescer(const TraceSink& sink, std::size_t channel) : sink_(sink), current_{channel, 0, 0, 0} {}

    void add(std::int64_t start, std::int64_t length, TxMask mask)
    {
        if (!sink_)
            return;
        if (current_.length > 0 && mask == current_.transmitters) {
            current_.length += length;
            return;
        }
        flush();
        current_.start_slot = start;
        current_.length = length;
        current_.transmitters = mask;
    }

    void flush()
    {
        if (sink_ && current_.length > 0)
            sink_(current_);
        current_.length = 0;
    }

  private:
    const TraceSink& sink_;
    TraceInterval current_;
};

} // namespace

ChannelTimeline simulate_channel(const InterferenceMatrix& c, const std::vector<ChannelMode>& modes,
                                 const MacConfig& mac, std::size_t channel_index, const TraceSink& trace)
{
    check_mac(mac);
    const std::size_t n = c.size();
    if (modes.size() != n)
        throw ValidationError("channel modes do not match the number of eNBs");
    if (n > kMaxEnbs)
        throw ValidationError("at most 64 eNBs are supported");

    std::vector<LbtNode> nodes(n);
    TxMask holders = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (modes[k] == ChannelMode::Unassigned)
            continue;
        holders |= bit(k);
        if (modes[k] == ChannelMode::Dedicated) {
            nodes[k].dedicated = true;
            nodes[k].state = LbtState::Transmitting;
            nodes[k].counter = kForever;
        }
        else {
            nodes[k].state = LbtState::Sensing;
        }
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            if (c.interferes(k, j) && (holders & bit(j)))
                nodes[k].neighbours |= bit(j);

    std::seed_seq seq{static_cast<std::uint32_t>(mac.rng_seed), static_cast<std::uint32_t>(mac.rng_seed >> 32),
                      static_cast<std::uint32_t>(channel_index)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::int64_t> draw_backoff(0, mac.contention_window_slots - 1);

    const std::int64_t txop = mac.txop_slots();
    const std::int64_t total = mac.total_slots();

    ChannelTimeline tl;
    tl.airtime_slots.assign(n, 0);
    TraceCoalescer tracer(trace, channel_index);
    std::vector<std::size_t> candidates;

    auto account = [&](std::int64_t start, std::int64_t span, TxMask mask) {
        tl.slots_by_mask[mask] += span;
        for (TxMask m = mask; m != 0; m &= m - 1)
            tl.airtime_slots[static_cast<std::size_t>(std::countr_zero(m))] += span;
        tracer.add(start, span, mask);
    };

    // Ends TxOps that ran out after `span` slots.
    auto advance_transmitters = [&](TxMask mask, std::int64_t span) {
        for (TxMask m = mask; m != 0; m &= m - 1) {
            auto& node = nodes[static_cast<std::size_t>(std::countr_zero(m))];
            if (node.counter == kForever)
                continue;
            node.counter -= span;
            if (node.counter == 0)
                node.state = LbtState::Sensing;
        }
    };

    std::int64_t t = 0;
    while (t < total) {
        TxMask tx = 0;
        for (std::size_t k = 0; k < n; ++k)
            if (nodes[k].state == LbtState::Transmitting)
                tx |= bit(k);

        // Longest stretch over which no node changes state except by
        // counting down; a sensing or expiring node forces a single slot.
        bool single = false;
        std::int64_t span = total - t;
        for (std::size_t k = 0; k < n; ++k) {
            const auto& node = nodes[k];
            if (node.state == LbtState::Transmitting) {
                span = std::min(span, node.counter);
                continue;
            }
            if (node.state == LbtState::Idle || (node.neighbours & tx))
                continue;
            if (node.state == LbtState::Sensing || node.counter == 0)
                single = true;
            else
                span = std::min(span, node.counter);
        }

        if (!single) {
            for (auto& node : nodes)
                if (node.state == LbtState::Backoff && !(node.neighbours & tx))
                    node.counter -= span;
            account(t, span, tx);
            advance_transmitters(tx, span);
            t += span;
            continue;
        }

        candidates.clear();
        for (std::size_t k = 0; k < n; ++k) {
            auto& node = nodes[k];
            if (node.state == LbtState::Idle || node.state == LbtState::Transmitting || (node.neighbours & tx))
                continue;
            if (node.state == LbtState::Sensing) {
                node.state = LbtState::Backoff;
                node.counter = draw_backoff(rng);
            }
            else if (node.counter == 0) {
                candidates.push_back(k);
            }
            else {
                --node.counter;
            }
        }
        if (candidates.size() > 1)
            std::shuffle(candidates.begin(), candidates.end(), rng);

        TxMask on_air = tx;
        for (std::size_t k : candidates) {
            if (nodes[k].neighbours & on_air)
                continue; // a neighbour won the slot; stay frozen at zero
            nodes[k].state = LbtState::Transmitting;
            nodes[k].counter = txop;
            on_air |= bit(k);
        }
        account(t, 1, on_air);
        advance_transmitters(on_air, 1);
        ++t;
    }
    tracer.flush();
    return tl;
}

namespace {

// Mean CPE rate of each eNB given the set of eNBs on the air.
class RateModel
{
  public:
    RateModel(const Topology& t, const ChannelPlan& plan, double cap)
        : bandwidth_hz_(plan.channel_bandwidth_hz), cap_(cap),
          noise_mw_(dbm_to_mw(noise_floor_dbm(plan.channel_bandwidth_hz, t.radio.noise_figure_db)))
    {
        const std::size_t n = t.num_enbs();
        rx_mw_.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            for (const auto& cpe : t.cpe_positions[k]) {
                std::vector<double> row(n);
                for (std::size_t j = 0; j < n; ++j)
                    row[j] = dbm_to_mw(received_power(t.radio, distance_km(cpe, t.enb_positions[j])));
                rx_mw_[k].push_back(std::move(row));
            }
        }
    }

    const std::vector<double>& rates(TxMask on_air)
    {
        auto [it, inserted] = cache_.try_emplace(on_air);
        if (!inserted)
            return it->second;
        auto& out = it->second;
        out.assign(rx_mw_.size(), 0.0);
        for (TxMask m = on_air; m != 0; m &= m - 1) {
            const auto k = static_cast<std::size_t>(std::countr_zero(m));
            const auto& cpes = rx_mw_[k];
            if (cpes.empty())
                continue;
            double sum = 0.0;
            for (const auto& row : cpes) {
                double interference = noise_mw_;
                for (TxMask o = on_air & ~bit(k); o != 0; o &= o - 1)
                    interference += row[static_cast<std::size_t>(std::countr_zero(o))];
                sum += link_rate_bps(mw_to_dbm(row[k] / interference), bandwidth_hz_, cap_);
            }
            out[k] = sum / static_cast<double>(cpes.size());
        }
        return out;
    }

  private:
    double bandwidth_hz_;
    double cap_;
    double noise_mw_;
    std::vector<std::vector<std::vector<double>>> rx_mw_; // [k][cpe][j]
    std::map<TxMask, std::vector<double>> cache_;
};

} // namespace

ThroughputReport evaluate(const Topology& t, const ChannelPlan& plan, const Allocation& alloc,
                          const InterferenceMatrix& c, const MacConfig& mac, const TraceSink& trace)
{
    check_mac(mac);
    const std::size_t n = t.num_enbs();
    const auto channels = static_cast<std::size_t>(plan.num_channels);
    if (alloc.num_enbs() != n || c.size() != n || t.cpe_positions.size() != n)
        throw ValidationError("allocation, interference matrix and topology disagree on the number of eNBs");
    if (alloc.num_channels() != channels)
        throw ValidationError("allocation has " + std::to_string(alloc.num_channels()) + " channels, plan has " +
                              std::to_string(channels));
    if (n > kMaxEnbs)
        throw ValidationError("at most 64 eNBs are supported");

    RateModel rates(t, plan, mac.spectral_efficiency_cap);
    const double slot_s = mac.slot_us * 1e-6;
    const double duration_s = static_cast<double>(mac.total_slots()) * slot_s;

    ThroughputReport report;
    report.airtime.assign(n, std::vector<double>(channels, 0.0));
    std::vector<double> bits(n, 0.0);
    std::vector<ChannelMode> modes(n);
    for (std::size_t m = 0; m < channels; ++m) {
        for (std::size_t k = 0; k < n; ++k)
            modes[k] = alloc.mode(k, m);
        const auto tl = simulate_channel(c, modes, mac, m, trace);
        for (std::size_t k = 0; k < n; ++k)
            report.airtime[k][m] = static_cast<double>(tl.airtime_slots[k]) / static_cast<double>(mac.total_slots());
        for (const auto& [mask, slots] : tl.slots_by_mask) {
            const auto& r = rates.rates(mask);
            for (TxMask b = mask; b != 0; b &= b - 1) {
                const auto k = static_cast<std::size_t>(std::countr_zero(b));
                bits[k] += static_cast<double>(slots) * slot_s * r[k];
            }
        }
    }

    report.per_enb_bps.resize(n);
    report.spectral_efficiency_bps_hz.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        report.per_enb_bps[k] = bits[k] / duration_s;
        report.spectral_efficiency_bps_hz[k] = report.per_enb_bps[k] / plan.total_bandwidth_hz();
    }
    const bool any = std::any_of(bits.begin(), bits.end(), [](double b) { return b > 0.0; });
    // Undefined for an all-zero vector.
    report.jfi = any ? jfi(report.per_enb_bps) : std::numeric_limits<double>::quiet_NaN();
    return report;
}

double analytic_clique_share(std::size_t n, const MacConfig& mac)
{
    if (n == 0)
        throw ValidationError("clique size must be >= 1");
    const double txop = static_cast<double>(mac.txop_slots());
    const double gap = (mac.contention_window_slots - 1) / 2.0 / static_cast<double>(n);
    return txop / (static_cast<double>(n) * txop + gap);
}

namespace {

Allocation uniform_allocation(std::size_t n, std::size_t channels, ChannelMode mode)
{
    Allocation a(n, channels);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < channels; ++m)
            a.assign(k, m, mode);
    return a;
}

} // namespace

ThroughputReport baseline_no_coexistence(const Topology& t, const ChannelPlan& plan, const InterferenceMatrix& c,
                                         const MacConfig& mac)
{
    // Dedicated mode never senses, so every eNB is on the air everywhere.
    return evaluate(t, plan, uniform_allocation(t.num_enbs(), static_cast<std::size_t>(plan.num_channels),
                                                ChannelMode::Dedicated),
                    c, mac);
}

ThroughputReport baseline_full_lbt(const Topology& t, const ChannelPlan& plan, const InterferenceMatrix& c,
                                   const MacConfig& mac)
{
    return evaluate(t, plan,
                    uniform_allocation(t.num_enbs(), static_cast<std::size_t>(plan.num_channels), ChannelMode::Shared),
                    c, mac);
}

void write_trace_line(std::ostream& out, const TraceInterval& iv)
{
    out << iv.channel << ' ' << iv.start_slot << ' ' << iv.length << ' ';
    if (iv.transmitters == 0) {
        out << '-';
    }
    else {
        bool first = true;
        for (TxMask m = iv.transmitters; m != 0; m &= m - 1) {
            if (!first)
                out << ',';
            out << std::countr_zero(m);
            first = false;
        }
    }
    out << '\n';
}

} // namespace tvws
