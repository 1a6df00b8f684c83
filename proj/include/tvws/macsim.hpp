// Slotted listen-before-talk MAC simulation that turns an allocation into
// per-eNB downlink throughput.
//
// Each channel is simulated on its own. Dedicated holders transmit
// back-to-back TxOps for the whole run. Shared holders run LBT:
//
//   1. sense one slot; if no conflict-graph neighbour holding the channel is
//      transmitting, draw a backoff uniformly from [0, CW-1];
//   2. count the backoff down on idle slots, frozen while busy;
//   3. at zero, transmit one TxOp, then go back to 1.
//
// Backoffs expiring in the same slot are served in a random order, and a
// node that finds a neighbour already started keeps its zero counter frozen.
// Neighbours therefore never overlap on a channel.
//
// Traffic is saturated and CPEs are static, so proportional-fair scheduling
// reduces to an equal time share per CPE. A CPE's rate during a slot comes
// from its SINR against every other eNB transmitting on the same channel in
// that slot, at any distance.

#ifndef TVWS_MACSIM_HPP
#define TVWS_MACSIM_HPP

#include "tvws/model.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <vector>

namespace tvws {

struct MacConfig
{
    double slot_us = 9.0;
    double txop_ms = 10.0;
    double sim_time_s = 30.0;
    int contention_window_slots = 16;
    std::uint64_t rng_seed = 1;
    double spectral_efficiency_cap = 4.8;

    std::int64_t txop_slots() const;
    std::int64_t total_slots() const;
};

/// Throws ValidationError unless slot > 0, TxOp at least 10 slots, CW >= 1 and
/// the run covers at least 100 TxOps.
void check_mac(const MacConfig& mac);

/// Bitmask of transmitting eNBs (bit k = eNB k). Limits K to 64.
using TxMask = std::uint64_t;
inline constexpr std::size_t kMaxEnbs = 64;

/// Occupancy of one channel: slots spent in each transmitter set, plus
/// per-eNB transmitting slots.
struct ChannelTimeline
{
    std::map<TxMask, std::int64_t> slots_by_mask;
    std::vector<std::int64_t> airtime_slots;
};

/// Run-length trace entry: `length` slots starting at `start_slot` during
/// which exactly the eNBs in `transmitters` were on the air on `channel`.
struct TraceInterval
{
    std::size_t channel = 0;
    std::int64_t start_slot = 0;
    std::int64_t length = 0;
    TxMask transmitters = 0;
};

using TraceSink = std::function<void(const TraceInterval&)>;

/// Slot-level LBT run of one channel. `modes[k]` is eNB k's mode on it.
ChannelTimeline simulate_channel(const InterferenceMatrix& c, const std::vector<ChannelMode>& modes,
                                 const MacConfig& mac, std::size_t channel_index,
                                 const TraceSink& trace = {});

ThroughputReport evaluate(const Topology& t, const ChannelPlan& plan, const Allocation& alloc,
                          const InterferenceMatrix& c, const MacConfig& mac,
                          const TraceSink& trace = {});

/// Expected per-eNB airtime on one channel shared by an n-clique:
/// TxOp / (n TxOp + E[gap]) with E[gap] = (CW - 1) / 2 slots / n.
double analytic_clique_share(std::size_t n, const MacConfig& mac);

/// Every eNB on every channel all the time, no coexistence mechanism.
ThroughputReport baseline_no_coexistence(const Topology& t, const ChannelPlan& plan,
                                         const InterferenceMatrix& c, const MacConfig& mac);

/// Every eNB holds every channel in shared mode.
ThroughputReport baseline_full_lbt(const Topology& t, const ChannelPlan& plan, const InterferenceMatrix& c,
                                   const MacConfig& mac);

/// One line per interval: `channel start_slot length ids`, ids comma-separated
/// or `-` when the channel is idle.
void write_trace_line(std::ostream& out, const TraceInterval& iv);

} // namespace tvws

#endif
