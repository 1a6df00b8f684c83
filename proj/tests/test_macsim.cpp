#include "test_support.hpp"

#include "tvws/config.hpp"
#include "tvws/conflict.hpp"
#include "tvws/macsim.hpp"
#include "tvws/propagation.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

using namespace tvws;
using tvws::test::fixture;
using tvws::test::matrix_from_edges;

namespace {

MacConfig short_run(std::uint64_t seed = 1)
{
    MacConfig mac;
    mac.sim_time_s = 5.0;
    mac.rng_seed = seed;
    return mac;
}

InterferenceMatrix clique(std::size_t n)
{
    std::vector<std::uint8_t> e(n * n, 1);
    for (std::size_t k = 0; k < n; ++k)
        e[k * n + k] = 0;
    return InterferenceMatrix(n, std::move(e), 4.0);
}

Allocation uniform(std::size_t n, std::size_t m, ChannelMode mode)
{
    Allocation a(n, m);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < m; ++j)
            a.assign(k, j, mode);
    return a;
}

// Mean CPE rate of the single-eNB fixture on one channel, computed outside
// the library: four CPEs at 1 km (capped at 4.8 b/s/Hz) and one at
// 1.5 * sqrt(2) km with SNR 11.2324 dB.
constexpr double kSingleChannelRate = 23036056.79;

} // namespace

TEST_CASE("config checks")
{
    CHECK_NOTHROW(check_mac(MacConfig{}));
    MacConfig mac;
    mac.sim_time_s = 0.0;
    CHECK_THROWS_WITH_AS(check_mac(mac), "zero-length simulation", ValidationError);
    mac = MacConfig{};
    mac.txop_ms = 0.05;
    CHECK_THROWS_AS(check_mac(mac), ValidationError);
    mac = MacConfig{};
    mac.sim_time_s = 0.5;
    CHECK_THROWS_AS(check_mac(mac), ValidationError);
    mac = MacConfig{};
    mac.contention_window_slots = 0;
    CHECK_THROWS_AS(check_mac(mac), ValidationError);
    CHECK(MacConfig{}.txop_slots() == 1111);
}

TEST_CASE("single eNB with every channel dedicated")
{
    const auto f = load_topology(fixture("single.conf"));
    const auto c = build_interference_matrix(f.topology.enb_positions, f.threshold_km);
    const auto r = evaluate(f.topology, f.plan, uniform(1, 4, ChannelMode::Dedicated), c, short_run());
    CHECK(r.per_enb_bps[0] == doctest::Approx(4.0 * kSingleChannelRate).epsilon(1e-6));
    CHECK(r.spectral_efficiency_bps_hz[0] == doctest::Approx(4.0 * kSingleChannelRate / 20e6).epsilon(1e-6));
    CHECK(r.jfi == doctest::Approx(1.0));
    for (double a : r.airtime[0])
        CHECK(a == 1.0);
}

TEST_CASE("shared channel without co-holders is within 1% of dedicated")
{
    const auto f = load_topology(fixture("single.conf"));
    const auto c = build_interference_matrix(f.topology.enb_positions, f.threshold_km);
    const auto ded = evaluate(f.topology, f.plan, uniform(1, 4, ChannelMode::Dedicated), c, short_run());
    const auto sh = evaluate(f.topology, f.plan, uniform(1, 4, ChannelMode::Shared), c, short_run());
    CHECK(sh.per_enb_bps[0] <= ded.per_enb_bps[0]);
    CHECK(sh.per_enb_bps[0] >= 0.99 * ded.per_enb_bps[0]);
}

TEST_CASE("clique airtime matches the analytic share")
{
    for (std::size_t n = 1; n <= 4; ++n) {
        CAPTURE(n);
        const auto c = clique(n);
        const std::vector<ChannelMode> modes(n, ChannelMode::Shared);
        const auto mac = short_run(n);
        const auto tl = simulate_channel(c, modes, mac, 0);
        const double expected = analytic_clique_share(n, mac);
        double sum = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double share = static_cast<double>(tl.airtime_slots[k]) / static_cast<double>(mac.total_slots());
            CHECK(share == doctest::Approx(expected).epsilon(0.05));
            sum += share;
        }
        CHECK(sum <= 1.0);
    }
}

TEST_CASE("neighbours never overlap on a shared channel")
{
    const auto c = matrix_from_edges(3, {{0, 1}, {1, 2}});
    const std::vector<ChannelMode> modes(3, ChannelMode::Shared);
    const auto mac = short_run(9);
    std::int64_t next = 0;
    std::int64_t ends_overlap = 0;
    const auto tl = simulate_channel(c, modes, mac, 2, [&](const TraceInterval& iv) {
        CHECK(iv.channel == 2);
        CHECK(iv.start_slot == next);
        CHECK(iv.length > 0);
        next = iv.start_slot + iv.length;
        const bool a = iv.transmitters & 1, b = iv.transmitters & 2, d = iv.transmitters & 4;
        CHECK_FALSE((a && b));
        CHECK_FALSE((b && d));
        if (a && d)
            ends_overlap += iv.length;
    });
    CHECK(next == mac.total_slots());
    CHECK(ends_overlap > 0);
    // The middle node contends with both ends.
    CHECK(tl.airtime_slots[1] <= tl.airtime_slots[0]);
    CHECK(tl.airtime_slots[1] <= tl.airtime_slots[2]);
    std::int64_t total = 0;
    for (const auto& [mask, slots] : tl.slots_by_mask)
        total += slots;
    CHECK(total == mac.total_slots());
}

TEST_CASE("dedicated holders ignore sensing")
{
    const auto c = clique(2);
    const std::vector<ChannelMode> modes{ChannelMode::Dedicated, ChannelMode::Shared};
    const auto mac = short_run();
    const auto tl = simulate_channel(c, modes, mac, 0);
    CHECK(tl.airtime_slots[0] == mac.total_slots());
    CHECK(tl.airtime_slots[1] == 0);
}

TEST_CASE("same seed reproduces, different seed differs")
{
    const auto c = clique(3);
    const std::vector<ChannelMode> modes(3, ChannelMode::Shared);
    const auto a = simulate_channel(c, modes, short_run(4), 1);
    const auto b = simulate_channel(c, modes, short_run(4), 1);
    const auto d = simulate_channel(c, modes, short_run(5), 1);
    CHECK(a.slots_by_mask == b.slots_by_mask);
    CHECK(a.airtime_slots == b.airtime_slots);
    CHECK(a.airtime_slots != d.airtime_slots);
}

TEST_CASE("two-clique fixture splits airtime evenly")
{
    const auto f = load_topology(fixture("clique2.conf"));
    const auto c = build_interference_matrix(f.topology.enb_positions, f.threshold_km);
    const auto r = evaluate(f.topology, f.plan, uniform(2, 4, ChannelMode::Shared), c, short_run());
    for (const auto& row : r.airtime)
        for (double a : row)
            CHECK(a == doctest::Approx(0.5).epsilon(0.1));
}

TEST_CASE("co-located eNBs without coexistence reach about 1 b/s/Hz")
{
    Topology t;
    t.enb_positions = {{5, 5}, {5, 5}};
    t.cpe_positions = {{{6, 5}, {5, 6}}, {{4, 5}, {5, 4}}};
    const ChannelPlan plan;
    const auto c = build_interference_matrix(t.enb_positions, 4.0);
    const auto r = baseline_no_coexistence(t, plan, c, short_run());
    for (double se : r.spectral_efficiency_bps_hz)
        CHECK(se == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("interference only lowers no-coexistence throughput")
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(1.0, 9.0);
    const ChannelPlan plan;
    for (int iter = 0; iter < 20; ++iter) {
        Topology t;
        const std::size_t n = 2 + rng() % 4;
        for (std::size_t k = 0; k < n; ++k) {
            t.enb_positions.push_back({u(rng), u(rng)});
            t.cpe_positions.push_back({{t.enb_positions[k].x_km + 0.5, t.enb_positions[k].y_km}});
        }
        const auto c = build_interference_matrix(t.enb_positions, 4.0);
        const auto r = baseline_no_coexistence(t, plan, c, short_run());
        for (std::size_t k = 0; k < n; ++k) {
            Topology alone;
            alone.enb_positions = {t.enb_positions[k]};
            alone.cpe_positions = {t.cpe_positions[k]};
            const auto solo = evaluate(alone, plan, uniform(1, 4, ChannelMode::Dedicated),
                                       build_interference_matrix(alone.enb_positions, 4.0), short_run());
            REQUIRE(r.per_enb_bps[k] <= solo.per_enb_bps[0] * (1 + 1e-12));
        }
    }
}

TEST_CASE("adding a dedicated channel never lowers the holder's throughput")
{
    std::mt19937_64 rng(41);
    const auto f = load_topology(fixture("path3.conf"));
    const auto c = build_interference_matrix(f.topology.enb_positions, f.threshold_km);
    for (int iter = 0; iter < 15; ++iter) {
        Allocation a(3, 4);
        for (std::size_t k = 0; k < 3; ++k)
            for (std::size_t m = 0; m < 4; ++m)
                a.assign(k, m, static_cast<ChannelMode>(rng() % 3));
        const std::size_t k = rng() % 3;
        std::size_t m = rng() % 4;
        a.assign(k, m, ChannelMode::Unassigned);
        const auto before = evaluate(f.topology, f.plan, a, c, short_run());
        a.assign(k, m, ChannelMode::Dedicated);
        const auto after = evaluate(f.topology, f.plan, a, c, short_run());
        REQUIRE(after.per_enb_bps[k] >= before.per_enb_bps[k]);
    }
}

TEST_CASE("all-idle allocation reports an undefined fairness")
{
    const auto f = load_topology(fixture("single.conf"));
    const auto c = build_interference_matrix(f.topology.enb_positions, f.threshold_km);
    const auto r = evaluate(f.topology, f.plan, Allocation(1, 4), c, short_run());
    CHECK(r.per_enb_bps[0] == 0.0);
    CHECK(std::isnan(r.jfi));
}

TEST_CASE("evaluate rejects mismatched shapes")
{
    const auto f = load_topology(fixture("single.conf"));
    const auto c = build_interference_matrix(f.topology.enb_positions, f.threshold_km);
    CHECK_THROWS_AS(evaluate(f.topology, f.plan, Allocation(2, 4), c, short_run()), ValidationError);
    CHECK_THROWS_AS(evaluate(f.topology, f.plan, Allocation(1, 3), c, short_run()), ValidationError);
}

TEST_CASE("trace line format")
{
    std::ostringstream out;
    write_trace_line(out, {1, 10, 5, 0b101});
    write_trace_line(out, {0, 0, 3, 0});
    CHECK(out.str() == "1 10 5 0,2\n0 0 3 -\n");
}

TEST_CASE("analytic share")
{
    const MacConfig mac;
    CHECK(analytic_clique_share(1, mac) == doctest::Approx(1111.0 / 1118.5));
    CHECK(analytic_clique_share(2, mac) == doctest::Approx(1111.0 / (2222.0 + 3.75)));
    CHECK_THROWS_AS(analytic_clique_share(0, mac), ValidationError);
}
