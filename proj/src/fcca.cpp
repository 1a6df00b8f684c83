#include "tvws/fcca.hpp"

#include "tvws/conflict.hpp"

#include <numeric>
#include <string>

namespace tvws {

namespace {

void require_colourable(const InterferenceMatrix& c, std::size_t num_channels)
{
    if (num_channels == 0)
        throw ValidationError("at least one channel is required");
    for (std::size_t k = 0; k < c.size(); ++k) {
        const auto d = degree(c, k);
        if (d >= num_channels)
            throw ValidationError("eNB " + std::to_string(k) + " has degree " + std::to_string(d) +
                                  " >= number of channels " + std::to_string(num_channels));
    }
}

// Lowest channel held by neither k nor (under `counts`) any neighbour of k.
// Returns num_channels when there is none.
template <typename Counts>
std::size_t lowest_feasible(const InterferenceMatrix& c, const Allocation& a, std::size_t k, Counts counts)
{
    for (std::size_t m = 0; m < a.num_channels(); ++m) {
        if (a.holds(k, m))
            continue;
        bool taken = false;
        for (std::size_t j = 0; j < c.size() && !taken; ++j)
            taken = c.interferes(k, j) && counts(a.mode(j, m));
        if (!taken)
            return m;
    }
    return a.num_channels();
}

bool any_mode(ChannelMode mode)
{
    return mode != ChannelMode::Unassigned;
}

bool dedicated_mode(ChannelMode mode)
{
    return mode == ChannelMode::Dedicated;
}

} // namespace

Allocation mdca(const InterferenceMatrix& c, std::size_t num_channels)
{
    require_colourable(c, num_channels);
    const std::size_t none = num_channels;
    Allocation a(c.size(), num_channels);

    for (;;) {
        bool all_feasible = true;
        for (std::size_t k = 0; k < c.size() && all_feasible; ++k)
            all_feasible = lowest_feasible(c, a, k, any_mode) != none;
        if (!all_feasible || c.size() == 0)
            break;

        for (std::size_t k = 0; k < c.size(); ++k) {
            const auto q = lowest_feasible(c, a, k, any_mode);
            if (q != none)
                a.assign(k, q, ChannelMode::Dedicated);
        }
    }
    return a;
}

Allocation odrs_ca(const InterferenceMatrix& c, std::size_t num_channels)
{
    require_colourable(c, num_channels);
    Allocation a(c.size(), num_channels);

    for (std::size_t k = 0; k < c.size(); ++k) {
        // Degree <= M - 1 guarantees a free colour.
        const auto q = lowest_feasible(c, a, k, dedicated_mode);
        a.assign(k, q, ChannelMode::Dedicated);
    }

    // Shared pass reads only pass-one dedications, so its order is irrelevant.
    for (std::size_t k = 0; k < c.size(); ++k) {
        for (std::size_t m = 0; m < num_channels; ++m) {
            if (a.holds(k, m))
                continue;
            bool blocked = false;
            for (std::size_t j = 0; j < c.size() && !blocked; ++j)
                blocked = c.interferes(k, j) && a.mode(j, m) == ChannelMode::Dedicated;
            if (!blocked)
                a.assign(k, m, ChannelMode::Shared);
        }
    }
    return a;
}

double jfi(std::span<const double> t)
{
    if (t.empty())
        throw ValidationError("fairness index of an empty throughput vector");
    double sum = 0.0;
    double sum_sq = 0.0;
    for (double v : t) {
        if (v < 0.0)
            throw ValidationError("negative throughput in fairness index");
        sum += v;
        sum_sq += v * v;
    }
    if (sum_sq == 0.0)
        throw ValidationError("fairness index undefined for all-zero throughput");
    return sum * sum / (static_cast<double>(t.size()) * sum_sq);
}

const char* to_string(SelectionReason r)
{
    switch (r) {
    case SelectionReason::OnlyMdcaFair:
        return "only MDCA meets the fairness threshold";
    case SelectionReason::OnlyOdrsFair:
        return "only ODRS-CA meets the fairness threshold";
    case SelectionReason::BothFairMaxThroughput:
        return "both meet the fairness threshold; larger total throughput wins";
    case SelectionReason::NeitherFairMaxFairness:
        break;
    }
    return "neither meets the fairness threshold; fallback to larger fairness";
}

double Candidate::total() const
{
    return std::accumulate(throughput.begin(), throughput.end(), 0.0);
}

FccaOutcome select(Candidate mdca_candidate, Candidate odrs_candidate, double delta)
{
    const bool mdca_fair = mdca_candidate.fairness >= delta;
    const bool odrs_fair = odrs_candidate.fairness >= delta;

    bool pick_mdca = false;
    SelectionReason reason;
    if (mdca_fair && !odrs_fair) {
        pick_mdca = true;
        reason = SelectionReason::OnlyMdcaFair;
    }
    else if (odrs_fair && !mdca_fair) {
        reason = SelectionReason::OnlyOdrsFair;
    }
    else if (mdca_fair && odrs_fair) {
        pick_mdca = mdca_candidate.total() > odrs_candidate.total();
        reason = SelectionReason::BothFairMaxThroughput;
    }
    else {
        pick_mdca = mdca_candidate.fairness > odrs_candidate.fairness;
        reason = SelectionReason::NeitherFairMaxFairness;
    }

    FccaOutcome out;
    out.chosen = pick_mdca ? mdca_candidate.allocation : odrs_candidate.allocation;
    out.chosen_sub_algorithm = pick_mdca ? SubAlgorithm::Mdca : SubAlgorithm::OdrsCa;
    out.reason = reason;
    out.candidate_mdca = std::move(mdca_candidate);
    out.candidate_odrs = std::move(odrs_candidate);
    return out;
}

FccaOutcome fcca(const InterferenceMatrix& c, const FccaConfig& cfg, const Evaluator& evaluator)
{
    if (!(cfg.delta > 0.0 && cfg.delta <= 1.0))
        throw ValidationError("delta must lie in (0, 1]");

    auto evaluate = [&](Allocation a) {
        Candidate cand;
        cand.throughput = evaluator(a);
        if (cand.throughput.size() != c.size())
            throw ValidationError("evaluator returned " + std::to_string(cand.throughput.size()) +
                                  " throughputs for " + std::to_string(c.size()) + " eNBs");
        cand.fairness = jfi(cand.throughput);
        cand.allocation = std::move(a);
        return cand;
    };

    auto first = evaluate(mdca(c, cfg.num_channels));
    auto second = evaluate(odrs_ca(c, cfg.num_channels));
    return select(std::move(first), std::move(second), cfg.delta);
}

} // namespace tvws
