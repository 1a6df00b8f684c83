// Fairness constrained channel allocation.
//
// Two greedy graph-colouring allocators run over the conflict graph:
//
//  * MDCA ("multiple dedicated"): repeated colouring rounds in eNB index
//    order, each eNB taking the lowest channel not held by itself or any
//    neighbour. Rounds continue while, at the start of a round, every eNB
//    still has a feasible channel. An eNB whose feasible set empties in the
//    middle of a round is skipped for that round.
//
//  * ODRS-CA ("one dedicated, rest shared"): one colouring pass gives each
//    eNB its lowest channel not dedicated to a neighbour. A second pass
//    gives each eNB, in shared mode, every channel that is neither its own
//    dedicated channel nor dedicated to a neighbour. Neighbours may hold the
//    same shared channel; they contend for it with listen-before-talk.
//
// fcca() evaluates both candidates and picks one by Jain's fairness index
// against a threshold delta (default 0.75).

#ifndef TVWS_FCCA_HPP
#define TVWS_FCCA_HPP

#include "tvws/model.hpp"

#include <functional>
#include <span>
#include <vector>

namespace tvws {

inline constexpr double kDefaultDelta = 0.75;

struct FccaConfig
{
    double delta = kDefaultDelta;
    std::size_t num_channels = 4;
};

/// Throws ValidationError if any eNB has num_channels or more neighbours.
Allocation mdca(const InterferenceMatrix& c, std::size_t num_channels);
Allocation odrs_ca(const InterferenceMatrix& c, std::size_t num_channels);

/// (sum T)^2 / (K sum T^2). Throws ValidationError on an empty vector,
/// negative entries, or an all-zero vector.
double jfi(std::span<const double> throughputs);

using Evaluator = std::function<std::vector<double>(const Allocation&)>;

enum class SelectionReason
{
    OnlyMdcaFair,
    OnlyOdrsFair,
    BothFairMaxThroughput,
    NeitherFairMaxFairness,
};

const char* to_string(SelectionReason r);

struct Candidate
{
    Allocation allocation;
    std::vector<double> throughput;
    double fairness = 0.0;
    double total() const;
};

struct FccaOutcome
{
    Allocation chosen;
    SubAlgorithm chosen_sub_algorithm = SubAlgorithm::None;
    SelectionReason reason = SelectionReason::NeitherFairMaxFairness;
    Candidate candidate_mdca;
    Candidate candidate_odrs;
};

/// Applies the selection rule to two already evaluated candidates.
/// Exactly one fair: take it. Both fair: larger total throughput, ties to
/// ODRS-CA. Neither fair: larger fairness, ties to ODRS-CA.
FccaOutcome select(Candidate mdca_candidate, Candidate odrs_candidate, double delta);

FccaOutcome fcca(const InterferenceMatrix& c, const FccaConfig& cfg, const Evaluator& evaluator);

} // namespace tvws

#endif
