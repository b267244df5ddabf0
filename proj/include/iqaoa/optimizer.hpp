#pragma once

#include "iqaoa/circuit.hpp"
#include "iqaoa/distribution.hpp"
#include "iqaoa/instance.hpp"
#include "iqaoa/rank_codec.hpp"
#include "iqaoa/schedule.hpp"

#include <cstdint>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

namespace iqaoa {

/// Sampling objective over p shots:
///   c      = xi * mean + theta * m_term
///   m_term = min * (p - min_count)
struct ObjectiveValue {
    double c = 0.0;
    double mean_makespan = 0.0;
    int min_makespan = 0;
    std::uint64_t min_count = 0;
    double m_term = 0.0;

    friend bool operator==(const ObjectiveValue&, const ObjectiveValue&) = default;
};

ObjectiveValue objective_from_makespans(std::span<const int> makespans, double xi, double theta);

struct GaConfig {
    unsigned generations = 200;
    unsigned population = 15;
    unsigned tournament_size = 3;
    double mutation_probability = 0.70;
    double mutation_gene_fraction = 0.25;
    /// Mutated genes move by a uniform step in [-mutation_step, mutation_step].
    double mutation_step = 1.0;
    double gene_min = -std::numbers::pi;
    double gene_max = std::numbers::pi;
    unsigned depth = 2;
    Mixer mixer = Mixer::RyAfterChain;
    InitialState initial = InitialState::Zero;
    std::size_t shots_per_eval = 1000;
    double xi = 100000.0;
    double theta = 1.0;
    std::uint64_t seed = 1;
    unsigned workers = 1;
    /// Decode every shot to a full schedule and run check_schedule on it.
    bool check_schedules = false;

    void validate() const;
};

/// measured basis index -> rank (mod total) -> vector -> makespan.
class ShotDecoder {
public:
    explicit ShotDecoder(const JsspInstance& inst);

    unsigned qubit_count() const noexcept { return codec_.qubit_count(); }
    const RankCodec& codec() const noexcept { return codec_; }

    int makespan(std::uint64_t basis_index);
    BierwirthVector vector(std::uint64_t basis_index) const;
    Schedule schedule(std::uint64_t basis_index) const;

private:
    const JsspInstance* inst_;
    RankCodec codec_;
    MakespanDecoder decoder_;
    BierwirthVector buffer_;
};

/// Per-evaluator counters for the schedule feasibility audit.
struct AuditCounters {
    std::uint64_t shots_checked = 0;
    std::uint64_t infeasible = 0;
};

/// Runs the circuit, samples shots with `seed`, decodes, and scores.
class ObjectiveEvaluator {
public:
    ObjectiveEvaluator(const JsspInstance& inst, const GaConfig& cfg);

    ObjectiveValue operator()(const CircuitParams& params, std::uint64_t seed);
    /// Makespans of a fresh shot batch (no scoring).
    std::vector<int> sample_makespans(const CircuitParams& params, std::size_t shots, std::uint64_t seed);

    const AuditCounters& audit() const noexcept { return audit_; }

private:
    const JsspInstance* inst_;
    GaConfig cfg_;
    ShotDecoder decoder_;
    AuditCounters audit_;
};

ObjectiveValue evaluate_objective(const JsspInstance& inst, const CircuitParams& params, const GaConfig& cfg,
                                  std::uint64_t seed);

/// Chromosome layout: gammas then betas, `depth` of each.
CircuitParams params_from_genes(std::span<const double> genes, Mixer mixer,
                                InitialState initial = InitialState::Zero);

struct GenerationRecord {
    unsigned generation = 0;
    std::vector<double> best_genes;
    ObjectiveValue best;  // best-so-far
};

struct OptimizationResult {
    CircuitParams best_params;
    ObjectiveValue best_objective;
    std::vector<GenerationRecord> history;  // entry 0 is the initial population
    MakespanDistribution final_distribution;
    std::uint64_t final_seed = 0;
    GaConfig config;
    std::size_t evaluations = 0;
    std::size_t unique_evaluations = 0;
    AuditCounters audit;
    // Run-level extremes of the two weighted objective terms.
    double min_weighted_mean = 0.0;
    double max_weighted_scarcity = 0.0;
};

/// Genetic search over circuit angles minimizing the sampling objective.
/// Tournament parent selection, single-point crossover, additive uniform
/// mutation, one elite carried over with its recorded objective. Results
/// are independent of `workers`.
OptimizationResult run_ga(const JsspInstance& inst, const GaConfig& cfg,
                          const std::function<void(const GenerationRecord&)>& on_generation = {});

/// P_final(opt) / P_initial(opt) where opt is the initial distribution's
/// minimum; 0 if the final distribution never reaches opt.
double amplification(const MakespanDistribution& initial, const MakespanDistribution& final_dist);

}  // namespace iqaoa
