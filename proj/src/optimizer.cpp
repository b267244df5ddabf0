#include "iqaoa/optimizer.hpp"

#include "iqaoa/error.hpp"
#include "iqaoa/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <exception>
#include <limits>
#include <set>
#include <thread>

namespace iqaoa {

ObjectiveValue objective_from_makespans(std::span<const int> makespans, double xi, double theta) {
    if (makespans.empty()) {
        throw ValidationError("objective needs at least one shot");
    }
    ObjectiveValue v;
    v.min_makespan = *std::min_element(makespans.begin(), makespans.end());
    long double sum = 0;
    for (int ms : makespans) {
        sum += ms;
        if (ms == v.min_makespan) {
            ++v.min_count;
        }
    }
    const auto p = static_cast<double>(makespans.size());
    v.mean_makespan = static_cast<double>(sum / static_cast<long double>(makespans.size()));
    v.m_term = static_cast<double>(v.min_makespan) * (p - static_cast<double>(v.min_count));
    v.c = xi * v.mean_makespan + theta * v.m_term;
    return v;
}

void GaConfig::validate() const {
    if (population < 2) throw ValidationError("population must be at least 2");
    if (tournament_size < 1) throw ValidationError("tournament size must be at least 1");
    if (!(mutation_probability >= 0.0 && mutation_probability <= 1.0))
        throw ValidationError("mutation probability must lie in [0, 1]");
    if (!(mutation_gene_fraction >= 0.0 && mutation_gene_fraction <= 1.0))
        throw ValidationError("mutation gene fraction must lie in [0, 1]");
    if (!(gene_min < gene_max)) throw ValidationError("gene bounds are empty");
    if (depth < 1) throw ValidationError("depth must be at least 1");
    if (shots_per_eval < 1) throw ValidationError("shots per evaluation must be at least 1");
    (void)mixer_from_tag(mixer_tag(mixer));
}

ShotDecoder::ShotDecoder(const JsspInstance& inst)
    : inst_(&inst), codec_(inst), decoder_(inst), buffer_(inst.n_operations()) {
    if (!codec_.fits_u64()) {
        throw BudgetError("rank space too large to simulate", codec_.total().str());
    }
}

int ShotDecoder::makespan(std::uint64_t basis_index) {
    codec_.unrank_u64(codec_.basis_to_rank(basis_index), buffer_);
    return decoder_(buffer_);
}

BierwirthVector ShotDecoder::vector(std::uint64_t basis_index) const {
    BierwirthVector v(inst_->n_operations());
    codec_.unrank_u64(codec_.basis_to_rank(basis_index), v);
    return v;
}

Schedule ShotDecoder::schedule(std::uint64_t basis_index) const { return decode(*inst_, vector(basis_index)); }

ObjectiveEvaluator::ObjectiveEvaluator(const JsspInstance& inst, const GaConfig& cfg)
    : inst_(&inst), cfg_(cfg), decoder_(inst) {}

std::vector<int> ObjectiveEvaluator::sample_makespans(const CircuitParams& params, std::size_t shots,
                                                      std::uint64_t seed) {
    const auto state = run_circuit(decoder_.qubit_count(), params);
    const auto batch = sample(state, shots, seed);
    std::vector<int> makespans;
    makespans.reserve(shots);
    for (std::uint64_t outcome : batch.outcomes) {
        const int ms = decoder_.makespan(outcome);
        if (cfg_.check_schedules) {
            const auto schedule = decoder_.schedule(outcome);
            ++audit_.shots_checked;
            if (!check_schedule(*inst_, schedule).empty() || schedule.makespan != ms) {
                ++audit_.infeasible;
            }
        }
        makespans.push_back(ms);
    }
    return makespans;
}

ObjectiveValue ObjectiveEvaluator::operator()(const CircuitParams& params, std::uint64_t seed) {
    const auto makespans = sample_makespans(params, cfg_.shots_per_eval, seed);
    return objective_from_makespans(makespans, cfg_.xi, cfg_.theta);
}

ObjectiveValue evaluate_objective(const JsspInstance& inst, const CircuitParams& params, const GaConfig& cfg,
                                  std::uint64_t seed) {
    ObjectiveEvaluator eval(inst, cfg);
    return eval(params, seed);
}

CircuitParams params_from_genes(std::span<const double> genes, Mixer mixer, InitialState initial) {
    if (genes.empty() || genes.size() % 2 != 0) {
        throw ValidationError("chromosome must hold gammas and betas in equal number");
    }
    const std::size_t depth = genes.size() / 2;
    CircuitParams p;
    p.gammas.assign(genes.begin(), genes.begin() + static_cast<std::ptrdiff_t>(depth));
    p.betas.assign(genes.begin() + static_cast<std::ptrdiff_t>(depth), genes.end());
    p.mixer = mixer;
    p.initial = initial;
    return p;
}

namespace {

struct Chromosome {
    std::vector<double> genes;
    ObjectiveValue value;
};

constexpr std::uint64_t kFinalSampleStream = 0xF17A1ULL;
constexpr std::uint64_t kBreedingStream = 0xB12EEDULL;

bool better(const ObjectiveValue& a, const ObjectiveValue& b) { return a.c < b.c; }

std::size_t best_index(const std::vector<Chromosome>& pop) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pop.size(); ++i) {
        if (better(pop[i].value, pop[best].value)) {
            best = i;
        }
    }
    return best;
}

class Ga {
public:
    Ga(const JsspInstance& inst, const GaConfig& cfg) : cfg_(cfg) {
        const unsigned workers = std::max(1u, cfg.workers);
        for (unsigned w = 0; w < workers; ++w) {
            evaluators_.emplace_back(inst, cfg);
        }
    }

    // Evaluates `batch` in place. Evaluation i uses seed stream
    // (evaluations_ + i), so the outcome does not depend on the worker count.
    void evaluate(std::vector<Chromosome>& batch) {
        const std::size_t first = evaluations_;
        const std::size_t workers = std::min(evaluators_.size(), batch.size());
        auto run = [&](std::size_t w) {
            for (std::size_t i = w; i < batch.size(); i += workers) {
                const auto params = params_from_genes(batch[i].genes, cfg_.mixer, cfg_.initial);
                batch[i].value = evaluators_[w](params, substream_seed(cfg_.seed, first + i));
            }
        };
        if (workers <= 1) {
            run(0);
        } else {
            std::vector<std::exception_ptr> errors(workers);
            {
                std::vector<std::jthread> threads;
                for (std::size_t w = 0; w < workers; ++w) {
                    threads.emplace_back([&, w] {
                        try {
                            run(w);
                        } catch (...) {
                            errors[w] = std::current_exception();
                        }
                    });
                }
            }
            for (auto& e : errors) {
                if (e) std::rethrow_exception(e);
            }
        }
        evaluations_ += batch.size();
        for (const auto& c : batch) {
            unique_.insert(c.genes);
            min_weighted_mean_ = std::min(min_weighted_mean_, cfg_.xi * c.value.mean_makespan);
            max_weighted_scarcity_ = std::max(max_weighted_scarcity_, cfg_.theta * c.value.m_term);
        }
    }

    const Chromosome& tournament(const std::vector<Chromosome>& pop, Rng& rng) const {
        std::size_t best = rng.below(pop.size());
        for (unsigned t = 1; t < cfg_.tournament_size; ++t) {
            const std::size_t challenger = rng.below(pop.size());
            if (better(pop[challenger].value, pop[best].value)) {
                best = challenger;
            }
        }
        return pop[best];
    }

    Chromosome breed(const std::vector<Chromosome>& pop, Rng& rng) const {
        const auto& a = tournament(pop, rng);
        const auto& b = tournament(pop, rng);
        const std::size_t n = a.genes.size();
        Chromosome child;
        child.genes = a.genes;
        if (n > 1) {
            const std::size_t cut = 1 + rng.below(n - 1);
            std::copy(b.genes.begin() + static_cast<std::ptrdiff_t>(cut), b.genes.end(),
                      child.genes.begin() + static_cast<std::ptrdiff_t>(cut));
        }
        if (rng.uniform() < cfg_.mutation_probability) {
            auto k = static_cast<std::size_t>(std::lround(cfg_.mutation_gene_fraction * static_cast<double>(n)));
            k = std::clamp<std::size_t>(k, 1, n);
            std::vector<std::size_t> idx(n);
            for (std::size_t i = 0; i < n; ++i) idx[i] = i;
            for (std::size_t i = 0; i < k; ++i) {
                std::swap(idx[i], idx[i + rng.below(n - i)]);
                double& g = child.genes[idx[i]];
                g = std::clamp(g + rng.uniform(-cfg_.mutation_step, cfg_.mutation_step), cfg_.gene_min,
                               cfg_.gene_max);
            }
        }
        return child;
    }

    OptimizationResult run(const std::function<void(const GenerationRecord&)>& on_generation) {
        Rng rng(substream_seed(cfg_.seed, kBreedingStream));
        const std::size_t genes = 2 * static_cast<std::size_t>(cfg_.depth);

        std::vector<Chromosome> pop(cfg_.population);
        for (auto& c : pop) {
            c.genes.resize(genes);
            for (auto& g : c.genes) g = rng.uniform(cfg_.gene_min, cfg_.gene_max);
        }
        evaluate(pop);

        OptimizationResult result;
        result.config = cfg_;
        Chromosome best = pop[best_index(pop)];
        auto record = [&](unsigned generation) {
            GenerationRecord rec{generation, best.genes, best.value};
            if (on_generation) on_generation(rec);
            result.history.push_back(std::move(rec));
        };
        record(0);

        for (unsigned gen = 1; gen <= cfg_.generations; ++gen) {
            const Chromosome elite = pop[best_index(pop)];
            std::vector<Chromosome> children;
            children.reserve(cfg_.population - 1);
            for (unsigned i = 0; i + 1 < cfg_.population; ++i) {
                children.push_back(breed(pop, rng));
            }
            evaluate(children);
            pop.clear();
            pop.push_back(elite);
            pop.insert(pop.end(), children.begin(), children.end());
            const auto& gen_best = pop[best_index(pop)];
            if (better(gen_best.value, best.value)) {
                best = gen_best;
            }
            record(gen);
        }

        result.best_params = params_from_genes(best.genes, cfg_.mixer, cfg_.initial);
        result.best_objective = best.value;
        result.final_seed = substream_seed(cfg_.seed, kFinalSampleStream);
        result.final_distribution = sample_distribution(
            evaluators_[0].sample_makespans(result.best_params, cfg_.shots_per_eval, result.final_seed));
        result.evaluations = evaluations_;
        result.unique_evaluations = unique_.size();
        for (const auto& e : evaluators_) {
            result.audit.shots_checked += e.audit().shots_checked;
            result.audit.infeasible += e.audit().infeasible;
        }
        result.min_weighted_mean = min_weighted_mean_;
        result.max_weighted_scarcity = max_weighted_scarcity_;
        return result;
    }

private:
    GaConfig cfg_;
    std::vector<ObjectiveEvaluator> evaluators_;
    std::size_t evaluations_ = 0;
    std::set<std::vector<double>> unique_;
    double min_weighted_mean_ = std::numeric_limits<double>::infinity();
    double max_weighted_scarcity_ = 0.0;
};

}  // namespace

OptimizationResult run_ga(const JsspInstance& inst, const GaConfig& cfg,
                          const std::function<void(const GenerationRecord&)>& on_generation) {
    cfg.validate();
    Ga ga(inst, cfg);
    return ga.run(on_generation);
}

double amplification(const MakespanDistribution& initial, const MakespanDistribution& final_dist) {
    const int opt = initial.min_makespan();
    if (final_dist.count(opt) == 0) {
        return 0.0;
    }
    return final_dist.probability(opt) / initial.probability(opt);
}

}  // namespace iqaoa
