#include "iqaoa/report.hpp"

#include "iqaoa/error.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace iqaoa {

Json schedule_json(const JsspInstance& inst, const Schedule& s) {
    Json ops = Json::array();
    for (int j = 0; j < inst.n_jobs(); ++j) {
        for (int k = 0; k < inst.n_machines(); ++k) {
            ops.push_back({{"job", j},
                           {"op", k},
                           {"machine", inst.op(j, k).machine},
                           {"start", s.start[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]},
                           {"end", s.end(inst, j, k)}});
        }
    }
    return {{"makespan", s.makespan}, {"operations", std::move(ops)}};
}

Json distribution_summary(const MakespanDistribution& dist) {
    return {{"total", dist.total},
            {"min", dist.min_makespan()},
            {"optimum_probability", optimum_probability(dist)},
            {"lower_quartile", lower_quartile(dist)}};
}

Json config_json(const GaConfig& cfg) {
    return {{"generations", cfg.generations},
            {"population", cfg.population},
            {"tournament_size", cfg.tournament_size},
            {"mutation_probability", cfg.mutation_probability},
            {"mutation_gene_fraction", cfg.mutation_gene_fraction},
            {"mutation_step", cfg.mutation_step},
            {"gene_min", cfg.gene_min},
            {"gene_max", cfg.gene_max},
            {"depth", cfg.depth},
            {"mixer", mixer_tag(cfg.mixer)},
            {"initial_state", initial_state_name(cfg.initial)},
            {"shots_per_eval", cfg.shots_per_eval},
            {"xi", cfg.xi},
            {"theta", cfg.theta},
            {"seed", cfg.seed},
            {"check_schedules", cfg.check_schedules}};
}

GaConfig config_from_json(const Json& j) {
    GaConfig cfg;
    cfg.generations = j.at("generations").get<unsigned>();
    cfg.population = j.at("population").get<unsigned>();
    cfg.tournament_size = j.at("tournament_size").get<unsigned>();
    cfg.mutation_probability = j.at("mutation_probability").get<double>();
    cfg.mutation_gene_fraction = j.at("mutation_gene_fraction").get<double>();
    cfg.mutation_step = j.at("mutation_step").get<double>();
    cfg.gene_min = j.at("gene_min").get<double>();
    cfg.gene_max = j.at("gene_max").get<double>();
    cfg.depth = j.at("depth").get<unsigned>();
    cfg.mixer = mixer_from_tag(j.at("mixer").get<int>());
    cfg.initial = initial_state_from_name(j.at("initial_state").get<std::string>());
    cfg.shots_per_eval = j.at("shots_per_eval").get<std::size_t>();
    cfg.xi = j.at("xi").get<double>();
    cfg.theta = j.at("theta").get<double>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.check_schedules = j.value("check_schedules", false);
    return cfg;
}

namespace {

Json objective_json(const ObjectiveValue& v) {
    return {{"c", v.c},
            {"mean_makespan", v.mean_makespan},
            {"min_makespan", v.min_makespan},
            {"min_count", v.min_count},
            {"m_term", v.m_term}};
}

Json distribution_rows(const MakespanDistribution& dist) {
    Json rows = Json::array();
    for (const auto& [ms, n] : dist.counts) {
        rows.push_back({{"makespan", ms}, {"count", n}, {"probability", dist.probability(ms)}});
    }
    return rows;
}

}  // namespace

Json result_json(const std::string& instance_label, const OptimizationResult& result,
                 const std::optional<MakespanDistribution>& initial) {
    Json history = Json::array();
    for (const auto& rec : result.history) {
        history.push_back(rec.best.c);
    }
    Json j = {{"instance", instance_label},
              {"config", config_json(result.config)},
              {"seed", result.config.seed},
              {"final_seed", result.final_seed},
              {"best_gammas", result.best_params.gammas},
              {"best_betas", result.best_params.betas},
              {"mixer", mixer_tag(result.best_params.mixer)},
              {"best_objective", objective_json(result.best_objective)},
              {"history", std::move(history)},
              {"evaluations", result.evaluations},
              {"unique_evaluations", result.unique_evaluations},
              {"final_distribution", distribution_rows(result.final_distribution)}};
    if (initial) {
        j["initial_summary"] = distribution_summary(*initial);
        j["amplification"] = amplification(*initial, result.final_distribution);
    } else {
        j["amplification"] = nullptr;
    }
    if (result.config.check_schedules) {
        j["audit"] = {{"shots_checked", result.audit.shots_checked}, {"infeasible", result.audit.infeasible}};
    }
    return j;
}

std::string convergence_csv(const OptimizationResult& result) {
    std::ostringstream out;
    const std::size_t depth = result.config.depth;
    out << "generation";
    for (std::size_t l = 1; l <= depth; ++l) out << ",beta_" << l;
    for (std::size_t l = 1; l <= depth; ++l) out << ",gamma_" << l;
    out << ",objective,mean_makespan,min_makespan,min_count,m_term\n";
    char buf[64];
    auto num = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.6f", v);
        return std::string(buf);
    };
    for (const auto& rec : result.history) {
        out << rec.generation;
        for (std::size_t l = 0; l < depth; ++l) out << ',' << num(rec.best_genes[depth + l]);
        for (std::size_t l = 0; l < depth; ++l) out << ',' << num(rec.best_genes[l]);
        out << ',' << num(rec.best.c) << ',' << num(rec.best.mean_makespan) << ',' << rec.best.min_makespan << ','
            << rec.best.min_count << ',' << num(rec.best.m_term) << '\n';
    }
    return out.str();
}

std::string histogram_svg(const MakespanDistribution& primary, const std::optional<MakespanDistribution>& secondary) {
    std::vector<int> axis;
    for (const auto& [ms, n] : primary.counts) axis.push_back(ms);
    if (secondary) {
        for (const auto& [ms, n] : secondary->counts) axis.push_back(ms);
    }
    std::sort(axis.begin(), axis.end());
    axis.erase(std::unique(axis.begin(), axis.end()), axis.end());

    double peak = 0.0;
    for (int ms : axis) {
        peak = std::max(peak, primary.probability(ms));
        if (secondary) peak = std::max(peak, secondary->probability(ms));
    }
    if (peak <= 0.0) peak = 1.0;

    const int bar = 12;
    const int gap = 6;
    const int slot = (secondary ? 2 * bar : bar) + gap;
    const int height = 240;
    const int width = 40 + slot * static_cast<int>(axis.size());
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height + 40
        << "\" font-family=\"sans-serif\" font-size=\"9\">\n";
    for (std::size_t i = 0; i < axis.size(); ++i) {
        const int x = 20 + slot * static_cast<int>(i);
        auto draw = [&](double p, int offset, const char* colour) {
            const int h = static_cast<int>(p / peak * height);
            svg << "  <rect x=\"" << x + offset << "\" y=\"" << 10 + height - h << "\" width=\"" << bar
                << "\" height=\"" << h << "\" fill=\"" << colour << "\"/>\n";
        };
        draw(primary.probability(axis[i]), 0, "#4c72b0");
        if (secondary) draw(secondary->probability(axis[i]), bar, "#dd8452");
        svg << "  <text x=\"" << x << "\" y=\"" << height + 25 << "\">" << axis[i] << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw IoError("cannot write '" + path.string() + "'");
    }
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace iqaoa
