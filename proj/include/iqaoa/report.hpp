#pragma once

#include "iqaoa/distribution.hpp"
#include "iqaoa/instance.hpp"
#include "iqaoa/optimizer.hpp"
#include "iqaoa/schedule.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace iqaoa {

using Json = nlohmann::ordered_json;

inline constexpr const char* kManifestSchema = "iqaoa-manifest/1";

/// {"makespan": .., "operations": [{job, op, machine, start, end}, ...]}
Json schedule_json(const JsspInstance& inst, const Schedule& s);

/// {"total", "min", "optimum_probability", "lower_quartile"}
Json distribution_summary(const MakespanDistribution& dist);

Json config_json(const GaConfig& cfg);
GaConfig config_from_json(const Json& j);

/// Full result record; `initial` enables the amplification field.
Json result_json(const std::string& instance_label, const OptimizationResult& result,
                 const std::optional<MakespanDistribution>& initial);

/// generation, beta_1..beta_D, gamma_1..gamma_D, objective, mean_makespan,
/// min_makespan, min_count, m_term
std::string convergence_csv(const OptimizationResult& result);

/// Simple bar chart of one or two distributions over a shared makespan axis.
std::string histogram_svg(const MakespanDistribution& primary, const std::optional<MakespanDistribution>& secondary);

void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace iqaoa
