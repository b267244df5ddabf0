#pragma once

#include "iqaoa/bigint.hpp"

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace iqaoa {

struct Operation {
    int machine = 0;
    int duration = 1;

    friend bool operator==(const Operation&, const Operation&) = default;
};

/// A job-shop instance: every job visits every machine exactly once, in its
/// own routing order. Immutable once constructed.
class JsspInstance {
public:
    /// Validates the routing table; throws ValidationError on any violation.
    JsspInstance(int n_machines, std::vector<std::vector<Operation>> jobs);

    int n_jobs() const noexcept { return static_cast<int>(jobs_.size()); }
    int n_machines() const noexcept { return n_machines_; }
    std::size_t n_operations() const noexcept { return jobs_.size() * static_cast<std::size_t>(n_machines_); }

    const std::vector<Operation>& job(int j) const { return jobs_.at(static_cast<std::size_t>(j)); }
    const Operation& op(int j, int k) const { return job(j).at(static_cast<std::size_t>(k)); }
    const std::vector<std::vector<Operation>>& jobs() const noexcept { return jobs_; }

    friend bool operator==(const JsspInstance&, const JsspInstance&) = default;

private:
    int n_machines_;
    std::vector<std::vector<Operation>> jobs_;
};

/// Parses the text instance format:
///   line 1: `<n_jobs> <n_machines>`
///   then one line per job with `<machine> <duration>` pairs in routing order.
/// `#` starts a comment; blank lines are ignored. Machines are 0-indexed.
JsspInstance parse_instance(std::string_view text);

JsspInstance load_instance(const std::filesystem::path& path);

std::string render_instance(const JsspInstance& inst);

/// (n*m)! / (m!)^n, the number of distinct job-repetition vectors.
BigInt total_vector_count(const JsspInstance& inst);
BigInt total_vector_count(int n_jobs, int n_machines);

/// Sum of durations on the busiest machine.
int machine_load_bound(const JsspInstance& inst);
/// Longest total processing time of a single job.
int job_length_bound(const JsspInstance& inst);

}  // namespace iqaoa
