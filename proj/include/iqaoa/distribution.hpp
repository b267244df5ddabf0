#pragma once

#include "iqaoa/instance.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>

namespace iqaoa {

/// Exact makespan histogram, either over the full vector space or over a
/// batch of measurement shots.
struct MakespanDistribution {
    std::map<int, std::uint64_t> counts;
    std::uint64_t total = 0;

    void add(int makespan, std::uint64_t n = 1) {
        counts[makespan] += n;
        total += n;
    }
    void merge(const MakespanDistribution& other) {
        for (const auto& [ms, n] : other.counts) {
            add(ms, n);
        }
    }

    bool empty() const noexcept { return total == 0; }
    std::uint64_t count(int makespan) const;
    double probability(int makespan) const;
    int min_makespan() const;

    friend bool operator==(const MakespanDistribution&, const MakespanDistribution&) = default;
};

double optimum_probability(const MakespanDistribution& dist);

/// Smallest t with P(makespan <= t) >= 0.25, compared exactly in integers.
int lower_quartile(const MakespanDistribution& dist);

MakespanDistribution sample_distribution(std::span<const int> shot_makespans);

/// `makespan,count,probability` rows, ascending makespan; probability is a
/// fraction in [0, 1].
std::string to_csv(const MakespanDistribution& dist);
MakespanDistribution parse_distribution_csv(std::string_view csv);

}  // namespace iqaoa
