#pragma once

#include "iqaoa/distribution.hpp"
#include "iqaoa/instance.hpp"

#include <cstdint>

namespace iqaoa {

struct EnumerationOptions {
    std::uint64_t budget = 100'000'000;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned workers = 0;
};

/// Decodes every job-repetition vector exactly once. The rank space is cut
/// into contiguous ranges, one per worker; each worker unranks its first
/// vector and then steps with std::next_permutation. Per-worker histograms
/// are merged afterwards, so the result does not depend on `workers`.
/// Throws BudgetError if the vector count exceeds `budget`.
MakespanDistribution enumerate_distribution(const JsspInstance& inst, const EnumerationOptions& options = {});

/// Cross-check path: unranks every r in [first, last) independently.
MakespanDistribution enumerate_by_unrank(const JsspInstance& inst, std::uint64_t first, std::uint64_t last);

}  // namespace iqaoa
