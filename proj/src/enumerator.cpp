#include "iqaoa/enumerator.hpp"

#include "iqaoa/error.hpp"
#include "iqaoa/rank_codec.hpp"
#include "iqaoa/schedule.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace iqaoa {

namespace {

MakespanDistribution enumerate_range(const JsspInstance& inst, const RankCodec& codec, std::uint64_t first,
                                     std::uint64_t count) {
    MakespanDistribution local;
    if (count == 0) {
        return local;
    }
    BierwirthVector v(inst.n_operations());
    codec.unrank_u64(first, v);
    MakespanDecoder decoder(inst);
    // Small dense histogram; makespans are bounded by the sum of all durations.
    int horizon = 0;
    for (const auto& ops : inst.jobs()) {
        for (const auto& op : ops) {
            horizon += op.duration;
        }
    }
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(horizon) + 1, 0);
    for (std::uint64_t i = 0; i < count; ++i) {
        ++hist[static_cast<std::size_t>(decoder(v))];
        std::next_permutation(v.begin(), v.end());
    }
    for (std::size_t ms = 0; ms < hist.size(); ++ms) {
        if (hist[ms]) {
            local.add(static_cast<int>(ms), hist[ms]);
        }
    }
    return local;
}

}  // namespace

MakespanDistribution enumerate_distribution(const JsspInstance& inst, const EnumerationOptions& options) {
    RankCodec codec(inst);
    if (codec.total() > options.budget) {
        throw BudgetError("instance has " + codec.total().str() + " vectors, above the enumeration budget of " +
                              std::to_string(options.budget),
                          codec.total().str());
    }
    const std::uint64_t total = codec.total().convert_to<std::uint64_t>();
    unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(total, 1)));

    std::vector<MakespanDistribution> partial(workers);
    std::vector<std::exception_ptr> errors(workers);
    auto run = [&](unsigned w) {
        const std::uint64_t first = total * w / workers;
        const std::uint64_t last = total * (w + 1) / workers;
        try {
            partial[w] = enumerate_range(inst, codec, first, last - first);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> threads;
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back(run, w);
        }
    }
    MakespanDistribution merged;
    for (unsigned w = 0; w < workers; ++w) {
        if (errors[w]) {
            std::rethrow_exception(errors[w]);
        }
        merged.merge(partial[w]);
    }
    return merged;
}

MakespanDistribution enumerate_by_unrank(const JsspInstance& inst, std::uint64_t first, std::uint64_t last) {
    RankCodec codec(inst);
    MakespanDecoder decoder(inst);
    BierwirthVector v(inst.n_operations());
    MakespanDistribution dist;
    for (std::uint64_t r = first; r < last; ++r) {
        codec.unrank_u64(r, v);
        dist.add(decoder(v));
    }
    return dist;
}

}  // namespace iqaoa
