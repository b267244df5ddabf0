#include "iqaoa/distribution.hpp"

#include "iqaoa/error.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

namespace iqaoa {

std::uint64_t MakespanDistribution::count(int makespan) const {
    auto it = counts.find(makespan);
    return it == counts.end() ? 0 : it->second;
}

double MakespanDistribution::probability(int makespan) const {
    return total == 0 ? 0.0 : static_cast<double>(count(makespan)) / static_cast<double>(total);
}

int MakespanDistribution::min_makespan() const {
    if (counts.empty()) {
        throw ValidationError("empty distribution");
    }
    return counts.begin()->first;
}

double optimum_probability(const MakespanDistribution& dist) { return dist.probability(dist.min_makespan()); }

int lower_quartile(const MakespanDistribution& dist) {
    if (dist.empty()) {
        throw ValidationError("empty distribution");
    }
    std::uint64_t cumulative = 0;
    for (const auto& [ms, n] : dist.counts) {
        cumulative += n;
        if (cumulative >= dist.total / 4 + (dist.total % 4 != 0)) {  // 4 * cumulative >= total
            return ms;
        }
    }
    return dist.counts.rbegin()->first;
}

MakespanDistribution sample_distribution(std::span<const int> shot_makespans) {
    if (shot_makespans.empty()) {
        throw ValidationError("no shots");
    }
    MakespanDistribution dist;
    for (int ms : shot_makespans) {
        dist.add(ms);
    }
    return dist;
}

std::string to_csv(const MakespanDistribution& dist) {
    std::ostringstream out;
    out << "makespan,count,probability\n";
    char buf[32];
    for (const auto& [ms, n] : dist.counts) {
        std::snprintf(buf, sizeof buf, "%.6f", dist.probability(ms));
        out << ms << ',' << n << ',' << buf << '\n';
    }
    return out.str();
}

MakespanDistribution parse_distribution_csv(std::string_view csv) {
    MakespanDistribution dist;
    bool header = true;
    while (!csv.empty()) {
        auto nl = csv.find('\n');
        std::string_view line = csv.substr(0, nl);
        csv = nl == std::string_view::npos ? std::string_view{} : csv.substr(nl + 1);
        if (line.empty()) {
            continue;
        }
        if (header) {
            if (line.rfind("makespan,count", 0) != 0) {
                throw ParseError("distribution CSV must start with 'makespan,count,probability'");
            }
            header = false;
            continue;
        }
        auto c1 = line.find(',');
        auto c2 = line.find(',', c1 == std::string_view::npos ? c1 : c1 + 1);
        if (c1 == std::string_view::npos || c2 == std::string_view::npos) {
            throw ParseError("malformed distribution row '" + std::string(line) + "'");
        }
        int ms = 0;
        std::uint64_t n = 0;
        auto a = std::from_chars(line.data(), line.data() + c1, ms);
        auto b = std::from_chars(line.data() + c1 + 1, line.data() + c2, n);
        if (a.ec != std::errc{} || b.ec != std::errc{}) {
            throw ParseError("malformed distribution row '" + std::string(line) + "'");
        }
        dist.add(ms, n);
    }
    return dist;
}

}  // namespace iqaoa
