#include "iqaoa/schedule.hpp"

#include "iqaoa/error.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace iqaoa {

void validate_vector(const JsspInstance& inst, std::span<const int> v) {
    if (v.size() != inst.n_operations()) {
        throw ValidationError("vector has length " + std::to_string(v.size()) + ", expected " +
                              std::to_string(inst.n_operations()));
    }
    std::vector<int> count(static_cast<std::size_t>(inst.n_jobs()), 0);
    for (int j : v) {
        if (j < 0 || j >= inst.n_jobs()) {
            throw ValidationError("vector entry " + std::to_string(j) + " is not a job index");
        }
        ++count[static_cast<std::size_t>(j)];
    }
    for (int j = 0; j < inst.n_jobs(); ++j) {
        if (count[static_cast<std::size_t>(j)] != inst.n_machines()) {
            throw ValidationError("job " + std::to_string(j) + " appears " +
                                  std::to_string(count[static_cast<std::size_t>(j)]) + " times, expected " +
                                  std::to_string(inst.n_machines()));
        }
    }
}

BierwirthVector parse_vector(std::string_view text) {
    BierwirthVector v;
    std::size_t i = 0;
    auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '[' || c == ']' || c == '\n'; };
    while (i < text.size()) {
        while (i < text.size() && is_sep(text[i])) {
            ++i;
        }
        if (i == text.size()) {
            break;
        }
        std::size_t start = i;
        while (i < text.size() && !is_sep(text[i])) {
            ++i;
        }
        int value = 0;
        auto token = text.substr(start, i - start);
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw ParseError("invalid vector entry '" + std::string(token) + "'");
        }
        v.push_back(value);
    }
    if (v.empty()) {
        throw ParseError("empty vector");
    }
    return v;
}

std::string format_vector(std::span<const int> v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out << (i ? "," : "") << v[i];
    }
    return out.str();
}

BierwirthVector identity_vector(const JsspInstance& inst) {
    BierwirthVector v;
    v.reserve(inst.n_operations());
    for (int j = 0; j < inst.n_jobs(); ++j) {
        v.insert(v.end(), static_cast<std::size_t>(inst.n_machines()), j);
    }
    return v;
}

Schedule decode(const JsspInstance& inst, std::span<const int> v) {
    validate_vector(inst, v);
    const auto n = static_cast<std::size_t>(inst.n_jobs());
    const auto m = static_cast<std::size_t>(inst.n_machines());

    Schedule s;
    s.start.assign(n, std::vector<int>(m, 0));
    s.machine_order.assign(m, {});
    std::vector<int> next_op(n, 0);
    std::vector<int> job_ready(n, 0);
    std::vector<int> machine_ready(m, 0);

    for (int j : v) {
        const auto ju = static_cast<std::size_t>(j);
        const int k = next_op[ju]++;
        const Operation& op = inst.op(j, k);
        const auto mu = static_cast<std::size_t>(op.machine);
        const int start = std::max(job_ready[ju], machine_ready[mu]);
        s.start[ju][static_cast<std::size_t>(k)] = start;
        job_ready[ju] = machine_ready[mu] = start + op.duration;
        s.machine_order[mu].push_back({j, k});
        s.makespan = std::max(s.makespan, start + op.duration);
    }
    return s;
}

MakespanDecoder::MakespanDecoder(const JsspInstance& inst)
    : n_machines_(inst.n_machines()),
      next_op_(static_cast<std::size_t>(inst.n_jobs())),
      job_ready_(static_cast<std::size_t>(inst.n_jobs())),
      machine_ready_(static_cast<std::size_t>(inst.n_machines())) {
    for (const auto& ops : inst.jobs()) {
        for (const auto& op : ops) {
            machine_.push_back(op.machine);
            duration_.push_back(op.duration);
        }
    }
}

int MakespanDecoder::operator()(std::span<const int> v) {
    std::fill(next_op_.begin(), next_op_.end(), 0);
    std::fill(job_ready_.begin(), job_ready_.end(), 0);
    std::fill(machine_ready_.begin(), machine_ready_.end(), 0);
    int makespan = 0;
    for (int j : v) {
        const auto ju = static_cast<std::size_t>(j);
        const auto idx = ju * static_cast<std::size_t>(n_machines_) + static_cast<std::size_t>(next_op_[ju]++);
        int& mready = machine_ready_[static_cast<std::size_t>(machine_[idx])];
        const int end = std::max(job_ready_[ju], mready) + duration_[idx];
        job_ready_[ju] = mready = end;
        makespan = std::max(makespan, end);
    }
    return makespan;
}

std::vector<std::string> check_schedule(const JsspInstance& inst, const Schedule& s) {
    std::vector<std::string> issues;
    const int n = inst.n_jobs();
    const int m = inst.n_machines();
    auto name = [](int j, int k) { return "O(" + std::to_string(j) + "," + std::to_string(k) + ")"; };

    if (s.start.size() != static_cast<std::size_t>(n)) {
        issues.push_back("start table has wrong job count");
        return issues;
    }
    for (int j = 0; j < n; ++j) {
        if (s.start[static_cast<std::size_t>(j)].size() != static_cast<std::size_t>(m)) {
            issues.push_back("start table has wrong operation count for job " + std::to_string(j));
            return issues;
        }
    }
    if (s.machine_order.size() != static_cast<std::size_t>(m)) {
        issues.push_back("machine order has wrong machine count");
        return issues;
    }

    // Each operation appears exactly once, on its own machine.
    std::vector<std::vector<int>> seen(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(m), 0));
    for (int mach = 0; mach < m; ++mach) {
        for (const auto& ref : s.machine_order[static_cast<std::size_t>(mach)]) {
            if (ref.job < 0 || ref.job >= n || ref.index < 0 || ref.index >= m) {
                issues.push_back("machine " + std::to_string(mach) + " lists an unknown operation");
                return issues;
            }
            if (inst.op(ref.job, ref.index).machine != mach) {
                issues.push_back(name(ref.job, ref.index) + " listed on wrong machine " + std::to_string(mach));
            }
            ++seen[static_cast<std::size_t>(ref.job)][static_cast<std::size_t>(ref.index)];
        }
    }
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < m; ++k) {
            if (seen[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] != 1) {
                issues.push_back(name(j, k) + " appears " +
                                 std::to_string(seen[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]) +
                                 " times in machine orders");
            }
        }
    }
    if (!issues.empty()) {
        return issues;
    }

    // Job precedence.
    for (int j = 0; j < n; ++j) {
        if (s.start[static_cast<std::size_t>(j)][0] < 0) {
            issues.push_back(name(j, 0) + " starts before time 0");
        }
        for (int k = 0; k + 1 < m; ++k) {
            if (s.start[static_cast<std::size_t>(j)][static_cast<std::size_t>(k) + 1] < s.end(inst, j, k)) {
                issues.push_back(name(j, k + 1) + " starts before its job predecessor ends");
            }
        }
    }

    // Machine exclusivity, independent of the declared order: sort by start.
    for (int mach = 0; mach < m; ++mach) {
        std::vector<std::pair<int, int>> intervals;
        for (const auto& ref : s.machine_order[static_cast<std::size_t>(mach)]) {
            intervals.emplace_back(s.start[static_cast<std::size_t>(ref.job)][static_cast<std::size_t>(ref.index)],
                                   s.end(inst, ref.job, ref.index));
        }
        std::sort(intervals.begin(), intervals.end());
        for (std::size_t i = 1; i < intervals.size(); ++i) {
            if (intervals[i].first < intervals[i - 1].second) {
                issues.push_back("machine " + std::to_string(mach) + " runs overlapping operations");
            }
        }
    }

    // Semi-activity: every start equals the later of its two predecessors' ends.
    for (int mach = 0; mach < m; ++mach) {
        const auto& order = s.machine_order[static_cast<std::size_t>(mach)];
        for (std::size_t i = 0; i < order.size(); ++i) {
            const auto& ref = order[i];
            int earliest = ref.index > 0 ? s.end(inst, ref.job, ref.index - 1) : 0;
            if (i > 0) {
                earliest = std::max(earliest, s.end(inst, order[i - 1].job, order[i - 1].index));
            }
            if (s.start[static_cast<std::size_t>(ref.job)][static_cast<std::size_t>(ref.index)] != earliest) {
                issues.push_back(name(ref.job, ref.index) + " is not left-shifted (starts at " +
                                 std::to_string(s.start[static_cast<std::size_t>(ref.job)]
                                                       [static_cast<std::size_t>(ref.index)]) +
                                 ", earliest " + std::to_string(earliest) + ")");
            }
        }
    }

    int latest = 0;
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < m; ++k) {
            latest = std::max(latest, s.end(inst, j, k));
        }
    }
    if (latest != s.makespan) {
        issues.push_back("makespan " + std::to_string(s.makespan) + " differs from latest end " +
                         std::to_string(latest));
    }
    return issues;
}

}  // namespace iqaoa
