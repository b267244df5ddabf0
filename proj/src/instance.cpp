#include "iqaoa/instance.hpp"

#include "iqaoa/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace iqaoa {

JsspInstance::JsspInstance(int n_machines, std::vector<std::vector<Operation>> jobs)
    : n_machines_(n_machines), jobs_(std::move(jobs)) {
    if (jobs_.empty()) {
        throw ValidationError("instance has no jobs");
    }
    if (n_machines_ < 1) {
        throw ValidationError("instance has no machines");
    }
    for (std::size_t j = 0; j < jobs_.size(); ++j) {
        const auto& ops = jobs_[j];
        const std::string where = "job " + std::to_string(j);
        if (ops.size() != static_cast<std::size_t>(n_machines_)) {
            throw ValidationError(where + " has " + std::to_string(ops.size()) + " operations, expected " +
                                  std::to_string(n_machines_));
        }
        std::vector<bool> seen(static_cast<std::size_t>(n_machines_), false);
        for (const auto& op : ops) {
            if (op.machine < 0 || op.machine >= n_machines_) {
                throw ValidationError(where + " uses machine " + std::to_string(op.machine) + " outside [0, " +
                                      std::to_string(n_machines_) + ")");
            }
            if (op.duration < 1) {
                throw ValidationError(where + " has non-positive duration " + std::to_string(op.duration));
            }
            if (seen[static_cast<std::size_t>(op.machine)]) {
                throw ValidationError(where + " visits machine " + std::to_string(op.machine) + " twice");
            }
            seen[static_cast<std::size_t>(op.machine)] = true;
        }
    }
}

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            tokens.push_back(line.substr(start, i - start));
        }
    }
    return tokens;
}

int parse_int(std::string_view token, std::size_t line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

JsspInstance parse_instance(std::string_view text) {
    std::vector<std::pair<std::size_t, std::vector<std::string_view>>> lines;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tokens = tokenize(line);
        if (!tokens.empty()) {
            lines.emplace_back(line_no, std::move(tokens));
        }
    }
    if (lines.empty()) {
        throw ParseError("missing header line");
    }
    const auto& [header_no, header] = lines.front();
    if (header.size() != 2) {
        throw ParseError("line " + std::to_string(header_no) + ": header must be '<n_jobs> <n_machines>'");
    }
    const int n_jobs = parse_int(header[0], header_no);
    const int n_machines = parse_int(header[1], header_no);
    if (n_jobs < 0 || n_machines < 0) {
        throw ParseError("line " + std::to_string(header_no) + ": negative dimension");
    }
    if (lines.size() - 1 != static_cast<std::size_t>(n_jobs)) {
        throw ValidationError("header declares " + std::to_string(n_jobs) + " jobs but " +
                              std::to_string(lines.size() - 1) + " job lines follow");
    }
    std::vector<std::vector<Operation>> jobs;
    for (std::size_t j = 1; j < lines.size(); ++j) {
        const auto& [no, tokens] = lines[j];
        if (tokens.size() % 2 != 0) {
            throw ParseError("line " + std::to_string(no) + ": operations must be '<machine> <duration>' pairs");
        }
        std::vector<Operation> ops;
        for (std::size_t t = 0; t < tokens.size(); t += 2) {
            ops.push_back({parse_int(tokens[t], no), parse_int(tokens[t + 1], no)});
        }
        jobs.push_back(std::move(ops));
    }
    return JsspInstance(n_machines, std::move(jobs));
}

JsspInstance load_instance(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open instance file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str());
}

std::string render_instance(const JsspInstance& inst) {
    std::ostringstream out;
    out << inst.n_jobs() << ' ' << inst.n_machines() << '\n';
    for (const auto& ops : inst.jobs()) {
        for (std::size_t k = 0; k < ops.size(); ++k) {
            out << (k ? " " : "") << ops[k].machine << ' ' << ops[k].duration;
        }
        out << '\n';
    }
    return out.str();
}

BigInt total_vector_count(int n_jobs, int n_machines) {
    BigInt denom = 1;
    for (int j = 0; j < n_jobs; ++j) {
        denom *= factorial(static_cast<unsigned>(n_machines));
    }
    return factorial(static_cast<unsigned>(n_jobs * n_machines)) / denom;
}

BigInt total_vector_count(const JsspInstance& inst) { return total_vector_count(inst.n_jobs(), inst.n_machines()); }

int machine_load_bound(const JsspInstance& inst) {
    std::vector<int> load(static_cast<std::size_t>(inst.n_machines()), 0);
    for (const auto& ops : inst.jobs()) {
        for (const auto& op : ops) {
            load[static_cast<std::size_t>(op.machine)] += op.duration;
        }
    }
    return *std::max_element(load.begin(), load.end());
}

int job_length_bound(const JsspInstance& inst) {
    int best = 0;
    for (const auto& ops : inst.jobs()) {
        int sum = 0;
        for (const auto& op : ops) {
            sum += op.duration;
        }
        best = std::max(best, sum);
    }
    return best;
}

}  // namespace iqaoa
