#pragma once

#include "iqaoa/instance.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace iqaoa {

/// Job-repetition sequence: job j appears once per operation of j, and its
/// k-th occurrence stands for the k-th operation of j.
using BierwirthVector = std::vector<int>;

/// Throws ValidationError if `v` is not a job-repetition vector for `inst`.
void validate_vector(const JsspInstance& inst, std::span<const int> v);

/// Parses "2,0,2,1" or "[2, 0, 2, 1]" style literals.
BierwirthVector parse_vector(std::string_view text);
std::string format_vector(std::span<const int> v);

/// First vector in lexicographic order: all of job 0, then job 1, ...
BierwirthVector identity_vector(const JsspInstance& inst);

struct OpRef {
    int job = 0;
    int index = 0;

    friend bool operator==(const OpRef&, const OpRef&) = default;
};

struct Schedule {
    std::vector<std::vector<int>> start;              // [job][op]
    std::vector<std::vector<OpRef>> machine_order;    // [machine] in processing order
    int makespan = 0;

    int end(const JsspInstance& inst, int job, int k) const {
        return start[static_cast<std::size_t>(job)][static_cast<std::size_t>(k)] + inst.op(job, k).duration;
    }
};

/// Semi-active list scheduling of `v`: each operation starts at the later of
/// its job predecessor's end and the end of the last operation already placed
/// on its machine. O(n*m).
Schedule decode(const JsspInstance& inst, std::span<const int> v);

/// Allocation-free makespan evaluator for hot loops. Does not validate input.
class MakespanDecoder {
public:
    explicit MakespanDecoder(const JsspInstance& inst);

    int operator()(std::span<const int> v);

private:
    int n_machines_;
    std::vector<int> machine_;   // flattened [job * m + k]
    std::vector<int> duration_;
    std::vector<int> next_op_;
    std::vector<int> job_ready_;
    std::vector<int> machine_ready_;
};

/// Independent checker. Returns one human-readable line per violated
/// property; empty means the schedule is feasible, semi-active, and its
/// makespan is consistent.
std::vector<std::string> check_schedule(const JsspInstance& inst, const Schedule& s);

}  // namespace iqaoa
