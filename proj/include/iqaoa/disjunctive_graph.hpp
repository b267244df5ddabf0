#pragma once

#include "iqaoa/instance.hpp"
#include "iqaoa/schedule.hpp"

#include <optional>
#include <span>
#include <vector>

namespace iqaoa {

/// Oriented disjunctive graph. Node 0 is the source, nodes 1..n*m are the
/// operations (job-major), and the last node is the sink. An arc leaving an
/// operation is weighted by that operation's duration; source arcs weigh 0.
class DisjunctiveGraph {
public:
    struct Arc {
        int from;
        int to;
        int weight;
    };

    /// Orients every machine according to the order in which its operations
    /// appear in `v`.
    static DisjunctiveGraph from_vector(const JsspInstance& inst, std::span<const int> v);

    /// Orients machine `mach` as `orders[mach]`; each list must be a
    /// permutation of the operations routed to that machine. The result may
    /// contain a cycle.
    static DisjunctiveGraph from_machine_orders(const JsspInstance& inst,
                                                const std::vector<std::vector<OpRef>>& orders);

    int node_count() const noexcept { return node_count_; }
    int source() const noexcept { return 0; }
    int sink() const noexcept { return node_count_ - 1; }
    int node_of(OpRef op) const noexcept { return 1 + op.job * n_machines_ + op.index; }

    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    std::size_t conjunctive_arc_count() const noexcept { return conjunctive_; }
    std::size_t disjunctive_arc_count() const noexcept { return arcs_.size() - conjunctive_; }

    /// Kahn's algorithm; nullopt if the graph has a cycle.
    std::optional<std::vector<int>> topological_order() const;

private:
    DisjunctiveGraph(const JsspInstance& inst);
    void add_machine_order(const JsspInstance& inst, std::span<const OpRef> order);

    int n_machines_;
    int node_count_;
    std::size_t conjunctive_ = 0;
    std::vector<Arc> arcs_;
};

DisjunctiveGraph build_graph(const JsspInstance& inst, std::span<const int> v);

/// Weight of the longest source-to-sink path. Throws StructuralError on a cycle.
int longest_path_makespan(const DisjunctiveGraph& g);

}  // namespace iqaoa
