#include "iqaoa/disjunctive_graph.hpp"

#include "iqaoa/error.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace iqaoa {

DisjunctiveGraph::DisjunctiveGraph(const JsspInstance& inst)
    : n_machines_(inst.n_machines()), node_count_(static_cast<int>(inst.n_operations()) + 2) {
    for (int j = 0; j < inst.n_jobs(); ++j) {
        arcs_.push_back({source(), node_of({j, 0}), 0});
        for (int k = 0; k + 1 < inst.n_machines(); ++k) {
            arcs_.push_back({node_of({j, k}), node_of({j, k + 1}), inst.op(j, k).duration});
        }
        const int last = inst.n_machines() - 1;
        arcs_.push_back({node_of({j, last}), sink(), inst.op(j, last).duration});
    }
    conjunctive_ = arcs_.size();
}

void DisjunctiveGraph::add_machine_order(const JsspInstance& inst, std::span<const OpRef> order) {
    // One arc per pair of operations sharing the machine, oriented by position.
    for (std::size_t a = 0; a < order.size(); ++a) {
        for (std::size_t b = a + 1; b < order.size(); ++b) {
            arcs_.push_back({node_of(order[a]), node_of(order[b]), inst.op(order[a].job, order[a].index).duration});
        }
    }
}

DisjunctiveGraph DisjunctiveGraph::from_vector(const JsspInstance& inst, std::span<const int> v) {
    validate_vector(inst, v);
    std::vector<std::vector<OpRef>> orders(static_cast<std::size_t>(inst.n_machines()));
    std::vector<int> next(static_cast<std::size_t>(inst.n_jobs()), 0);
    for (int j : v) {
        const int k = next[static_cast<std::size_t>(j)]++;
        orders[static_cast<std::size_t>(inst.op(j, k).machine)].push_back({j, k});
    }
    DisjunctiveGraph g(inst);
    for (const auto& order : orders) {
        g.add_machine_order(inst, order);
    }
    return g;
}

DisjunctiveGraph DisjunctiveGraph::from_machine_orders(const JsspInstance& inst,
                                                       const std::vector<std::vector<OpRef>>& orders) {
    if (orders.size() != static_cast<std::size_t>(inst.n_machines())) {
        throw ValidationError("expected one order per machine");
    }
    for (int mach = 0; mach < inst.n_machines(); ++mach) {
        const auto& order = orders[static_cast<std::size_t>(mach)];
        if (order.size() != static_cast<std::size_t>(inst.n_jobs())) {
            throw ValidationError("machine " + std::to_string(mach) + " order must list every job once");
        }
        std::vector<bool> seen(static_cast<std::size_t>(inst.n_jobs()), false);
        for (const auto& ref : order) {
            if (ref.job < 0 || ref.job >= inst.n_jobs() || ref.index < 0 || ref.index >= inst.n_machines() ||
                inst.op(ref.job, ref.index).machine != mach || seen[static_cast<std::size_t>(ref.job)]) {
                throw ValidationError("machine " + std::to_string(mach) + " order is not a permutation of its operations");
            }
            seen[static_cast<std::size_t>(ref.job)] = true;
        }
    }
    DisjunctiveGraph g(inst);
    for (const auto& order : orders) {
        g.add_machine_order(inst, order);
    }
    return g;
}

std::optional<std::vector<int>> DisjunctiveGraph::topological_order() const {
    std::vector<int> indegree(static_cast<std::size_t>(node_count_), 0);
    std::vector<std::vector<int>> out(static_cast<std::size_t>(node_count_));
    for (const auto& arc : arcs_) {
        ++indegree[static_cast<std::size_t>(arc.to)];
        out[static_cast<std::size_t>(arc.from)].push_back(arc.to);
    }
    std::deque<int> ready;
    for (int v = 0; v < node_count_; ++v) {
        if (indegree[static_cast<std::size_t>(v)] == 0) {
            ready.push_back(v);
        }
    }
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(node_count_));
    while (!ready.empty()) {
        const int v = ready.front();
        ready.pop_front();
        order.push_back(v);
        for (int w : out[static_cast<std::size_t>(v)]) {
            if (--indegree[static_cast<std::size_t>(w)] == 0) {
                ready.push_back(w);
            }
        }
    }
    if (order.size() != static_cast<std::size_t>(node_count_)) {
        return std::nullopt;
    }
    return order;
}

DisjunctiveGraph build_graph(const JsspInstance& inst, std::span<const int> v) {
    auto g = DisjunctiveGraph::from_vector(inst, v);
    if (!g.topological_order()) {
        throw StructuralError("graph built from a job-repetition vector has a cycle");
    }
    return g;
}

int longest_path_makespan(const DisjunctiveGraph& g) {
    auto order = g.topological_order();
    if (!order) {
        throw StructuralError("disjunctive graph has a cycle");
    }
    std::vector<std::vector<const DisjunctiveGraph::Arc*>> incoming(static_cast<std::size_t>(g.node_count()));
    for (const auto& arc : g.arcs()) {
        incoming[static_cast<std::size_t>(arc.to)].push_back(&arc);
    }
    std::vector<int> dist(static_cast<std::size_t>(g.node_count()), 0);
    for (int v : *order) {
        for (const auto* arc : incoming[static_cast<std::size_t>(v)]) {
            dist[static_cast<std::size_t>(v)] =
                std::max(dist[static_cast<std::size_t>(v)], dist[static_cast<std::size_t>(arc->from)] + arc->weight);
        }
    }
    return dist[static_cast<std::size_t>(g.sink())];
}

}  // namespace iqaoa
