#include "iqaoa/disjunctive_graph.hpp"
#include "iqaoa/error.hpp"
#include "iqaoa/fixtures.hpp"
#include "iqaoa/schedule.hpp"

#include <doctest.h>

#include <algorithm>

using namespace iqaoa;

TEST_CASE("decode reference makespans") {
    const auto a = load_fixture("jssp-3x3-a");
    CHECK(decode(a, {{0, 0, 0, 1, 1, 1, 2, 2, 2}}).makespan == 193);
    CHECK(decode(a, {{2, 0, 2, 1, 0, 1, 0, 1, 2}}).makespan == 188);
    CHECK(decode(a, {{2, 2, 2, 1, 1, 1, 0, 0, 0}}).makespan == 192);
    const auto b = load_fixture("jssp-3x3-b");
    CHECK(decode(b, {{0, 0, 0, 1, 1, 1, 2, 2, 2}}).makespan == 249);
    CHECK(decode(b, {{2, 1, 2, 1, 0, 2, 0, 1, 0}}).makespan == 181);
    CHECK(decode(load_fixture("jssp-5x2"), {{1, 4, 3, 0, 2, 4, 0, 3, 1, 2}}).makespan == 22);
    CHECK(decode(load_fixture("jssp-4x4"), {{0, 1, 1, 2, 2, 2, 3, 0, 0, 0, 1, 2, 3, 3, 1, 3}}).makespan == 131);
    CHECK(decode(load_fixture("jssp-4x3"), {{0, 1, 0, 1, 2, 0, 1, 2, 2, 3, 3, 3}}).makespan == 59);
}

TEST_CASE("decode hand trace on the identity vector") {
    const auto a = load_fixture("jssp-3x3-a");
    const auto s = decode(a, {{0, 0, 0, 1, 1, 1, 2, 2, 2}});
    // job 0: 0-10, 10-45, 45-70; job 1: 45-60, 60-66, 70-82; job 2: 82-182, 182-183, 183-193
    CHECK(s.start[0] == std::vector<int>{0, 10, 45});
    CHECK(s.start[1] == std::vector<int>{45, 60, 70});
    CHECK(s.start[2] == std::vector<int>{82, 182, 183});
    // second machine serves O(0,1), O(1,0), O(2,1)
    CHECK(s.machine_order[1] == std::vector<OpRef>{{0, 1}, {1, 0}, {2, 1}});
}

TEST_CASE("decode rejects vectors with wrong multiplicities") {
    const auto a = load_fixture("jssp-3x3-a");
    CHECK_THROWS_AS(decode(a, {{0, 0, 0, 1, 1, 1, 2, 2}}), ValidationError);
    CHECK_THROWS_AS(decode(a, {{0, 0, 0, 0, 1, 1, 2, 2, 2}}), ValidationError);
    CHECK_THROWS_AS(decode(a, {{0, 0, 0, 1, 1, 1, 2, 2, 3}}), ValidationError);
}

TEST_CASE("single operation instance") {
    const auto inst = parse_instance("1 1\n0 5\n");
    const auto s = decode(inst, {{0}});
    CHECK(s.makespan == 5);
    const auto g = build_graph(inst, {{0}});
    CHECK(longest_path_makespan(g) == 5);
}

TEST_CASE("one-job instance builds a chain without disjunctive arcs") {
    const auto inst = parse_instance("1 3\n2 4 0 1 1 6\n");
    const auto g = build_graph(inst, {{0, 0, 0}});
    CHECK(g.disjunctive_arc_count() == 0);
    CHECK(g.conjunctive_arc_count() == 4);  // source, two job arcs, sink
    CHECK(longest_path_makespan(g) == 11);
}

TEST_CASE("graph orientation follows the order of appearance") {
    const auto a = load_fixture("jssp-3x3-a");
    const auto g = build_graph(a, {{0, 0, 0, 1, 1, 1, 2, 2, 2}});
    auto has_arc = [&](OpRef from, OpRef to) {
        return std::any_of(g.arcs().begin(), g.arcs().end(), [&](const auto& arc) {
            return arc.from == g.node_of(from) && arc.to == g.node_of(to);
        });
    };
    CHECK(has_arc({0, 1}, {1, 0}));
    CHECK(has_arc({1, 0}, {2, 1}));
    CHECK(has_arc({0, 1}, {2, 1}));
    CHECK_FALSE(has_arc({1, 0}, {0, 1}));
    CHECK(g.disjunctive_arc_count() == 9);  // three pairs per machine
}

TEST_CASE("longest path on explicit orientations") {
    const auto a = load_fixture("jssp-3x3-a");
    // An optimal orientation: J1, J2, J3 on the first two machines, J3 first on the third.
    const std::vector<std::vector<OpRef>> optimal = {
        {{0, 0}, {1, 1}, {2, 2}},
        {{0, 1}, {1, 0}, {2, 1}},
        {{2, 0}, {0, 2}, {1, 2}},
    };
    CHECK(longest_path_makespan(DisjunctiveGraph::from_machine_orders(a, optimal)) == 137);

    // J1, J2, J3 on every machine is the orientation of the identity vector.
    const std::vector<std::vector<OpRef>> in_job_order = {
        {{0, 0}, {1, 1}, {2, 2}},
        {{0, 1}, {1, 0}, {2, 1}},
        {{0, 2}, {1, 2}, {2, 0}},
    };
    CHECK(longest_path_makespan(DisjunctiveGraph::from_machine_orders(a, in_job_order)) == 193);
}

TEST_CASE("cyclic orientation is a structural error") {
    const auto inst = parse_instance("2 2\n0 3 1 4\n1 2 0 5\n");
    const std::vector<std::vector<OpRef>> cyclic = {
        {{1, 1}, {0, 0}},
        {{0, 1}, {1, 0}},
    };
    const auto g = DisjunctiveGraph::from_machine_orders(inst, cyclic);
    CHECK_FALSE(g.topological_order().has_value());
    CHECK_THROWS_AS(longest_path_makespan(g), StructuralError);
}

TEST_CASE("machine orders must be permutations of the machine's operations") {
    const auto inst = parse_instance("2 2\n0 3 1 4\n1 2 0 5\n");
    CHECK_THROWS_AS(DisjunctiveGraph::from_machine_orders(inst, {{{0, 0}, {0, 0}}, {{0, 1}, {1, 0}}}),
                    ValidationError);
    CHECK_THROWS_AS(DisjunctiveGraph::from_machine_orders(inst, {{{0, 1}, {1, 1}}, {{0, 0}, {1, 0}}}),
                    ValidationError);
}

TEST_CASE("decode, longest path and the checker agree on every 3x3 vector") {
    for (const char* name : {"jssp-3x3-a", "jssp-3x3-b"}) {
        const auto inst = load_fixture(name);
        MakespanDecoder fast(inst);
        auto v = identity_vector(inst);
        int visited = 0;
        do {
            const auto s = decode(inst, v);
            REQUIRE(longest_path_makespan(build_graph(inst, v)) == s.makespan);
            REQUIRE(fast(v) == s.makespan);
            REQUIRE(check_schedule(inst, s).empty());
            REQUIRE(s.makespan >= machine_load_bound(inst));
            REQUIRE(s.makespan >= job_length_bound(inst));
            ++visited;
        } while (std::next_permutation(v.begin(), v.end()));
        CHECK(visited == 1680);
    }
}

TEST_CASE("checker flags broken schedules") {
    const auto a = load_fixture("jssp-3x3-a");
    const auto good = decode(a, {{2, 0, 2, 1, 0, 1, 0, 1, 2}});
    REQUIRE(check_schedule(a, good).empty());

    SUBCASE("delayed operation is not left-shifted") {
        auto s = good;
        s.start[2][2] += 1;
        s.makespan = std::max(s.makespan, s.end(a, 2, 2));
        CHECK_FALSE(check_schedule(a, s).empty());
    }
    SUBCASE("job precedence violated") {
        auto s = good;
        s.start[0][1] = 0;
        CHECK_FALSE(check_schedule(a, s).empty());
    }
    SUBCASE("wrong makespan") {
        auto s = good;
        s.makespan += 1;
        CHECK_FALSE(check_schedule(a, s).empty());
    }
    SUBCASE("operation listed twice") {
        auto s = good;
        s.machine_order[0][1] = s.machine_order[0][0];
        CHECK_FALSE(check_schedule(a, s).empty());
    }
    SUBCASE("overlap on a machine") {
        auto s = good;
        // Put both operations of machine 2 at the same start.
        const auto first = s.machine_order[2][0];
        const auto second = s.machine_order[2][1];
        s.start[static_cast<std::size_t>(second.job)][static_cast<std::size_t>(second.index)] =
            s.start[static_cast<std::size_t>(first.job)][static_cast<std::size_t>(first.index)];
        CHECK_FALSE(check_schedule(a, s).empty());
    }
}

TEST_CASE("swapping equal adjacent entries leaves the decode unchanged") {
    const auto a = load_fixture("jssp-3x3-b");
    BierwirthVector v = {2, 2, 0, 1, 1, 0, 2, 0, 1};
    auto w = v;
    std::swap(w[0], w[1]);
    CHECK(decode(a, v).start == decode(a, w).start);
    CHECK(decode(a, v).makespan == decode(a, w).makespan);
}

TEST_CASE("vector literals") {
    CHECK(parse_vector("[2, 0, 2, 1]") == BierwirthVector{2, 0, 2, 1});
    CHECK(parse_vector("2,0,2,1") == BierwirthVector{2, 0, 2, 1});
    CHECK(format_vector(BierwirthVector{2, 0, 1}) == "2,0,1");
    CHECK_THROWS_AS(parse_vector("2,x"), ParseError);
    CHECK_THROWS_AS(parse_vector(""), ParseError);
}
