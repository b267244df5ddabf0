#include "iqaoa/enumerator.hpp"
#include "iqaoa/error.hpp"
#include "iqaoa/fixtures.hpp"
#include "iqaoa/schedule.hpp"
#include "reference_tables.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace iqaoa;

namespace {

// Oracle: plain next_permutation walk with the full decoder.
MakespanDistribution walk_all(const JsspInstance& inst) {
    MakespanDistribution d;
    auto v = identity_vector(inst);
    do {
        d.add(decode(inst, v).makespan);
    } while (std::next_permutation(v.begin(), v.end()));
    return d;
}

}  // namespace

TEST_CASE("3x3 histogram is reproduced exactly") {
    const auto d = enumerate_distribution(load_fixture("jssp-3x3-b"));
    CHECK(d.total == 1680);
    CHECK(d.counts.size() == reference::k3x3Counts.size());
    for (const auto& [ms, n] : reference::k3x3Counts) {
        CAPTURE(ms);
        CHECK(d.count(ms) == n);
    }
    CHECK(d.min_makespan() == 181);
    CHECK(optimum_probability(d) == doctest::Approx(928.0 / 1680.0));
    CHECK(std::round(optimum_probability(d) * 10000) / 100 == doctest::Approx(55.24));
}

TEST_CASE("enumeration matches the sequential oracle") {
    for (const char* name : {"jssp-3x3-a", "jssp-3x3-b", "jssp-3x4", "jssp-5x2"}) {
        CAPTURE(name);
        const auto inst = load_fixture(name);
        CHECK(enumerate_distribution(inst, {.workers = 1}) == walk_all(inst));
    }
}

TEST_CASE("result does not depend on the worker count") {
    const auto inst = load_fixture("jssp-5x2");
    const auto one = enumerate_distribution(inst, {.workers = 1});
    CHECK(enumerate_distribution(inst, {.workers = 3}) == one);
    CHECK(enumerate_distribution(inst, {.workers = 4}) == one);
    CHECK(enumerate_distribution(inst, {.workers = 7}) == one);
}

TEST_CASE("unrank path agrees with the permutation walk") {
    const auto inst = load_fixture("jssp-3x4");
    CHECK(enumerate_by_unrank(inst, 0, 34650) == enumerate_distribution(inst, {.workers = 2}));
    auto part = enumerate_by_unrank(inst, 0, 10000);
    part.merge(enumerate_by_unrank(inst, 10000, 34650));
    CHECK(part == enumerate_by_unrank(inst, 0, 34650));
}

TEST_CASE("4x3 histogram") {
    const auto d = enumerate_distribution(load_fixture("jssp-4x3"));
    CHECK(d.total == 369600);
    CHECK(d.min_makespan() == 59);
    for (const auto& [ms, n] : reference::k4x3Rows) {
        CAPTURE(ms);
        CHECK(d.count(ms) == n);
    }
    CHECK(lower_quartile(d) == 68);
}

TEST_CASE("5x2 initial probabilities") {
    const auto d = enumerate_distribution(load_fixture("jssp-5x2"));
    CHECK(d.total == 113400);
    CHECK(d.min_makespan() == 22);
    for (const auto& [ms, pct] : reference::k5x2InitialPercent) {
        CAPTURE(ms);
        CHECK(std::abs(100.0 * d.probability(ms) - pct) <= 0.01);
    }
}

TEST_CASE("3x4 optimum") {
    const auto d = enumerate_distribution(load_fixture("jssp-3x4"));
    CHECK(d.total == 34650);
    CHECK(d.min_makespan() == 27);
    CHECK(std::abs(100.0 * optimum_probability(d) - 14.47) <= 0.01);
}

TEST_CASE("every makespan respects the lower bounds") {
    for (const auto& f : fixtures()) {
        if (f.name == "jssp-4x4") continue;
        const auto inst = load_fixture(f.name);
        const auto d = enumerate_distribution(inst);
        CHECK(d.min_makespan() >= machine_load_bound(inst));
        CHECK(d.min_makespan() >= job_length_bound(inst));
        CHECK(d.total == total_vector_count(inst));
    }
}

TEST_CASE("trivial instances") {
    const auto single = enumerate_distribution(parse_instance("1 1\n0 5\n"));
    CHECK(single.total == 1);
    CHECK(single.count(5) == 1);
    // one machine: every order gives the sum of durations
    const auto line = enumerate_distribution(parse_instance("3 1\n0 2\n0 3\n0 4\n"));
    CHECK(line.total == 6);
    CHECK(line.count(9) == 6);
}

TEST_CASE("budget is enforced before any work") {
    const auto inst = load_fixture("jssp-3x3-a");
    CHECK_THROWS_AS(enumerate_distribution(inst, {.budget = 1679}), BudgetError);
    CHECK_NOTHROW(enumerate_distribution(inst, {.budget = 1680}));
    try {
        enumerate_distribution(inst, {.budget = 10});
    } catch (const BudgetError& e) {
        CHECK(e.requested() == "1680");
    }
}

TEST_CASE("distribution helpers") {
    const std::vector<int> shots = {22, 22, 23, 22};
    const auto d = sample_distribution(shots);
    CHECK(d.total == 4);
    CHECK(d.count(22) == 3);
    CHECK(d.probability(23) == 0.25);
    CHECK(d.probability(99) == 0.0);
    CHECK(lower_quartile(d) == 22);
    CHECK_THROWS_AS(sample_distribution(std::vector<int>{}), ValidationError);

    MakespanDistribution q;
    q.add(10, 1);
    q.add(11, 1);
    q.add(12, 1);
    q.add(13, 1);
    q.add(14, 1);
    CHECK(lower_quartile(q) == 11);  // needs 2 of 5
    q.add(15, 3);
    CHECK(lower_quartile(q) == 11);  // needs 2 of 8
}
