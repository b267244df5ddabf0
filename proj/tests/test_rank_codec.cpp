#include "iqaoa/error.hpp"
#include "iqaoa/fixtures.hpp"
#include "iqaoa/rank_codec.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace iqaoa;

namespace {

// Counts distinct arrangements by brute force.
std::uint64_t count_arrangements(std::span<const unsigned> counts) {
    std::vector<int> items;
    for (std::size_t j = 0; j < counts.size(); ++j) items.insert(items.end(), counts[j], static_cast<int>(j));
    std::uint64_t n = 0;
    do {
        ++n;
    } while (std::next_permutation(items.begin(), items.end()));
    return n;
}

}  // namespace

TEST_CASE("multinomial") {
    const std::vector<unsigned> c233 = {2, 3, 3};
    CHECK(multinomial(8, c233) == 560);
    CHECK(multinomial(0, std::vector<unsigned>{0, 0, 0}) == 1);
    CHECK(multinomial(4, std::vector<unsigned>{4}) == 1);
    CHECK_THROWS_AS(multinomial(7, c233), std::invalid_argument);

    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<unsigned> counts(1 + rng() % 4);
        unsigned sum = 0;
        for (auto& c : counts) sum += (c = rng() % 4);
        CHECK(multinomial(sum, counts) == count_arrangements(counts));
    }
}

TEST_CASE("worked example: rank 1293") {
    const auto a = load_fixture("jssp-3x3-a");
    const RankCodec codec(a);
    const BierwirthVector v = {2, 0, 2, 1, 0, 1, 0, 1, 2};
    CHECK(codec.rank_of(v) == 1293);
    CHECK(codec.rank_trace(v).front() == 1120);
    CHECK(codec.rank_trace(v).back() == 1293);
    CHECK(codec.unrank(1293) == v);
    CHECK(codec.unrank_trace(1293).front() == 173);
    CHECK(codec.unrank_trace(1293).back() == 0);
    CHECK(rank_of(a, v) == 1293);
    CHECK(unrank(a, 1293) == v);
}

TEST_CASE("first and last ranks") {
    const auto a = load_fixture("jssp-3x3-a");
    CHECK(rank_of(a, {{0, 0, 0, 1, 1, 1, 2, 2, 2}}) == 0);
    CHECK(rank_of(a, {{2, 2, 2, 1, 1, 1, 0, 0, 0}}) == 1679);
    CHECK(unrank(a, 0) == BierwirthVector{0, 0, 0, 1, 1, 1, 2, 2, 2});
    // listing rows from the 3x3 enumeration
    CHECK(unrank(a, 6) == BierwirthVector{0, 0, 0, 1, 2, 1, 2, 2, 1});
    CHECK(unrank(a, 1677) == BierwirthVector{2, 2, 2, 1, 1, 0, 0, 1, 0});
    CHECK(unrank(load_fixture("jssp-3x3-b"), 1520) == BierwirthVector{2, 1, 2, 1, 0, 2, 0, 1, 0});
}

TEST_CASE("out of range ranks and invalid vectors") {
    const auto a = load_fixture("jssp-3x3-a");
    CHECK_THROWS_AS(unrank(a, 1680), ValidationError);
    CHECK_THROWS_AS(unrank(a, -1), ValidationError);
    CHECK_THROWS_AS(rank_of(a, {{0, 0, 0, 0, 1, 1, 2, 2, 2}}), ValidationError);
    const RankCodec codec(a);
    BierwirthVector out(9);
    CHECK_THROWS_AS(codec.unrank_u64(1680, out), ValidationError);
}

TEST_CASE("bijection and order isomorphism against std::next_permutation") {
    for (const char* name : {"jssp-3x3-a", "jssp-5x2", "jssp-3x4"}) {
        CAPTURE(name);
        const auto inst = load_fixture(name);
        const RankCodec codec(inst);
        auto v = identity_vector(inst);
        BierwirthVector back(v.size());
        std::uint64_t expected = 0;
        do {
            REQUIRE(codec.rank_of_u64(v) == expected);
            codec.unrank_u64(expected, back);
            REQUIRE(back == v);
            ++expected;
        } while (std::next_permutation(v.begin(), v.end()));
        CHECK(expected == codec.total());
    }
}

TEST_CASE("big-integer and 64-bit paths agree") {
    const auto inst = load_fixture("jssp-4x4");
    const RankCodec codec(inst);
    std::mt19937_64 rng(11);
    BierwirthVector fast(inst.n_operations());
    for (int trial = 0; trial < 500; ++trial) {
        const std::uint64_t r = rng() % 63063000;
        codec.unrank_u64(r, fast);
        const auto slow = codec.unrank(r);
        REQUIRE(slow == fast);
        REQUIRE(codec.rank_of(slow) == r);
    }
}

TEST_CASE("ranks beyond 64 bits") {
    // 5 jobs x 5 machines: 25!/(5!)^5 ~ 6.2e14; 7x5 exceeds 2^64
    const auto inst = parse_instance(
        "7 5\n0 1 1 1 2 1 3 1 4 1\n0 1 1 1 2 1 3 1 4 1\n0 1 1 1 2 1 3 1 4 1\n0 1 1 1 2 1 3 1 4 1\n"
        "0 1 1 1 2 1 3 1 4 1\n0 1 1 1 2 1 3 1 4 1\n0 1 1 1 2 1 3 1 4 1\n");
    const RankCodec codec(inst);
    CHECK_FALSE(codec.fits_u64());
    const BigInt last = codec.total() - 1;
    auto v = codec.unrank(last);
    auto sorted = v;
    std::sort(sorted.rbegin(), sorted.rend());
    CHECK(v == sorted);
    CHECK(codec.rank_of(v) == last);
    const BigInt mid = codec.total() / 3;
    CHECK(codec.rank_of(codec.unrank(mid)) == mid);
}

TEST_CASE("first-symbol blocks sum to the total") {
    for (const char* name : {"jssp-3x3-a", "jssp-4x3", "jssp-4x4", "jssp-5x2"}) {
        const auto inst = load_fixture(name);
        const auto n = static_cast<std::size_t>(inst.n_jobs());
        const auto m = static_cast<unsigned>(inst.n_machines());
        BigInt sum = 0;
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<unsigned> counts(n, m);
            --counts[j];
            sum += multinomial(static_cast<unsigned>(inst.n_operations() - 1), counts);
        }
        CHECK(sum == total_vector_count(inst));
    }
}

TEST_CASE("qubit count") {
    CHECK(qubit_count(load_fixture("jssp-3x3-a")) == 11);
    CHECK(qubit_count(load_fixture("jssp-5x2")) == 17);
    CHECK(qubit_count(load_fixture("jssp-4x4")) == 26);
    CHECK(qubit_count(parse_instance("1 1\n0 1\n")) == 1);
    CHECK(qubit_count(parse_instance("2 1\n0 1\n0 2\n")) == 1);  // 2 vectors
    CHECK(qubit_count(parse_instance("3 1\n0 1\n0 2\n0 3\n")) == 3);  // 6 vectors
}

TEST_CASE("bits to rank") {
    const auto a = load_fixture("jssp-3x3-a");
    std::vector<std::uint8_t> bits(11, 0);
    CHECK(bits_to_rank(bits, a) == 0);
    bits[3] = 1;
    CHECK(bits_to_rank(bits, a) == 8);
    std::fill(bits.begin(), bits.end(), 1);
    CHECK(bits_to_rank(bits, a) == 367);  // 2047 mod 1680
    const RankCodec codec(a);
    CHECK(codec.basis_to_rank(2047) == 367);
    CHECK(codec.basis_to_rank(1679) == 1679);
    CHECK(codec.basis_to_rank(1680) == 0);
    // little-endian: bit j weighs 2^j
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const std::uint64_t x = rng() % 2048;
        for (unsigned j = 0; j < 11; ++j) bits[j] = (x >> j) & 1U;
        CHECK(codec.bits_to_rank(bits) == codec.basis_to_rank(x));
    }
}
