#pragma once

#include "iqaoa/bigint.hpp"
#include "iqaoa/instance.hpp"
#include "iqaoa/schedule.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace iqaoa {

/// remaining! / prod(counts[k]!), exact. Throws std::invalid_argument if the
/// counts do not sum to `remaining`.
BigInt multinomial(unsigned remaining, std::span<const unsigned> counts);

/// Lexicographic ranking of job-repetition vectors (job 0 < job 1 < ...).
///
/// Each position splits the remaining rank space into one block per job that
/// still has operations left; the block of job j holds
/// multinomial(remaining - 1, counts with counts[j] - 1) vectors. Ranking
/// sums the blocks of smaller jobs; unranking subtracts whole blocks until
/// the rank falls inside one.
///
/// Block sizes are derived incrementally (block_j = block * counts[j] /
/// remaining) so no factorial is recomputed per position. When the total
/// fits in 64 bits a native-integer path is used for the *_u64 entry points.
class RankCodec {
public:
    explicit RankCodec(const JsspInstance& inst);

    const BigInt& total() const noexcept { return total_; }
    /// ceil(log2(total)), at least 1.
    unsigned qubit_count() const noexcept { return qubits_; }
    bool fits_u64() const noexcept { return total_u64_.has_value(); }

    BigInt rank_of(std::span<const int> v) const;
    BierwirthVector unrank(const BigInt& r) const;

    /// Partial rank after each position (size n*m).
    std::vector<BigInt> rank_trace(std::span<const int> v) const;
    /// Residual rank after each position is fixed (size n*m).
    std::vector<BigInt> unrank_trace(const BigInt& r) const;

    std::uint64_t rank_of_u64(std::span<const int> v) const;
    /// Writes the vector of rank `r` into `out` (size n*m). No allocation.
    void unrank_u64(std::uint64_t r, std::span<int> out) const;

    /// sum(bits[j] * 2^j) reduced modulo total().
    BigInt bits_to_rank(std::span<const std::uint8_t> bits) const;
    /// Same reduction for a computational-basis index of the qubit register.
    std::uint64_t basis_to_rank(std::uint64_t basis_index) const;

private:
    int n_jobs_;
    int n_machines_;
    std::size_t length_;
    BigInt total_;
    std::optional<std::uint64_t> total_u64_;
    unsigned qubits_;
};

BigInt rank_of(const JsspInstance& inst, std::span<const int> v);
BierwirthVector unrank(const JsspInstance& inst, const BigInt& r);
BigInt bits_to_rank(std::span<const std::uint8_t> bits, const JsspInstance& inst);
unsigned qubit_count(const JsspInstance& inst);

}  // namespace iqaoa
