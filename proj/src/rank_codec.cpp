#include "iqaoa/rank_codec.hpp"

#include "iqaoa/error.hpp"

#include <numeric>
#include <stdexcept>

namespace iqaoa {

BigInt multinomial(unsigned remaining, std::span<const unsigned> counts) {
    unsigned sum = 0;
    for (unsigned c : counts) {
        sum += c;
    }
    if (sum != remaining) {
        throw std::invalid_argument("multinomial: counts sum to " + std::to_string(sum) + ", expected " +
                                    std::to_string(remaining));
    }
    BigInt denom = 1;
    for (unsigned c : counts) {
        denom *= factorial(c);
    }
    return factorial(remaining) / denom;
}

namespace {

__extension__ using u128 = unsigned __int128;

inline std::uint64_t sub_block(std::uint64_t block, unsigned count, unsigned remaining) {
    return static_cast<std::uint64_t>(static_cast<u128>(block) * count / remaining);
}

inline BigInt sub_block(const BigInt& block, unsigned count, unsigned remaining) {
    return block * count / remaining;
}

// Shared walk for both integer widths. `on_position(i, partial)` observes the
// accumulated rank after position i.
template <typename Int, typename Observer>
Int rank_impl(std::span<const int> v, int n_jobs, unsigned n_machines, Int block, Observer&& on_position) {
    std::vector<unsigned> counts(static_cast<std::size_t>(n_jobs), n_machines);
    auto remaining = static_cast<unsigned>(v.size());
    Int r = 0;
    for (std::size_t i = 0; i < v.size(); ++i, --remaining) {
        const int symbol = v[i];
        for (int j = 0; j < symbol; ++j) {
            const unsigned c = counts[static_cast<std::size_t>(j)];
            if (c > 0) {
                r += sub_block(block, c, remaining);
            }
        }
        block = sub_block(block, counts[static_cast<std::size_t>(symbol)], remaining);
        --counts[static_cast<std::size_t>(symbol)];
        on_position(i, r);
    }
    return r;
}

template <typename Int, typename Observer>
void unrank_impl(Int r, int n_jobs, unsigned n_machines, Int block, std::span<int> out, Observer&& on_position) {
    std::vector<unsigned> counts(static_cast<std::size_t>(n_jobs), n_machines);
    auto remaining = static_cast<unsigned>(out.size());
    for (std::size_t i = 0; i < out.size(); ++i, --remaining) {
        int chosen = -1;
        for (int j = 0; j < n_jobs; ++j) {
            const unsigned c = counts[static_cast<std::size_t>(j)];
            if (c == 0) {
                continue;
            }
            Int size = sub_block(block, c, remaining);
            if (r < size) {
                chosen = j;
                block = std::move(size);
                break;
            }
            r -= size;
        }
        if (chosen < 0) {
            throw StructuralError("unrank walked past the last block");
        }
        out[i] = chosen;
        --counts[static_cast<std::size_t>(chosen)];
        on_position(i, r);
    }
}

struct NoObserver {
    template <typename Int>
    void operator()(std::size_t, const Int&) const noexcept {}
};

}  // namespace

RankCodec::RankCodec(const JsspInstance& inst)
    : n_jobs_(inst.n_jobs()),
      n_machines_(inst.n_machines()),
      length_(inst.n_operations()),
      total_(total_vector_count(inst)),
      total_u64_(to_u64(total_)) {
    if (total_ <= 1) {
        qubits_ = 1;
    } else {
        qubits_ = static_cast<unsigned>(boost::multiprecision::msb(BigInt(total_ - 1))) + 1;
    }
}

BigInt RankCodec::rank_of(std::span<const int> v) const {
    if (v.size() != length_) {
        throw ValidationError("vector length mismatch");
    }
    std::vector<int> count(static_cast<std::size_t>(n_jobs_), 0);
    for (int j : v) {
        if (j < 0 || j >= n_jobs_ || ++count[static_cast<std::size_t>(j)] > n_machines_) {
            throw ValidationError("not a job-repetition vector: " + format_vector(v));
        }
    }
    return rank_impl<BigInt>(v, n_jobs_, static_cast<unsigned>(n_machines_), total_, NoObserver{});
}

std::vector<BigInt> RankCodec::rank_trace(std::span<const int> v) const {
    (void)rank_of(v);
    std::vector<BigInt> trace;
    rank_impl<BigInt>(v, n_jobs_, static_cast<unsigned>(n_machines_), total_,
                      [&](std::size_t, const BigInt& r) { trace.push_back(r); });
    return trace;
}

BierwirthVector RankCodec::unrank(const BigInt& r) const {
    if (r < 0 || r >= total_) {
        throw ValidationError("rank " + r.str() + " outside [0, " + total_.str() + ")");
    }
    BierwirthVector v(length_);
    unrank_impl<BigInt>(r, n_jobs_, static_cast<unsigned>(n_machines_), total_, v, NoObserver{});
    return v;
}

std::vector<BigInt> RankCodec::unrank_trace(const BigInt& r) const {
    if (r < 0 || r >= total_) {
        throw ValidationError("rank " + r.str() + " outside [0, " + total_.str() + ")");
    }
    BierwirthVector v(length_);
    std::vector<BigInt> trace;
    unrank_impl<BigInt>(r, n_jobs_, static_cast<unsigned>(n_machines_), total_, v,
                        [&](std::size_t, const BigInt& residual) { trace.push_back(residual); });
    return trace;
}

std::uint64_t RankCodec::rank_of_u64(std::span<const int> v) const {
    if (!total_u64_) {
        throw BudgetError("rank space exceeds 64 bits", total_.str());
    }
    return rank_impl<std::uint64_t>(v, n_jobs_, static_cast<unsigned>(n_machines_), *total_u64_, NoObserver{});
}

void RankCodec::unrank_u64(std::uint64_t r, std::span<int> out) const {
    if (!total_u64_) {
        throw BudgetError("rank space exceeds 64 bits", total_.str());
    }
    if (r >= *total_u64_ || out.size() != length_) {
        throw ValidationError("rank or output size out of range");
    }
    unrank_impl<std::uint64_t>(r, n_jobs_, static_cast<unsigned>(n_machines_), *total_u64_, out, NoObserver{});
}

BigInt RankCodec::bits_to_rank(std::span<const std::uint8_t> bits) const {
    BigInt raw = 0;
    for (std::size_t j = bits.size(); j-- > 0;) {
        raw <<= 1;
        if (bits[j]) {
            raw += 1;
        }
    }
    return raw % total_;
}

std::uint64_t RankCodec::basis_to_rank(std::uint64_t basis_index) const {
    if (total_u64_) {
        return basis_index % *total_u64_;
    }
    return basis_index;  // total exceeds every 64-bit index
}

BigInt rank_of(const JsspInstance& inst, std::span<const int> v) {
    validate_vector(inst, v);
    return RankCodec(inst).rank_of(v);
}

BierwirthVector unrank(const JsspInstance& inst, const BigInt& r) { return RankCodec(inst).unrank(r); }

BigInt bits_to_rank(std::span<const std::uint8_t> bits, const JsspInstance& inst) {
    return RankCodec(inst).bits_to_rank(bits);
}

unsigned qubit_count(const JsspInstance& inst) { return RankCodec(inst).qubit_count(); }

}  // namespace iqaoa
