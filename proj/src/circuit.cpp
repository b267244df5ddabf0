#include "iqaoa/circuit.hpp"

#include "iqaoa/error.hpp"
#include "iqaoa/rng.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace iqaoa {

Mixer mixer_from_tag(int tag) {
    if (tag < 1 || tag > 4) {
        throw ValidationError("unknown mixer variant " + std::to_string(tag) + " (expected 1..4)");
    }
    return static_cast<Mixer>(tag);
}

InitialState initial_state_from_name(std::string_view name) {
    if (name == "zero") return InitialState::Zero;
    if (name == "uniform") return InitialState::Uniform;
    throw ValidationError("unknown initial state '" + std::string(name) + "' (expected zero or uniform)");
}

const char* initial_state_name(InitialState s) noexcept { return s == InitialState::Zero ? "zero" : "uniform"; }

void CircuitParams::validate() const {
    if (gammas.empty() || gammas.size() != betas.size()) {
        throw ValidationError("circuit needs equally many gammas and betas, at least one each");
    }
}

std::uint64_t amplitude_budget() {
    if (const char* env = std::getenv("IQAOA_MAX_AMPLITUDES")) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) {
            return value;
        }
    }
    return std::uint64_t{1} << 26;
}

namespace {

std::vector<Amplitude> allocate(unsigned qubits, std::uint64_t budget) {
    if (qubits == 0 || qubits >= 63 || (std::uint64_t{1} << qubits) > budget) {
        throw BudgetError("a " + std::to_string(qubits) + "-qubit register exceeds the amplitude budget of " +
                              std::to_string(budget),
                          std::to_string(qubits));
    }
    return std::vector<Amplitude>(std::size_t{1} << qubits);
}

// Applies [[m00, m01], [m10, m11]] to `qubit`.
void apply_2x2(std::vector<Amplitude>& amps, unsigned qubit, Amplitude m00, Amplitude m01, Amplitude m10,
               Amplitude m11) {
    const std::size_t stride = std::size_t{1} << qubit;
    const std::size_t n = amps.size();
    for (std::size_t base = 0; base < n; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const Amplitude a = amps[i];
            const Amplitude b = amps[i + stride];
            amps[i] = m00 * a + m01 * b;
            amps[i + stride] = m10 * a + m11 * b;
        }
    }
}

}  // namespace

StateVector::StateVector(unsigned qubits, std::vector<Amplitude> amps) : qubits_(qubits), amps_(std::move(amps)) {}

StateVector StateVector::uniform(unsigned qubits, std::uint64_t budget) {
    auto amps = allocate(qubits, budget);
    const double a = 1.0 / std::sqrt(static_cast<double>(amps.size()));
    std::fill(amps.begin(), amps.end(), Amplitude{a, 0.0});
    return StateVector(qubits, std::move(amps));
}

StateVector StateVector::basis(unsigned qubits, std::uint64_t index, std::uint64_t budget) {
    auto amps = allocate(qubits, budget);
    amps.at(index) = 1.0;
    return StateVector(qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amps) {
    if (amps.size() < 2 || !std::has_single_bit(amps.size())) {
        throw ValidationError("amplitude count must be a power of two >= 2");
    }
    const auto qubits = static_cast<unsigned>(std::countr_zero(amps.size()));
    return StateVector(qubits, std::move(amps));
}

double StateVector::norm_squared() const {
    double sum = 0.0;
    for (const auto& a : amps_) {
        sum += std::norm(a);
    }
    return sum;
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    std::transform(amps_.begin(), amps_.end(), p.begin(), [](const Amplitude& a) { return std::norm(a); });
    return p;
}

void StateVector::apply_phase(unsigned qubit, double angle) {
    const Amplitude f = std::polar(1.0, -angle);
    const std::size_t mask = std::size_t{1} << qubit;
    for (std::size_t x = 0; x < amps_.size(); ++x) {
        if (x & mask) {
            amps_[x] *= f;
        }
    }
}

void StateVector::apply_rx(unsigned qubit, double theta) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    apply_2x2(amps_, qubit, c, {0.0, -s}, {0.0, -s}, c);
}

void StateVector::apply_ry(unsigned qubit, double theta) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    apply_2x2(amps_, qubit, c, -s, s, c);
}

void StateVector::apply_cx(unsigned control, unsigned target) {
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t tmask = std::size_t{1} << target;
    for (std::size_t x = 0; x < amps_.size(); ++x) {
        if ((x & cmask) && !(x & tmask)) {
            std::swap(amps_[x], amps_[x | tmask]);
        }
    }
}

void StateVector::apply_rank_phase(double gamma) {
    // The per-qubit factors multiply into exp(-i gamma x); tabulate products
    // for the low and high halves of the index so one pass suffices.
    std::vector<Amplitude> factor(qubits_);
    for (unsigned j = 0; j < qubits_; ++j) {
        factor[j] = std::polar(1.0, -std::ldexp(gamma, static_cast<int>(j)));
    }
    const unsigned low_bits = qubits_ / 2;
    const unsigned high_bits = qubits_ - low_bits;
    auto table = [&](unsigned offset, unsigned bits) {
        std::vector<Amplitude> t(std::size_t{1} << bits);
        t[0] = 1.0;
        for (std::size_t a = 1; a < t.size(); ++a) {
            t[a] = t[a & (a - 1)] * factor[offset + static_cast<unsigned>(std::countr_zero(a))];
        }
        return t;
    };
    const auto low = table(0, low_bits);
    const auto high = table(low_bits, high_bits);
    const std::size_t low_mask = low.size() - 1;
    for (std::size_t x = 0; x < amps_.size(); ++x) {
        amps_[x] *= low[x & low_mask] * high[x >> low_bits];
    }
}

void StateVector::apply_cx_chain() {
    // After CX(0,1), ..., CX(q-2,q-1) bit j holds x_0 ^ ... ^ x_j.
    scratch_.resize(amps_.size());
    const std::uint64_t mask = amps_.size() - 1;
    for (std::uint64_t x = 0; x < amps_.size(); ++x) {
        std::uint64_t y = x;
        y ^= y << 1;
        y ^= y << 2;
        y ^= y << 4;
        y ^= y << 8;
        y ^= y << 16;
        y ^= y << 32;
        scratch_[y & mask] = amps_[x];
    }
    amps_.swap(scratch_);
}

void StateVector::apply_mixer(double beta, Mixer mixer) {
    switch (mixer) {
    case Mixer::RyAfterChain:
        apply_cx_chain();
        for (unsigned j = 0; j < qubits_; ++j) apply_ry(j, beta);
        break;
    case Mixer::RxAfterChain:
        apply_cx_chain();
        for (unsigned j = 0; j < qubits_; ++j) apply_rx(j, beta);
        break;
    case Mixer::RxRyAfterChain:
        apply_cx_chain();
        for (unsigned j = 0; j < qubits_; ++j) {
            apply_rx(j, beta);
            apply_ry(j, beta);
        }
        break;
    case Mixer::ChainAfterRy:
        for (unsigned j = 0; j < qubits_; ++j) apply_ry(j, beta);
        apply_cx_chain();
        break;
    default:
        throw ValidationError("unknown mixer variant");
    }
}

StateVector init_uniform(unsigned qubits) { return StateVector::uniform(qubits); }

StateVector apply_phase_layer(StateVector s, double gamma) {
    s.apply_rank_phase(gamma);
    return s;
}

StateVector apply_mixer_layer(StateVector s, double beta, Mixer mixer) {
    s.apply_mixer(beta, mixer);
    return s;
}

StateVector run_circuit(unsigned qubits, const CircuitParams& params, std::uint64_t budget) {
    params.validate();
    auto s = params.initial == InitialState::Uniform ? StateVector::uniform(qubits, budget)
                                                     : StateVector::basis(qubits, 0, budget);
    for (std::size_t layer = 0; layer < params.depth(); ++layer) {
        s.apply_rank_phase(params.gammas[layer]);
        s.apply_mixer(params.betas[layer], params.mixer);
    }
    return s;
}

ShotBatch sample(const StateVector& s, std::size_t shots, std::uint64_t seed) {
    std::vector<double> cdf(s.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        acc += std::norm(s[i]);
        cdf[i] = acc;
    }
    ShotBatch batch;
    batch.qubits = s.qubits();
    batch.seed = seed;
    batch.outcomes.reserve(shots);
    Rng rng(seed);
    for (std::size_t k = 0; k < shots; ++k) {
        const double u = rng.uniform() * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        auto idx = static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(it - cdf.begin(), static_cast<std::ptrdiff_t>(s.size()) - 1));
        batch.outcomes.push_back(idx);
    }
    return batch;
}

std::string amplitudes_csv(const StateVector& s) {
    if (s.qubits() > 12) {
        throw BudgetError("amplitude dumps are limited to 12 qubits", std::to_string(s.qubits()));
    }
    std::ostringstream out;
    out << "index,re,im\n";
    char buf[80];
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", i, s[i].real(), s[i].imag());
        out << buf;
    }
    return out.str();
}

}  // namespace iqaoa
