#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace iqaoa {

using Amplitude = std::complex<double>;

/// Mixer layers. Each applies the CX chain (control j -> target j+1, j
/// ascending) and single-qubit rotations on every qubit:
///   RyAfterChain   chain, then RY(beta)
///   RxAfterChain   chain, then RX(beta)
///   RxRyAfterChain chain, then RX(beta) followed by RY(beta)
///   ChainAfterRy   RY(beta), then chain
enum class Mixer : int { RyAfterChain = 1, RxAfterChain = 2, RxRyAfterChain = 3, ChainAfterRy = 4 };

/// Throws ValidationError for tags outside 1..4.
Mixer mixer_from_tag(int tag);
inline int mixer_tag(Mixer m) noexcept { return static_cast<int>(m); }

/// Register state before the first layer.
enum class InitialState : int { Zero = 0, Uniform = 1 };

InitialState initial_state_from_name(std::string_view name);
const char* initial_state_name(InitialState s) noexcept;

struct CircuitParams {
    std::vector<double> gammas;
    std::vector<double> betas;
    Mixer mixer = Mixer::RyAfterChain;
    InitialState initial = InitialState::Zero;

    std::size_t depth() const noexcept { return gammas.size(); }
    /// Throws ValidationError unless |gammas| == |betas| >= 1.
    void validate() const;
};

/// Maximum amplitudes a StateVector may hold. Reads IQAOA_MAX_AMPLITUDES,
/// defaulting to 2^26.
std::uint64_t amplitude_budget();

/// Dense register of q qubits; qubit j is bit j of the basis index.
class StateVector {
public:
    /// Uniform superposition over all 2^q basis states. Throws BudgetError
    /// above `budget` amplitudes.
    static StateVector uniform(unsigned qubits, std::uint64_t budget = amplitude_budget());
    static StateVector basis(unsigned qubits, std::uint64_t index, std::uint64_t budget = amplitude_budget());
    static StateVector from_amplitudes(std::vector<Amplitude> amps);

    unsigned qubits() const noexcept { return qubits_; }
    std::size_t size() const noexcept { return amps_.size(); }
    std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
    const Amplitude& operator[](std::size_t i) const { return amps_[i]; }

    double norm_squared() const;
    std::vector<double> probabilities() const;

    // Single gates.
    void apply_phase(unsigned qubit, double angle);  // diag(1, exp(-i angle))
    void apply_rx(unsigned qubit, double theta);
    void apply_ry(unsigned qubit, double theta);
    void apply_cx(unsigned control, unsigned target);

    /// Phase exp(-i gamma 2^j) on the |1> component of each qubit j, i.e.
    /// exp(-i gamma x) on basis state x.
    void apply_rank_phase(double gamma);
    /// CX(0,1), CX(1,2), ..., CX(q-2,q-1), fused into one permutation pass.
    void apply_cx_chain();
    void apply_mixer(double beta, Mixer mixer);

private:
    StateVector(unsigned qubits, std::vector<Amplitude> amps);

    unsigned qubits_;
    std::vector<Amplitude> amps_;
    std::vector<Amplitude> scratch_;
};

StateVector init_uniform(unsigned qubits);
StateVector apply_phase_layer(StateVector s, double gamma);
StateVector apply_mixer_layer(StateVector s, double beta, Mixer mixer);

/// Prepares `params.initial`, then per layer: rank phase gamma_l followed by
/// the mixer with beta_l.
StateVector run_circuit(unsigned qubits, const CircuitParams& params, std::uint64_t budget = amplitude_budget());

struct ShotBatch {
    std::vector<std::uint64_t> outcomes;  // basis indices
    unsigned qubits = 0;
    std::uint64_t seed = 0;

    /// Bit j of shot i.
    std::uint8_t bit(std::size_t shot, unsigned j) const { return (outcomes[shot] >> j) & 1U; }
};

/// Inverse-CDF sampling of |amplitude|^2; reproducible for a given seed.
ShotBatch sample(const StateVector& s, std::size_t shots, std::uint64_t seed);

/// `index,re,im` rows; refuses registers wider than 12 qubits.
std::string amplitudes_csv(const StateVector& s);

}  // namespace iqaoa
