#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "qwm/config.hpp"
#include "qwm/graph.hpp"
#include "qwm/warmstart.hpp"

namespace qwm {

/// Exact n-qubit state. Basis index bit j = qubit j, qubit 0 least significant.
/// All Kronecker-structured operations in this project follow that convention.
struct Statevector {
    int n = 0;
    std::vector<std::complex<double>> amp;

    std::size_t dim() const { return amp.size(); }
    double norm() const;
};

/// Per-qubit rotation axes n̂_j; the mixer generator is Σ_j n̂_j·σ on qubit j.
struct MixerSpec {
    std::vector<std::array<double, 3>> axes;

    int size() const { return static_cast<int>(axes.size()); }
    void validate() const;  // each axis unit norm within kTol.unit_norm
};

/// Variational angles; gamma and beta both have length p.
struct QaoaParams {
    std::vector<double> gamma;
    std::vector<double> beta;

    int depth() const;  // validates equal lengths
};

/// Diagonal of the cost Hamiltonian: entry b = cut value of bitstring b.
struct CostDiagonal {
    int n = 0;
    std::vector<double> value;
};

/// Tensor product of cos(θ_j/2)|0⟩ + e^{iφ_j} sin(θ_j/2)|1⟩.
Statevector prepare_separable(const BlochAngles& s, int qubit_cap = kDefaultCaps.statevector_qubits);

/// Mixer whose top eigenstate is prepare_separable(s): axes = cartesian(θ_j, φ_j).
MixerSpec mixer_from_state(const BlochAngles& s);

/// All axes (1,0,0): the standard transverse-field mixer.
MixerSpec standard_mixer(int n);

CostDiagonal cost_diagonal(const WeightedGraph& g, int qubit_cap = kDefaultCaps.statevector_qubits);

/// a_b ← e^{−iγ·d(b)} a_b.
void apply_cost(Statevector& sv, const CostDiagonal& d, double gamma);

/// Per qubit j, the 2×2 unitary cos(β)I − i sin(β)(n̂_j·σ), i.e. rotation by 2β
/// about the qubit's axis.
void apply_mixer(Statevector& sv, const MixerSpec& m, double beta);

/// Single-qubit unitary u (row-major 2×2) applied to qubit j. Building block
/// shared by the mixer and the density-matrix evolution.
void apply_single_qubit(Statevector& sv, int qubit, const std::complex<double> u[4]);

/// Full circuit: prepare, then p alternations of cost (γ_l) and mixer (β_l).
Statevector run_qaoa(const CostDiagonal& d, const BlochAngles& s, const MixerSpec& m,
                     const QaoaParams& params);
Statevector run_qaoa(const WeightedGraph& g, const BlochAngles& s, const MixerSpec& m,
                     const QaoaParams& params, int qubit_cap = kDefaultCaps.statevector_qubits);

/// F_p = Σ_b |a_b|² d(b).
double expectation_cut(const Statevector& sv, const CostDiagonal& d);

/// Exact measurement distribution |a_b|².
std::vector<double> cut_distribution(const Statevector& sv);

/// Multinomial samples from the exact distribution, deterministic per seed.
std::vector<Cut> sample_cuts(const Statevector& sv, int shots, std::uint64_t seed);

/// Raw little-endian dump: per amplitude, two 64-bit floats (re, im) in basis
/// order. Debug facility used by the CLI.
void dump_statevector(const Statevector& sv, const std::string& path);

}  // namespace qwm
