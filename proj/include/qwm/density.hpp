#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qwm/statevector.hpp"

namespace qwm {

/// 2^n × 2^n density matrix, row-major, same bit-order convention as
/// Statevector.
struct DensityMatrix {
    int n = 0;
    std::vector<std::complex<double>> m;

    std::size_t dim() const { return std::size_t{1} << n; }
    std::complex<double>& at(std::size_t r, std::size_t c) { return m[r * dim() + c]; }
    const std::complex<double>& at(std::size_t r, std::size_t c) const { return m[r * dim() + c]; }
    double trace_real() const;
};

DensityMatrix density_from_state(const Statevector& sv,
                                 int qubit_cap = kDefaultCaps.density_qubits);

/// Kraus set {√(1−q) I, √q |0⟩⟨0|, √q |1⟩⟨1|} on one qubit: the blocks with
/// equal bit j are preserved, the cross blocks scale by (1−q).
void phase_damping_channel(DensityMatrix& rho, int qubit, double q);

struct NoisyRunResult {
    DensityMatrix rho;
    double expected_cut = 0.0;
};

/// Density-matrix evolution of the circuit, dephasing each qubit with
/// probability q after its mixer rotation; cost phases are exact.
NoisyRunResult run_qaoa_noisy(const WeightedGraph& g, const BlochAngles& s, const MixerSpec& m,
                              const QaoaParams& params, double q,
                              int qubit_cap = kDefaultCaps.density_qubits);
NoisyRunResult run_qaoa_noisy(const CostDiagonal& d, const BlochAngles& s, const MixerSpec& m,
                              const QaoaParams& params, double q,
                              int qubit_cap = kDefaultCaps.density_qubits);

}  // namespace qwm
