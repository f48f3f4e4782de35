#pragma once

namespace qwm {

/// Central numeric tolerances shared across modules.
struct Tolerances {
    double unit_norm = 1e-9;   // statevector / unit-vector / trace normalization checks
    double entry = 1e-12;      // per-entry structural checks (hermiticity, stoquasticity, pattern)
    double psd = 1e-8;         // density-matrix minimum-eigenvalue slack
    double isometry = 1e-10;   // Gram / objective preservation under rotations
};

inline constexpr Tolerances kTol{};

/// Default size caps. The CLI applies the QWM_MAX_QUBITS environment override
/// (see caps()); library entry points take the cap as a defaulted parameter.
struct Caps {
    int statevector_qubits = 20;
    int density_qubits = 10;
    int dense_qubits = 12;        // dense spectral tools (mixer_matrix and friends)
    int brute_force_vertices = 24;
};

inline constexpr Caps kDefaultCaps{};

/// Caps with QWM_MAX_QUBITS applied: when the variable is set to a positive
/// integer it replaces the three qubit caps (statevector, density, dense).
Caps caps();

}  // namespace qwm
