#pragma once

#include <Eigen/Dense>

#include "qwm/statevector.hpp"

namespace qwm {

/// Dense spectral tools for verifying the adiabatic-convergence conditions.
/// Kept apart from the simulation path; sizes are capped because everything
/// here is O(4^n) or worse.

/// H_B = Σ_j I ⊗ … ⊗ (n̂_j·σ) ⊗ … ⊗ I in the qubit-0-least-significant order.
Eigen::MatrixXcd mixer_matrix(const MixerSpec& m, int qubit_cap = kDefaultCaps.dense_qubits);

/// H(t) = (1 − t)·H_B + t·diag(d) for t ∈ [0,1].
Eigen::MatrixXcd interpolated_hamiltonian(const MixerSpec& m, const CostDiagonal& d,
                                          double t_frac, int qubit_cap = kDefaultCaps.dense_qubits);

/// λ1 − λ2 of the sorted real spectrum (with multiplicity). Throws on
/// non-Hermitian input.
double eigen_gap(const Eigen::MatrixXcd& h);

/// True iff entries are real (|Im| < kTol.entry) and off-diagonal entries are
/// ≥ −kTol.entry.
bool is_stoquastic(const Eigen::MatrixXcd& h);

/// True iff the directed graph with edge (i,j) for |h_ij| > kTol.entry, i ≠ j,
/// is strongly connected (BFS on the pattern and its transpose).
bool is_irreducible(const Eigen::MatrixXcd& h);

}  // namespace qwm
