#pragma once

#include "qwm/statevector.hpp"

namespace qwm::ref {

/// Serial reference implementations of the parallel kernels. Written as
/// straight-line gather loops with no strided-pair tricks; the unit tests and
/// the benchmark target hold the parallel kernels to these.

void apply_cost(Statevector& sv, const CostDiagonal& d, double gamma);

void apply_single_qubit(Statevector& sv, int qubit, const std::complex<double> u[4]);

void apply_mixer(Statevector& sv, const MixerSpec& m, double beta);

double expectation_cut(const Statevector& sv, const CostDiagonal& d);

/// Entry b evaluated by an independent cut_value call per basis state.
CostDiagonal cost_diagonal(const WeightedGraph& g);

/// Naive double enumeration over all 2^n assignments; the oracle the
/// optimized brute force is checked against.
CutExtremes brute_force_extremes(const WeightedGraph& g);

}  // namespace qwm::ref
