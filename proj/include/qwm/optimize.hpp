#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qwm/statevector.hpp"

namespace qwm {

struct OptConfig {
    double init_scale = 0.01;             // parameters start in Uniform[0, init_scale]
    double termination_tol_factor = 1e-6; // stop when |ΔF| < W̄ · this
    int max_iters = 2000;
    double fd_step = 1e-4;                // central-difference step
    std::uint64_t seed = 0;
};

struct OptResult {
    QaoaParams params;
    double best_value = 0.0;
    std::vector<double> trace;  // accepted F values, trace[0] = initial point
    bool converged = false;
    int iterations = 0;
};

/// Finite-difference gradient ascent on F_p with backtracking line search.
/// Terminates on the |ΔF| < W̄·tol rule; converged additionally certifies a
/// small finite-difference gradient (norm ≤ 10·fd_step·W̄) at the returned
/// point. p = 0 just evaluates the initial state.
OptResult optimize(const WeightedGraph& g, const BlochAngles& s, const MixerSpec& m, int depth,
                   const OptConfig& cfg);

/// Same ascent from explicit initial parameters (depth-extension seeding).
OptResult optimize_from(const WeightedGraph& g, const BlochAngles& s, const MixerSpec& m,
                        QaoaParams initial, const OptConfig& cfg);

/// Best result over independent seeded starts, plus optional explicit extra
/// starting points. Ties go to the earliest start.
OptResult multistart(const WeightedGraph& g, const BlochAngles& s, const MixerSpec& m, int depth,
                     int starts, const OptConfig& cfg,
                     const std::vector<QaoaParams>& extra_starts = {});

/// Depth-1 landscape on a Cartesian grid; values in row-major order with
/// row = beta index, column = gamma index.
struct SweepGrid {
    std::vector<double> gamma;
    std::vector<double> beta;
    std::vector<double> values;

    double at(int beta_idx, int gamma_idx) const {
        return values[static_cast<std::size_t>(beta_idx) * gamma.size() + gamma_idx];
    }
};

SweepGrid sweep_grid(const WeightedGraph& g, const BlochAngles& s, const MixerSpec& m,
                     std::pair<double, double> gamma_range, std::pair<double, double> beta_range,
                     int resolution);

}  // namespace qwm
