#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qwm/graph.hpp"

namespace qwm {

/// n unit vectors in R^k, row-major. Feasible point of the rank-k relaxation.
struct RelaxedSolution {
    int rank = 0;
    std::vector<double> vecs;  // size n * rank

    int size() const { return rank == 0 ? 0 : static_cast<int>(vecs.size()) / rank; }
    std::span<double> row(int i) { return {vecs.data() + static_cast<std::size_t>(i) * rank, static_cast<std::size_t>(rank)}; }
    std::span<const double> row(int i) const { return {vecs.data() + static_cast<std::size_t>(i) * rank, static_cast<std::size_t>(rank)}; }

    /// Throws unless every row has unit norm within kTol.unit_norm.
    void validate() const;
};

/// Per-qubit Bloch positions: theta in [0, pi], phi in [0, 2*pi).
struct BlochAngles {
    std::vector<double> theta;
    std::vector<double> phi;

    int size() const { return static_cast<int>(theta.size()); }
};

/// Relaxation objective Σ (w_ij/2)(1 − x_i·x_j) = Σ (w_ij/4)‖x_i − x_j‖².
double bm_objective(const WeightedGraph& g, const RelaxedSolution& x);

/// Expected cut of hyperplane rounding, Σ w_ij · arccos(x_i·x_j)/π.
/// Dot products are clamped to [−1, 1] before arccos.
double hyperplane_expected_cut(const WeightedGraph& g, const RelaxedSolution& x);

/// One randomized rounding draw: bit_i = 0 iff x_i·r > 0 for a standard
/// Gaussian r. An exact-zero dot product triggers a full redraw of r.
Cut hyperplane_round(const RelaxedSolution& x, std::uint64_t seed);

struct BmResult {
    RelaxedSolution solution;
    double objective = 0.0;
    double grad_norm = 0.0;  // Riemannian gradient norm at the returned point
    bool stationary = false;
    int iterations = 0;
};

/// Riemannian gradient ascent on the product of unit spheres, from a uniform
/// random start, with backtracking line search. Stops when the Riemannian
/// gradient norm drops below tol; otherwise returns the best iterate with
/// stationary = false.
BmResult bm_local_solve(const WeightedGraph& g, int rank, std::uint64_t seed,
                        double tol = 1e-8, int max_iters = 10000);

/// SDP-solution proxy: Burer-Monteiro at rank k* = min(n, ceil(sqrt(2n)) + 1)
/// (above the Barvinok–Pataki threshold) over `restarts` independent starts,
/// best objective kept, embedded as rank-n vectors (zero-padded).
BmResult sdp_solve(const WeightedGraph& g, int restarts, std::uint64_t seed);

/// Unit-scale projection onto a uniformly random k-dimensional subspace,
/// expressed in an orthonormal basis of that subspace. A zero projection
/// (probability 0) triggers a redraw of the subspace.
RelaxedSolution project_to_subspace(const RelaxedSolution& x, int rank, std::uint64_t seed);

/// Haar-random rotation (rank 3) or uniform planar rotation (rank 2).
/// Pairwise inner products are preserved.
RelaxedSolution rotate_uniform(const RelaxedSolution& x, std::uint64_t seed);

/// Isometry placing vertex v's vector at the pole: (0,0,1) for rank 3,
/// (0,1) for rank 2 (which the Bloch embedding maps to the north pole).
RelaxedSolution rotate_vertex_at_top(const RelaxedSolution& x, int vertex);

/// Rank-3 (a,b,c) → θ = arccos c, φ = atan2(b,a) mod 2π.
/// Rank-2 (a,b) is embedded on the xz great circle as (a,0,b).
BlochAngles to_bloch(const RelaxedSolution& x);

/// f_k(θ) = ½(1 − cosθ/k): rotation-averaged per-edge flip probability for
/// rank k ∈ {2,3}.
double averaged_flip_probability(int rank, double theta);

/// Exact expected cut of measuring the separable state with these angles:
/// Σ w_ij · ½(1 − cosθ_i cosθ_j).
double depth0_expected_cut(const WeightedGraph& g, const BlochAngles& s);

/// ε-pole encoding of a single cut: θ_j = ε on side 0, π − ε on side 1, φ = 0.
/// ε = 0 is allowed but puts qubits at the poles (no convergence guarantee).
BlochAngles single_cut_epsilon_state(const Cut& c, double epsilon);

enum class WarmstartMethod { BurerMonteiro, GwProjected };
enum class RotationScheme { Uniform, VertexAtTop };

struct WarmstartOptions {
    WarmstartMethod method = WarmstartMethod::BurerMonteiro;
    int rank = 2;                     // target rank for the Bloch mapping, 2 or 3
    int attempts = 5;                 // BM solves, or projections of the SDP solution
    RotationScheme rotation = RotationScheme::VertexAtTop;
    int rotations_per_solution = 1;
    std::uint64_t seed = 0;
    int sdp_restarts = 3;             // restarts inside the SDP proxy (gw_projected only)
};

struct WarmstartReport {
    std::string method;
    int rank = 0;
    int attempts = 0;
    std::uint64_t seed = 0;
    double bm_objective = 0.0;
    double hp_expected = 0.0;
    double kappa_close = 0.0;   // bm_objective / MaxCut (NaN when extremes unknown)
    double kappa_approx = 0.0;  // hp_expected / MaxCut (NaN when extremes unknown)
    bool stationary = true;
};

struct WarmstartResult {
    RelaxedSolution solution;            // best rank-k solution before rotation
    std::vector<BlochAngles> states;     // one per requested rotation
    std::vector<int> top_vertices;       // vertex-at-top choice per rotation (-1 for uniform)
    WarmstartReport report;
};

/// Best-of-`attempts` pipeline: BM solves (method bm) or projections of one
/// SDP-proxy solution (method gw_projected), ranked by bm_objective, followed
/// by `rotations_per_solution` seeded rotations mapped to Bloch angles.
/// `extremes` may be null; kappa fields are NaN in that case.
WarmstartResult select_warmstart(const WeightedGraph& g, const WarmstartOptions& opt,
                                 const CutExtremes* extremes);

/// Bloch-angle text format: header "n", then n lines "theta phi".
std::string serialize_bloch(const BlochAngles& s);
BlochAngles parse_bloch(std::string_view text);
BlochAngles load_bloch(const std::string& path);
void save_bloch(const BlochAngles& s, const std::string& path);

}  // namespace qwm
