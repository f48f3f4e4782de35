#include "qwm/density.hpp"

#include <cmath>
#include <stdexcept>

#include "qwm/errors.hpp"

namespace qwm {

namespace {

void check_density_size(int n, int cap) {
    if (n > cap)
        throw CapacityError("density matrix capped at " + std::to_string(cap) + " qubits");
    if (n < 1) throw std::invalid_argument("need at least one qubit");
}

// rho <- U_j rho U_j† for a single-qubit u acting on `qubit`.
void conjugate_single_qubit(DensityMatrix& rho, int qubit, const std::complex<double> u[4]) {
    const std::size_t dim = rho.dim();
    const std::size_t bit = std::size_t{1} << qubit;
    // Row transform: rho <- U rho.
    for (std::size_t r = 0; r < dim; ++r) {
        if (r & bit) continue;
        const std::size_t r1 = r | bit;
        for (std::size_t c = 0; c < dim; ++c) {
            const auto a = rho.at(r, c), b = rho.at(r1, c);
            rho.at(r, c) = u[0] * a + u[1] * b;
            rho.at(r1, c) = u[2] * a + u[3] * b;
        }
    }
    // Column transform: rho <- rho U†.
    const std::complex<double> v0 = std::conj(u[0]), v1 = std::conj(u[1]);
    const std::complex<double> v2 = std::conj(u[2]), v3 = std::conj(u[3]);
    for (std::size_t c = 0; c < dim; ++c) {
        if (c & bit) continue;
        const std::size_t c1 = c | bit;
        for (std::size_t r = 0; r < dim; ++r) {
            const auto a = rho.at(r, c), b = rho.at(r, c1);
            rho.at(r, c) = a * v0 + b * v1;
            rho.at(r, c1) = a * v2 + b * v3;
        }
    }
}

void axis_rotation_matrix(const std::array<double, 3>& axis, double beta,
                          std::complex<double> u[4]) {
    const double c = std::cos(beta), s = std::sin(beta);
    u[0] = {c, -s * axis[2]};
    u[1] = {-s * axis[1], -s * axis[0]};
    u[2] = {s * axis[1], -s * axis[0]};
    u[3] = {c, s * axis[2]};
}

}  // namespace

double DensityMatrix::trace_real() const {
    double t = 0.0;
    for (std::size_t b = 0; b < dim(); ++b) t += at(b, b).real();
    return t;
}

DensityMatrix density_from_state(const Statevector& sv, int qubit_cap) {
    check_density_size(sv.n, qubit_cap);
    DensityMatrix rho;
    rho.n = sv.n;
    const std::size_t dim = sv.dim();
    rho.m.resize(dim * dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) rho.m[r * dim + c] = sv.amp[r] * std::conj(sv.amp[c]);
    return rho;
}

void phase_damping_channel(DensityMatrix& rho, int qubit, double q) {
    if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("q must lie in [0,1]");
    if (qubit < 0 || qubit >= rho.n) throw std::invalid_argument("qubit index out of range");
    const std::size_t dim = rho.dim();
    const std::size_t bit = std::size_t{1} << qubit;
    const double keep = 1.0 - q;
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            if ((r ^ c) & bit) rho.m[r * dim + c] *= keep;
}

NoisyRunResult run_qaoa_noisy(const CostDiagonal& d, const BlochAngles& s, const MixerSpec& m,
                              const QaoaParams& params, double q, int qubit_cap) {
    const int p = params.depth();
    const int n = d.n;
    check_density_size(n, qubit_cap);
    if (s.size() != n || m.size() != n) throw std::invalid_argument("size mismatch");
    if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("q must lie in [0,1]");

    NoisyRunResult res;
    res.rho = density_from_state(prepare_separable(s, qubit_cap), qubit_cap);
    DensityMatrix& rho = res.rho;
    const std::size_t dim = rho.dim();

    std::complex<double> u[4];
    for (int l = 0; l < p; ++l) {
        // Cost phases are diagonal and applied exactly.
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c)
                rho.m[r * dim + c] *=
                    std::polar(1.0, -params.gamma[l] * (d.value[r] - d.value[c]));
        // Each per-qubit rotation is followed by its dephasing event.
        for (int j = 0; j < n; ++j) {
            axis_rotation_matrix(m.axes[j], params.beta[l], u);
            conjugate_single_qubit(rho, j, u);
            if (q > 0.0) phase_damping_channel(rho, j, q);
        }
    }

    double expect = 0.0;
    for (std::size_t b = 0; b < dim; ++b) expect += rho.at(b, b).real() * d.value[b];
    res.expected_cut = expect;
    return res;
}

NoisyRunResult run_qaoa_noisy(const WeightedGraph& g, const BlochAngles& s, const MixerSpec& m,
                              const QaoaParams& params, double q, int qubit_cap) {
    return run_qaoa_noisy(cost_diagonal(g, qubit_cap), s, m, params, q, qubit_cap);
}

}  // namespace qwm
