#include "qwm/spectral.hpp"

#include <queue>
#include <stdexcept>

#include "qwm/errors.hpp"

namespace qwm {

Eigen::MatrixXcd mixer_matrix(const MixerSpec& m, int qubit_cap) {
    const int n = m.size();
    if (n < 1) throw std::invalid_argument("need at least one qubit");
    if (n > qubit_cap)
        throw CapacityError("dense mixer matrix capped at " + std::to_string(qubit_cap) + " qubits");
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    for (int j = 0; j < n; ++j) {
        const double x = m.axes[j][0], y = m.axes[j][1], z = m.axes[j][2];
        // n̂·σ = [[z, x−iy], [x+iy, −z]] acting on bit j.
        const std::complex<double> h00{z, 0.0}, h01{x, -y}, h10{x, y}, h11{-z, 0.0};
        const std::size_t bit = std::size_t{1} << j;
        for (std::size_t i0 = 0; i0 < static_cast<std::size_t>(dim); ++i0) {
            if (i0 & bit) continue;
            const std::size_t i1 = i0 | bit;
            h(i0, i0) += h00;
            h(i0, i1) += h01;
            h(i1, i0) += h10;
            h(i1, i1) += h11;
        }
    }
    return h;
}

Eigen::MatrixXcd interpolated_hamiltonian(const MixerSpec& m, const CostDiagonal& d, double t_frac,
                                          int qubit_cap) {
    if (m.size() != d.n) throw std::invalid_argument("mixer/diagonal size mismatch");
    if (!(t_frac >= 0.0 && t_frac <= 1.0)) throw std::invalid_argument("t_frac must lie in [0,1]");
    Eigen::MatrixXcd h = (1.0 - t_frac) * mixer_matrix(m, qubit_cap);
    for (Eigen::Index b = 0; b < h.rows(); ++b)
        h(b, b) += t_frac * d.value[static_cast<std::size_t>(b)];
    return h;
}

double eigen_gap(const Eigen::MatrixXcd& h) {
    if (h.rows() != h.cols()) throw std::invalid_argument("matrix must be square");
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-9)
        throw std::invalid_argument("matrix is not Hermitian");
    if (h.rows() < 2) throw std::invalid_argument("need dimension >= 2 for a gap");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();  // ascending
    const Eigen::Index d = ev.size();
    return ev(d - 1) - ev(d - 2);
}

bool is_stoquastic(const Eigen::MatrixXcd& h) {
    for (Eigen::Index r = 0; r < h.rows(); ++r) {
        for (Eigen::Index c = 0; c < h.cols(); ++c) {
            const auto& e = h(r, c);
            if (std::abs(e.imag()) >= kTol.entry) return false;
            if (r != c && e.real() < -kTol.entry) return false;
        }
    }
    return true;
}

namespace {

// BFS reachability from node 0 over the pattern |h| > tol (optionally its
// transpose). Returns true iff every node is reached.
bool reaches_all(const Eigen::MatrixXcd& h, bool transpose) {
    const Eigen::Index n = h.rows();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<Eigen::Index> q;
    seen[0] = 1;
    q.push(0);
    Eigen::Index count = 1;
    while (!q.empty()) {
        const Eigen::Index i = q.front();
        q.pop();
        for (Eigen::Index j = 0; j < n; ++j) {
            if (seen[static_cast<std::size_t>(j)] || i == j) continue;
            const auto& e = transpose ? h(j, i) : h(i, j);
            if (std::abs(e) > kTol.entry) {
                seen[static_cast<std::size_t>(j)] = 1;
                ++count;
                q.push(j);
            }
        }
    }
    return count == n;
}

}  // namespace

bool is_irreducible(const Eigen::MatrixXcd& h) {
    if (h.rows() != h.cols()) throw std::invalid_argument("matrix must be square");
    if (h.rows() == 1) return true;
    return reaches_all(h, false) && reaches_all(h, true);
}

}  // namespace qwm
