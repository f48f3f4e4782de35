#include "qwm/serial_ref.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qwm::ref {

void apply_cost(Statevector& sv, const CostDiagonal& d, double gamma) {
    if (d.value.size() != sv.dim()) throw std::invalid_argument("diagonal size mismatch");
    for (std::size_t b = 0; b < sv.dim(); ++b)
        sv.amp[b] *= std::exp(std::complex<double>(0.0, -gamma * d.value[b]));
}

void apply_single_qubit(Statevector& sv, int qubit, const std::complex<double> u[4]) {
    const std::size_t dim = sv.dim();
    const std::size_t bit = std::size_t{1} << qubit;
    std::vector<std::complex<double>> out(dim);
    for (std::size_t b = 0; b < dim; ++b) {
        const std::size_t b0 = b & ~bit;
        const std::size_t b1 = b | bit;
        out[b] = (b & bit) ? u[2] * sv.amp[b0] + u[3] * sv.amp[b1]
                           : u[0] * sv.amp[b0] + u[1] * sv.amp[b1];
    }
    sv.amp = std::move(out);
}

void apply_mixer(Statevector& sv, const MixerSpec& m, double beta) {
    if (m.size() != sv.n) throw std::invalid_argument("mixer size mismatch");
    const double c = std::cos(beta), s = std::sin(beta);
    for (int j = 0; j < sv.n; ++j) {
        const auto& a = m.axes[j];
        const std::complex<double> u[4] = {
            {c, -s * a[2]}, {-s * a[1], -s * a[0]}, {s * a[1], -s * a[0]}, {c, s * a[2]}};
        ref::apply_single_qubit(sv, j, u);
    }
}

double expectation_cut(const Statevector& sv, const CostDiagonal& d) {
    if (d.value.size() != sv.dim()) throw std::invalid_argument("diagonal size mismatch");
    double total = 0.0;
    for (std::size_t b = 0; b < sv.dim(); ++b) total += std::norm(sv.amp[b]) * d.value[b];
    return total;
}

CostDiagonal cost_diagonal(const WeightedGraph& g) {
    const int n = g.vertex_count();
    CostDiagonal d;
    d.n = n;
    d.value.resize(std::size_t{1} << n);
    for (std::size_t b = 0; b < d.value.size(); ++b)
        d.value[b] = cut_value(g, Cut::from_index(n, b));
    return d;
}

CutExtremes brute_force_extremes(const WeightedGraph& g) {
    const int n = g.vertex_count();
    if (n > 30) throw std::invalid_argument("reference enumeration limited to 30 vertices");
    CutExtremes ex;
    ex.max_cut = -std::numeric_limits<double>::infinity();
    ex.min_cut = std::numeric_limits<double>::infinity();
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        const Cut c = Cut::from_index(n, b);
        const double v = cut_value(g, c);
        if (v > ex.max_cut) {
            ex.max_cut = v;
            ex.max_witness = c;
        }
        if (v < ex.min_cut) {
            ex.min_cut = v;
            ex.min_witness = c;
        }
    }
    return ex;
}

}  // namespace qwm::ref
