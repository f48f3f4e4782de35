#include "qwm/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "qwm/errors.hpp"
#include "qwm/rng.hpp"

namespace qwm {

namespace {

// Below this many amplitudes the parallel regions are pure overhead.
constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

void check_qubits(int n, int cap, const char* what) {
    if (n > cap)
        throw CapacityError(std::string(what) + " capped at " + std::to_string(cap) + " qubits");
    if (n < 1) throw std::invalid_argument("need at least one qubit");
    if (n >= 63) throw CapacityError("index space exceeds 63 bits");
}

}  // namespace

double Statevector::norm() const {
    double s = 0.0;
    for (const auto& a : amp) s += std::norm(a);
    return std::sqrt(s);
}

void MixerSpec::validate() const {
    for (const auto& a : axes) {
        const double n = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
        if (std::abs(n - 1.0) > kTol.unit_norm)
            throw std::invalid_argument("mixer axis is not unit norm");
    }
}

int QaoaParams::depth() const {
    if (gamma.size() != beta.size())
        throw std::invalid_argument("gamma and beta must have equal length");
    return static_cast<int>(gamma.size());
}

Statevector prepare_separable(const BlochAngles& s, int qubit_cap) {
    const int n = s.size();
    check_qubits(n, qubit_cap, "statevector");
    Statevector sv;
    sv.n = n;
    const std::size_t dim = std::size_t{1} << n;
    sv.amp.resize(dim);
    std::vector<std::complex<double>> a0(n), a1(n);
    for (int j = 0; j < n; ++j) {
        a0[j] = {std::cos(s.theta[j] / 2.0), 0.0};
        a1[j] = std::polar(std::sin(s.theta[j] / 2.0), s.phi[j]);
    }
    std::complex<double>* amp = sv.amp.data();
    if (dim >= kParallelThreshold) {
#pragma omp parallel for schedule(static)
        for (std::int64_t b = 0; b < static_cast<std::int64_t>(dim); ++b) {
            std::complex<double> v{1.0, 0.0};
            for (int j = 0; j < n; ++j) v *= ((b >> j) & 1) ? a1[j] : a0[j];
            amp[b] = v;
        }
    } else {
        // Doubling construction: amplitudes for k+1 qubits extend the k-qubit
        // block in place.
        amp[0] = {1.0, 0.0};
        std::size_t filled = 1;
        for (int j = 0; j < n; ++j) {
            for (std::size_t b = 0; b < filled; ++b) {
                amp[filled + b] = amp[b] * a1[j];
                amp[b] *= a0[j];
            }
            filled <<= 1;
        }
    }
    return sv;
}

MixerSpec mixer_from_state(const BlochAngles& s) {
    MixerSpec m;
    m.axes.resize(s.size());
    for (int j = 0; j < s.size(); ++j) {
        const double st = std::sin(s.theta[j]);
        m.axes[j] = {st * std::cos(s.phi[j]), st * std::sin(s.phi[j]), std::cos(s.theta[j])};
    }
    return m;
}

MixerSpec standard_mixer(int n) {
    MixerSpec m;
    m.axes.assign(static_cast<std::size_t>(n), {1.0, 0.0, 0.0});
    return m;
}

CostDiagonal cost_diagonal(const WeightedGraph& g, int qubit_cap) {
    const int n = g.vertex_count();
    check_qubits(n, qubit_cap, "cost diagonal");
    CostDiagonal d;
    d.n = n;
    const std::size_t dim = std::size_t{1} << n;
    d.value.assign(dim, 0.0);
    const auto& edges = g.edges();
    double* val = d.value.data();
    if (dim >= kParallelThreshold) {
#pragma omp parallel for schedule(static)
        for (std::int64_t b = 0; b < static_cast<std::int64_t>(dim); ++b) {
            double v = 0.0;
            for (const Edge& e : edges)
                if (((b >> e.u) ^ (b >> e.v)) & 1) v += e.w;
            val[b] = v;
        }
    } else {
        // Per edge, add w to the half of the indices where the endpoint bits
        // differ; same per-entry summation order as the parallel path.
        for (std::size_t b = 0; b < dim; ++b) {
            double v = 0.0;
            for (const Edge& e : edges)
                if (((b >> e.u) ^ (b >> e.v)) & 1) v += e.w;
            val[b] = v;
        }
    }
    return d;
}

void apply_cost(Statevector& sv, const CostDiagonal& d, double gamma) {
    if (d.value.size() != sv.dim()) throw std::invalid_argument("diagonal size mismatch");
    const std::size_t dim = sv.dim();
    std::complex<double>* amp = sv.amp.data();
    const double* val = d.value.data();
    if (dim >= kParallelThreshold) {
#pragma omp parallel for schedule(static)
        for (std::int64_t b = 0; b < static_cast<std::int64_t>(dim); ++b)
            amp[b] *= std::polar(1.0, -gamma * val[b]);
    } else {
        for (std::size_t b = 0; b < dim; ++b) amp[b] *= std::polar(1.0, -gamma * val[b]);
    }
}

void apply_single_qubit(Statevector& sv, int qubit, const std::complex<double> u[4]) {
    const std::size_t dim = sv.dim();
    const std::size_t stride = std::size_t{1} << qubit;
    const std::size_t block = stride << 1;
    std::complex<double>* amp = sv.amp.data();
    const std::complex<double> u0 = u[0], u1 = u[1], u2 = u[2], u3 = u[3];
    if (dim >= kParallelThreshold) {
        // Gather into a fresh buffer: independent per-index writes vectorize
        // and parallelize with no in-place pair hazard.
        std::vector<std::complex<double>> out(dim);
        std::complex<double>* o = out.data();
#pragma omp parallel for schedule(static)
        for (std::int64_t b = 0; b < static_cast<std::int64_t>(dim); ++b) {
            const std::size_t b0 = static_cast<std::size_t>(b) & ~stride;
            const std::size_t b1 = static_cast<std::size_t>(b) | stride;
            o[b] = (static_cast<std::size_t>(b) & stride) ? u2 * amp[b0] + u3 * amp[b1]
                                                          : u0 * amp[b0] + u1 * amp[b1];
        }
        sv.amp.swap(out);
    } else {
        // Cache-resident sizes: in-place strided pair update, no allocation.
        for (std::size_t base = 0; base < dim; base += block) {
            for (std::size_t off = 0; off < stride; ++off) {
                const std::size_t i0 = base + off;
                const std::size_t i1 = i0 + stride;
                const std::complex<double> a0 = amp[i0];
                const std::complex<double> a1 = amp[i1];
                amp[i0] = u0 * a0 + u1 * a1;
                amp[i1] = u2 * a0 + u3 * a1;
            }
        }
    }
}

namespace {

// R(2β) about n̂: cos(β) I − i sin(β) (x σx + y σy + z σz).
void axis_rotation_matrix(const std::array<double, 3>& axis, double beta,
                          std::complex<double> u[4]) {
    const double c = std::cos(beta), s = std::sin(beta);
    const double x = axis[0], y = axis[1], z = axis[2];
    u[0] = {c, -s * z};
    u[1] = {-s * y, -s * x};
    u[2] = {s * y, -s * x};
    u[3] = {c, s * z};
}

}  // namespace

void apply_mixer(Statevector& sv, const MixerSpec& m, double beta) {
    if (m.size() != sv.n) throw std::invalid_argument("mixer size mismatch");
    std::complex<double> u[4];
    for (int j = 0; j < sv.n; ++j) {
        axis_rotation_matrix(m.axes[j], beta, u);
        apply_single_qubit(sv, j, u);
    }
}

Statevector run_qaoa(const CostDiagonal& d, const BlochAngles& s, const MixerSpec& m,
                     const QaoaParams& params) {
    const int p = params.depth();
    if (s.size() != d.n || m.size() != d.n) throw std::invalid_argument("size mismatch");
    Statevector sv = prepare_separable(s, d.n);
    for (int l = 0; l < p; ++l) {
        apply_cost(sv, d, params.gamma[l]);
        apply_mixer(sv, m, params.beta[l]);
    }
    return sv;
}

Statevector run_qaoa(const WeightedGraph& g, const BlochAngles& s, const MixerSpec& m,
                     const QaoaParams& params, int qubit_cap) {
    return run_qaoa(cost_diagonal(g, qubit_cap), s, m, params);
}

double expectation_cut(const Statevector& sv, const CostDiagonal& d) {
    if (d.value.size() != sv.dim()) throw std::invalid_argument("diagonal size mismatch");
    const std::size_t dim = sv.dim();
    const std::complex<double>* amp = sv.amp.data();
    const double* val = d.value.data();
    double total = 0.0;
    if (dim >= kParallelThreshold) {
#pragma omp parallel for schedule(static) reduction(+ : total)
        for (std::int64_t b = 0; b < static_cast<std::int64_t>(dim); ++b)
            total += std::norm(amp[b]) * val[b];
    } else {
        for (std::size_t b = 0; b < dim; ++b) total += std::norm(amp[b]) * val[b];
    }
    return total;
}

std::vector<double> cut_distribution(const Statevector& sv) {
    std::vector<double> p(sv.dim());
    for (std::size_t b = 0; b < sv.dim(); ++b) p[b] = std::norm(sv.amp[b]);
    return p;
}

std::vector<Cut> sample_cuts(const Statevector& sv, int shots, std::uint64_t seed) {
    const auto p = cut_distribution(sv);
    std::vector<double> cdf(p.size());
    double acc = 0.0;
    for (std::size_t b = 0; b < p.size(); ++b) {
        acc += p[b];
        cdf[b] = acc;
    }
    Rng rng(derive_seed(seed, seed_stream::kSampling));
    std::vector<Cut> out;
    out.reserve(static_cast<std::size_t>(shots));
    for (int s = 0; s < shots; ++s) {
        const double u = rng.uniform() * acc;
        // upper_bound skips zero-probability outcomes on plateau boundaries
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const std::size_t b = std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), p.size() - 1);
        out.push_back(Cut::from_index(sv.n, b));
    }
    return out;
}

void dump_statevector(const Statevector& sv, const std::string& path) {
    static_assert(std::endian::native == std::endian::little,
                  "statevector dump assumes a little-endian host");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    for (const auto& a : sv.amp) {
        const double re = a.real(), im = a.imag();
        out.write(reinterpret_cast<const char*>(&re), sizeof(re));
        out.write(reinterpret_cast<const char*>(&im), sizeof(im));
    }
}

}  // namespace qwm
