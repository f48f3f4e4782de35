// Compares the parallel statevector / brute-force kernels against the serial
// reference implementations: agreement check plus a timing table.
//
//   bench_kernels [qubits=16] [brute_vertices=20]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qwm/graph.hpp"
#include "qwm/rng.hpp"
#include "qwm/serial_ref.hpp"
#include "qwm/statevector.hpp"
#include "qwm/warmstart.hpp"

using namespace qwm;

namespace {

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

template <typename F>
double time_ms(F&& f, int reps) {
    const double t0 = now_ms();
    for (int r = 0; r < reps; ++r) f();
    return (now_ms() - t0) / reps;
}

void report(const char* op, double serial_ms, double parallel_ms, double max_dev) {
    std::printf("%-22s %10.2f ms %10.2f ms %8.2fx   %.2e\n", op, serial_ms, parallel_ms,
                serial_ms / parallel_ms, max_dev);
}

}  // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 16;
    const int brute_n = argc > 2 ? std::atoi(argv[2]) : 20;

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled in this build\n");
#endif
    std::printf("statevector qubits: %d, brute-force vertices: %d\n\n", n, brute_n);
    std::printf("%-22s %13s %13s %9s   %s\n", "kernel", "serial", "parallel", "speedup",
                "max |diff|");

    Rng rng(12345);
    BlochAngles s;
    s.theta.resize(n);
    s.phi.resize(n);
    for (int j = 0; j < n; ++j) {
        s.theta[j] = rng.uniform(0.2, 2.9);
        s.phi[j] = rng.uniform(0.0, 6.28);
    }
    const WeightedGraph g = generate_erdos_renyi(n, 0.4, WeightLaw::uniform(0.1, 1.0), 99);
    const MixerSpec m = mixer_from_state(s);

    // cost_diagonal
    CostDiagonal d_par, d_ser;
    const double t_diag_par = time_ms([&] { d_par = cost_diagonal(g, n); }, 3);
    const double t_diag_ser = time_ms([&] { d_ser = ref::cost_diagonal(g); }, 3);
    double dev = 0.0;
    for (std::size_t b = 0; b < d_par.value.size(); ++b)
        dev = std::max(dev, std::abs(d_par.value[b] - d_ser.value[b]));
    report("cost_diagonal", t_diag_ser, t_diag_par, dev);

    // apply_cost
    Statevector sv_par = prepare_separable(s, n);
    Statevector sv_ser = sv_par;
    const double t_cost_par = time_ms([&] { apply_cost(sv_par, d_par, 0.123); }, 5);
    const double t_cost_ser = time_ms([&] { ref::apply_cost(sv_ser, d_ser, 0.123); }, 5);
    dev = 0.0;
    for (std::size_t b = 0; b < sv_par.dim(); ++b)
        dev = std::max(dev, std::abs(sv_par.amp[b] - sv_ser.amp[b]));
    report("apply_cost", t_cost_ser, t_cost_par, dev);

    // apply_mixer (one full layer over all qubits)
    const double t_mix_par = time_ms([&] { apply_mixer(sv_par, m, 0.456); }, 3);
    const double t_mix_ser = time_ms([&] { ref::apply_mixer(sv_ser, m, 0.456); }, 3);
    dev = 0.0;
    for (std::size_t b = 0; b < sv_par.dim(); ++b)
        dev = std::max(dev, std::abs(sv_par.amp[b] - sv_ser.amp[b]));
    report("apply_mixer", t_mix_ser, t_mix_par, dev);

    // expectation_cut
    double e_par = 0, e_ser = 0;
    const double t_exp_par = time_ms([&] { e_par = expectation_cut(sv_par, d_par); }, 5);
    const double t_exp_ser = time_ms([&] { e_ser = ref::expectation_cut(sv_ser, d_ser); }, 5);
    report("expectation_cut", t_exp_ser, t_exp_par, std::abs(e_par - e_ser));

    // brute-force extremes
    const WeightedGraph gb =
        generate_erdos_renyi(brute_n, 0.4, WeightLaw::uniform(0.1, 1.0), 100);
    CutExtremes ex_par, ex_ser;
    const double t_bf_par = time_ms([&] { ex_par = brute_force_extremes(gb, brute_n); }, 1);
    const double t_bf_ser = time_ms([&] { ex_ser = ref::brute_force_extremes(gb); }, 1);
    report("brute_force_extremes", t_bf_ser, t_bf_par,
           std::max(std::abs(ex_par.max_cut - ex_ser.max_cut),
                    std::abs(ex_par.min_cut - ex_ser.min_cut)));

    return 0;
}
