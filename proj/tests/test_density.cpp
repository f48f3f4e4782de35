#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qwm/density.hpp"
#include "qwm/errors.hpp"
#include "qwm/optimize.hpp"
#include "qwm/rng.hpp"
#include "qwm/statevector.hpp"

using namespace qwm;

namespace {

constexpr double kPi = 3.14159265358979323846;

BlochAngles random_angles(Rng& rng, int n) {
    BlochAngles s;
    s.theta.resize(n);
    s.phi.resize(n);
    for (int j = 0; j < n; ++j) {
        s.theta[j] = rng.uniform(0.0, kPi);
        s.phi[j] = rng.uniform(0.0, 2 * kPi);
    }
    return s;
}

WeightedGraph random_graph(Rng& rng, int n, double p) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform() < p) edges.push_back({u, v, rng.uniform(0.1, 1.0)});
    if (edges.empty()) edges.push_back({0, 1, 1.0});
    return WeightedGraph(n, std::move(edges));
}

}  // namespace

TEST_CASE("density_from_state structure", "[density]") {
    Rng rng(2);
    const auto sv = prepare_separable(random_angles(rng, 4));
    const auto rho = density_from_state(sv);
    CHECK(rho.trace_real() == Catch::Approx(1.0).margin(1e-12));
    for (std::size_t r = 0; r < rho.dim(); ++r) {
        CHECK(rho.at(r, r).real() == Catch::Approx(std::norm(sv.amp[r])).margin(1e-12));
        for (std::size_t c = 0; c < rho.dim(); ++c)
            CHECK(std::abs(rho.at(r, c) - std::conj(rho.at(c, r))) < 1e-12);
    }
}

TEST_CASE("phase damping channel", "[density]") {
    Rng rng(7);
    const auto sv = prepare_separable(random_angles(rng, 1));
    auto rho = density_from_state(sv);
    const auto original = rho;

    // q = 0 is the identity channel.
    phase_damping_channel(rho, 0, 0.0);
    for (std::size_t i = 0; i < rho.m.size(); ++i) CHECK(rho.m[i] == original.m[i]);

    // Off-diagonals scale by exactly (1 - q), populations untouched.
    const double q = 0.31;
    phase_damping_channel(rho, 0, q);
    CHECK(rho.at(0, 0) == original.at(0, 0));
    CHECK(rho.at(1, 1) == original.at(1, 1));
    CHECK(rho.at(0, 1) == (1.0 - q) * original.at(0, 1));
    CHECK(rho.at(1, 0) == (1.0 - q) * original.at(1, 0));

    // q = 1 kills that qubit's coherences.
    auto rho1 = original;
    phase_damping_channel(rho1, 0, 1.0);
    CHECK(std::abs(rho1.at(0, 1)) == 0.0);
    CHECK(std::abs(rho1.at(1, 0)) == 0.0);

    CHECK_THROWS_AS(phase_damping_channel(rho1, 0, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(phase_damping_channel(rho1, 3, 0.5), std::invalid_argument);
}

TEST_CASE("multi-qubit phase damping only hits the target qubit", "[density]") {
    Rng rng(13);
    const auto sv = prepare_separable(random_angles(rng, 3));
    auto rho = density_from_state(sv);
    const auto original = rho;
    const double q = 0.2;
    phase_damping_channel(rho, 1, q);
    const std::size_t bit = 2;
    for (std::size_t r = 0; r < rho.dim(); ++r)
        for (std::size_t c = 0; c < rho.dim(); ++c) {
            const auto expected =
                ((r ^ c) & bit) ? (1.0 - q) * original.at(r, c) : original.at(r, c);
            CHECK(rho.at(r, c) == expected);
        }
}

TEST_CASE("noiseless density run matches the statevector", "[density]") {
    Rng rng(19);
    for (int trial = 0; trial < 5; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(4));
        const auto g = random_graph(rng, n, 0.6);
        const auto d = cost_diagonal(g);
        const auto s = random_angles(rng, n);
        const auto m = mixer_from_state(s);
        QaoaParams params;
        params.gamma = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        params.beta = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};

        const auto noisy = run_qaoa_noisy(d, s, m, params, 0.0);
        const double ideal = expectation_cut(run_qaoa(d, s, m, params), d);
        CHECK(noisy.expected_cut == Catch::Approx(ideal).margin(1e-10));
        CHECK(noisy.rho.trace_real() == Catch::Approx(1.0).margin(1e-10));
    }
}

TEST_CASE("dephasing at the ideal optimum does not help on average", "[density]") {
    Rng rng(23);
    double ideal_mean = 0.0, noisy_mean = 0.0;
    const int trials = 6;
    for (int trial = 0; trial < trials; ++trial) {
        const auto g = random_graph(rng, 4, 0.7);
        const auto d = cost_diagonal(g);
        const auto s = random_angles(rng, 4);
        const auto m = mixer_from_state(s);
        OptConfig cfg;
        cfg.seed = 400 + trial;
        const auto opt = optimize(g, s, m, 1, cfg);

        const auto noisy = run_qaoa_noisy(d, s, m, opt.params, 0.05);
        CHECK(noisy.rho.trace_real() == Catch::Approx(1.0).margin(1e-9));
        ideal_mean += opt.best_value;
        noisy_mean += noisy.expected_cut;
    }
    // Sign check at optimal parameters, averaged over instances.
    CHECK(noisy_mean <= ideal_mean + 1e-12);
}

TEST_CASE("density capacity", "[density]") {
    Rng rng(29);
    const auto g = random_graph(rng, 4, 0.9);
    const auto s = random_angles(rng, 4);
    QaoaParams p;
    p.gamma = {0.1};
    p.beta = {0.1};
    CHECK_THROWS_AS(run_qaoa_noisy(g, s, mixer_from_state(s), p, 0.01, /*qubit_cap=*/3),
                    CapacityError);
}
