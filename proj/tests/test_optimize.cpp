#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qwm/graph.hpp"
#include "qwm/optimize.hpp"
#include "qwm/rng.hpp"
#include "qwm/warmstart.hpp"

using namespace qwm;

namespace {

constexpr double kPi = 3.14159265358979323846;

BlochAngles plus_states(int n) {
    BlochAngles s;
    s.theta.assign(n, kPi / 2);
    s.phi.assign(n, 0.0);
    return s;
}

WeightedGraph dense_unit_graph(int n, double p, std::uint64_t seed) {
    return generate_erdos_renyi(n, p, WeightLaw::unit(), seed);
}

// Iterated grid refinement over (gamma, beta) for p = 1: an optimizer-free
// oracle for the depth-1 optimum.
double grid_oracle_p1(const WeightedGraph& g, const BlochAngles& s, const MixerSpec& m) {
    const CostDiagonal d = cost_diagonal(g);
    double g_lo = 0.0, g_hi = 2 * kPi, b_lo = 0.0, b_hi = kPi;
    double best = -1e300, bg = 0, bb = 0;
    for (int round = 0; round < 4; ++round) {
        const int res = 60;
        for (int i = 0; i <= res; ++i)
            for (int j = 0; j <= res; ++j) {
                QaoaParams p;
                p.gamma = {g_lo + (g_hi - g_lo) * i / res};
                p.beta = {b_lo + (b_hi - b_lo) * j / res};
                const double f = expectation_cut(run_qaoa(d, s, m, p), d);
                if (f > best) {
                    best = f;
                    bg = p.gamma[0];
                    bb = p.beta[0];
                }
            }
        const double gw = (g_hi - g_lo) / res, bw = (b_hi - b_lo) / res;
        g_lo = bg - gw;
        g_hi = bg + gw;
        b_lo = bb - bw;
        b_hi = bb + bw;
    }
    return best;
}

}  // namespace

TEST_CASE("optimize depth 0", "[optimize]") {
    const WeightedGraph g(2, {{0, 1, 1.0}});
    const auto s = plus_states(2);
    OptConfig cfg;
    const auto r = optimize(g, s, standard_mixer(2), 0, cfg);
    CHECK(r.best_value == Catch::Approx(depth0_expected_cut(g, s)).margin(1e-12));
    CHECK(r.params.gamma.empty());
    CHECK(r.converged);
}

TEST_CASE("single edge p=1 reaches the grid optimum", "[optimize]") {
    const WeightedGraph g(2, {{0, 1, 1.0}});
    const auto s = plus_states(2);
    const auto m = standard_mixer(2);

    const double oracle = grid_oracle_p1(g, s, m);
    CHECK(oracle >= 1.0 - 1e-6);  // the depth-1 optimum of a single edge is 1

    OptConfig cfg;
    cfg.seed = 7;
    const auto r = multistart(g, s, m, 1, 3, cfg);
    CHECK(r.best_value >= 0.99);
    CHECK(r.best_value <= oracle + 1e-9);
}

TEST_CASE("optimize is deterministic and monotone", "[optimize]") {
    const auto g = dense_unit_graph(5, 0.7, 3);
    const auto s = plus_states(5);
    const auto m = standard_mixer(5);
    OptConfig cfg;
    cfg.seed = 42;

    const auto a = optimize(g, s, m, 2, cfg);
    const auto b = optimize(g, s, m, 2, cfg);
    CHECK(a.best_value == b.best_value);
    CHECK(a.params.gamma == b.params.gamma);
    CHECK(a.iterations == b.iterations);

    REQUIRE(!a.trace.empty());
    for (std::size_t i = 1; i < a.trace.size(); ++i) CHECK(a.trace[i] >= a.trace[i - 1]);
    CHECK(a.best_value == a.trace.back());
}

TEST_CASE("converged results have a small finite-difference gradient", "[optimize]") {
    const auto g = dense_unit_graph(5, 0.6, 11);
    const auto s = plus_states(5);
    const auto m = standard_mixer(5);
    OptConfig cfg;
    cfg.seed = 5;
    const auto r = optimize(g, s, m, 2, cfg);
    if (r.converged) {
        const CostDiagonal d = cost_diagonal(g);
        auto eval = [&](const QaoaParams& p) { return expectation_cut(run_qaoa(d, s, m, p), d); };
        double norm2 = 0.0;
        for (int which = 0; which < 2; ++which) {
            auto& vec = which == 0 ? r.params.gamma : r.params.beta;
            for (std::size_t i = 0; i < vec.size(); ++i) {
                QaoaParams up = r.params, dn = r.params;
                (which == 0 ? up.gamma : up.beta)[i] += cfg.fd_step;
                (which == 0 ? dn.gamma : dn.beta)[i] -= cfg.fd_step;
                const double gi = (eval(up) - eval(dn)) / (2 * cfg.fd_step);
                norm2 += gi * gi;
            }
        }
        CHECK(std::sqrt(norm2) <= 10 * cfg.fd_step * g.total_abs_weight());
    }
}

TEST_CASE("multistart dominates single starts", "[optimize]") {
    const auto g = dense_unit_graph(6, 0.6, 17);
    const auto s = plus_states(6);
    const auto m = standard_mixer(6);
    OptConfig cfg;
    cfg.seed = 23;

    const auto single = optimize(g, s, m, 1, cfg);
    const auto multi1 = multistart(g, s, m, 1, 1, cfg);
    CHECK(multi1.best_value == single.best_value);
    CHECK(multi1.params.gamma == single.params.gamma);

    const auto multi4 = multistart(g, s, m, 1, 4, cfg);
    CHECK(multi4.best_value >= single.best_value - 1e-12);
}

TEST_CASE("depth extension cannot lose value", "[optimize]") {
    const auto g = dense_unit_graph(5, 0.7, 29);
    const auto s = plus_states(5);
    const auto m = standard_mixer(5);
    OptConfig cfg;
    cfg.seed = 31;

    const auto p1 = multistart(g, s, m, 1, 2, cfg);
    QaoaParams padded = p1.params;
    padded.gamma.resize(2, 0.0);
    padded.beta.resize(2, 0.0);
    const auto p2 = multistart(g, s, m, 2, 2, cfg, {padded});
    CHECK(p2.best_value >= p1.best_value - 1e-6 * g.total_abs_weight());
}

TEST_CASE("multistart approaches a coarse 4D grid oracle at p=2", "[optimize]") {
    const auto g = dense_unit_graph(6, 0.8, 101);  // triangle-rich
    const auto s = plus_states(6);
    const auto m = standard_mixer(6);
    const auto ex = brute_force_extremes(g);
    const CostDiagonal d = cost_diagonal(g);

    double grid_best = -1e300;
    const int res = 11;
    for (int a = 0; a < res; ++a)
        for (int b = 0; b < res; ++b)
            for (int c = 0; c < res; ++c)
                for (int e = 0; e < res; ++e) {
                    QaoaParams p;
                    p.gamma = {2 * kPi * a / res, 2 * kPi * b / res};
                    p.beta = {kPi * c / res, kPi * e / res};
                    grid_best = std::max(grid_best, expectation_cut(run_qaoa(d, s, m, p), d));
                }

    OptConfig cfg;
    cfg.seed = 19;
    const auto r = multistart(g, s, m, 2, 5, cfg);
    const double grid_ar = approximation_ratio(grid_best, ex);
    const double opt_ar = approximation_ratio(r.best_value, ex);
    INFO("grid AR " << grid_ar << " optimizer AR " << opt_ar);
    CHECK(opt_ar >= grid_ar - 0.02);
}

TEST_CASE("sweep_grid layout", "[optimize]") {
    const auto g = dense_unit_graph(4, 0.8, 41);
    const auto s = plus_states(4);
    const auto m = standard_mixer(4);

    const auto grid = sweep_grid(g, s, m, {0.0, kPi}, {0.0, kPi}, 3);
    CHECK(grid.values.size() == 9);
    CHECK(grid.gamma.size() == 3);
    CHECK(grid.at(0, 0) == Catch::Approx(depth0_expected_cut(g, s)).margin(1e-12));

    const auto ex = brute_force_extremes(g);
    for (double v : grid.values) CHECK(v <= ex.max_cut + 1e-9);

    CHECK_THROWS_AS(sweep_grid(g, s, m, {0.0, 1.0}, {0.0, 1.0}, 1), std::invalid_argument);
}
