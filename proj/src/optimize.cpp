#include "qwm/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qwm/rng.hpp"

namespace qwm {

namespace {

struct Objective {
    const CostDiagonal& d;
    const BlochAngles& s;
    const MixerSpec& m;
    int depth;

    double operator()(const std::vector<double>& x) const {
        QaoaParams p;
        p.gamma.assign(x.begin(), x.begin() + depth);
        p.beta.assign(x.begin() + depth, x.end());
        return expectation_cut(run_qaoa(d, s, m, p), d);
    }
};

double fd_gradient(const Objective& f, const std::vector<double>& x, double h,
                   std::vector<double>& g) {
    g.resize(x.size());
    std::vector<double> xp = x;
    double norm2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        xp[i] = x[i] + h;
        const double fp = f(xp);
        xp[i] = x[i] - h;
        const double fm = f(xp);
        xp[i] = x[i];
        g[i] = (fp - fm) / (2.0 * h);
        norm2 += g[i] * g[i];
    }
    return std::sqrt(norm2);
}

OptResult ascend(const WeightedGraph& g, const BlochAngles& s, const MixerSpec& m,
                 std::vector<double> x, int depth, const OptConfig& cfg) {
    const CostDiagonal diag = cost_diagonal(g);
    const Objective f{diag, s, m, depth};
    const double wbar = g.total_abs_weight();
    const double df_tol = wbar * cfg.termination_tol_factor;
    const double grad_tol = 10.0 * cfg.fd_step * wbar;

    OptResult res;
    if (depth == 0) {
        res.best_value = expectation_cut(prepare_separable(s), diag);
        res.trace.push_back(res.best_value);
        res.converged = true;
        return res;
    }

    double fx = f(x);
    res.trace.push_back(fx);

    std::vector<double> grad, cand;
    double step = 0.5;
    int it = 0;
    for (; it < cfg.max_iters; ++it) {
        const double gn = fd_gradient(f, x, cfg.fd_step, grad);
        if (gn <= grad_tol) {
            res.converged = true;
            break;
        }
        double trial = std::min(step * 4.0, 1e2);
        double fc = fx;
        bool accepted = false;
        for (int h = 0; h < 60; ++h) {
            cand = x;
            for (std::size_t i = 0; i < x.size(); ++i) cand[i] += trial * grad[i];
            fc = f(cand);
            if (fc > fx + 1e-4 * trial * gn * gn) {
                accepted = true;
                break;
            }
            trial *= 0.5;
        }
        if (!accepted) break;  // no measurable ascent left at float precision
        const double delta = fc - fx;
        x = cand;
        fx = fc;
        step = trial;
        res.trace.push_back(fx);
        if (delta < df_tol) {
            // ΔF rule fired; converged only once the gradient is small too,
            // otherwise keep climbing out of the plateau.
            const double gn2 = fd_gradient(f, x, cfg.fd_step, grad);
            if (gn2 <= grad_tol) {
                res.converged = true;
                ++it;
                break;
            }
        }
    }

    res.iterations = it;
    res.best_value = fx;
    res.params.gamma.assign(x.begin(), x.begin() + depth);
    res.params.beta.assign(x.begin() + depth, x.end());
    return res;
}

}  // namespace

OptResult optimize(const WeightedGraph& g, const BlochAngles& s, const MixerSpec& m, int depth,
                   const OptConfig& cfg) {
    if (depth < 0) throw std::invalid_argument("depth must be >= 0");
    Rng rng(derive_seed(cfg.seed, seed_stream::kOptimizerStart));
    std::vector<double> x(static_cast<std::size_t>(2) * depth);
    for (auto& v : x) v = rng.uniform(0.0, cfg.init_scale);
    return ascend(g, s, m, std::move(x), depth, cfg);
}

OptResult optimize_from(const WeightedGraph& g, const BlochAngles& s, const MixerSpec& m,
                        QaoaParams initial, const OptConfig& cfg) {
    const int depth = initial.depth();
    std::vector<double> x;
    x.reserve(static_cast<std::size_t>(2) * depth);
    x.insert(x.end(), initial.gamma.begin(), initial.gamma.end());
    x.insert(x.end(), initial.beta.begin(), initial.beta.end());
    return ascend(g, s, m, std::move(x), depth, cfg);
}

OptResult multistart(const WeightedGraph& g, const BlochAngles& s, const MixerSpec& m, int depth,
                     int starts, const OptConfig& cfg, const std::vector<QaoaParams>& extra_starts) {
    if (starts < 1) throw std::invalid_argument("starts must be >= 1");
    OptResult best;
    bool have = false;
    for (int i = 0; i < starts; ++i) {
        OptConfig c = cfg;
        // Start 0 reuses the caller's seed, so multistart(1) == optimize.
        if (i > 0) c.seed = derive_seed(cfg.seed, seed_stream::kOptimizerStart, static_cast<std::uint64_t>(i));
        OptResult r = optimize(g, s, m, depth, c);
        if (!have || r.best_value > best.best_value) {
            best = std::move(r);
            have = true;
        }
    }
    for (const QaoaParams& init : extra_starts) {
        if (init.depth() != depth) throw std::invalid_argument("extra start has wrong depth");
        OptResult r = optimize_from(g, s, m, init, cfg);
        if (!have || r.best_value > best.best_value) {
            best = std::move(r);
            have = true;
        }
    }
    return best;
}

SweepGrid sweep_grid(const WeightedGraph& g, const BlochAngles& s, const MixerSpec& m,
                     std::pair<double, double> gamma_range, std::pair<double, double> beta_range,
                     int resolution) {
    if (resolution < 2) throw std::invalid_argument("resolution must be >= 2");
    const CostDiagonal diag = cost_diagonal(g);
    SweepGrid grid;
    grid.gamma.resize(resolution);
    grid.beta.resize(resolution);
    for (int i = 0; i < resolution; ++i) {
        const double t = static_cast<double>(i) / (resolution - 1);
        grid.gamma[i] = gamma_range.first + t * (gamma_range.second - gamma_range.first);
        grid.beta[i] = beta_range.first + t * (beta_range.second - beta_range.first);
    }
    grid.values.resize(static_cast<std::size_t>(resolution) * resolution);
    for (int bi = 0; bi < resolution; ++bi) {
        for (int gi = 0; gi < resolution; ++gi) {
            QaoaParams p;
            p.gamma = {grid.gamma[gi]};
            p.beta = {grid.beta[bi]};
            grid.values[static_cast<std::size_t>(bi) * resolution + gi] =
                expectation_cut(run_qaoa(diag, s, m, p), diag);
        }
    }
    return grid;
}

}  // namespace qwm
