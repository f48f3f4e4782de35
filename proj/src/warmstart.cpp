#include "qwm/warmstart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "qwm/config.hpp"
#include "qwm/errors.hpp"
#include "qwm/rng.hpp"

namespace qwm {

namespace {

constexpr double kPi = 3.14159265358979323846;

double clamp_unit(double x) { return x < -1.0 ? -1.0 : (x > 1.0 ? 1.0 : x); }

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void check_dims(const WeightedGraph& g, const RelaxedSolution& x) {
    if (x.size() != g.vertex_count())
        throw std::invalid_argument("solution vector count does not match graph");
}

}  // namespace

void RelaxedSolution::validate() const {
    if (rank < 1) throw std::invalid_argument("rank must be >= 1");
    if (vecs.size() % rank != 0) throw std::invalid_argument("vector storage not a multiple of rank");
    for (int i = 0; i < size(); ++i) {
        double n2 = dot(row(i), row(i));
        if (std::abs(std::sqrt(n2) - 1.0) > kTol.unit_norm)
            throw std::invalid_argument("vector " + std::to_string(i) + " is not unit norm");
    }
}

double bm_objective(const WeightedGraph& g, const RelaxedSolution& x) {
    check_dims(g, x);
    double total = 0.0;
    for (const Edge& e : g.edges()) total += 0.5 * e.w * (1.0 - dot(x.row(e.u), x.row(e.v)));
    return total;
}

double hyperplane_expected_cut(const WeightedGraph& g, const RelaxedSolution& x) {
    check_dims(g, x);
    double total = 0.0;
    for (const Edge& e : g.edges())
        total += e.w * std::acos(clamp_unit(dot(x.row(e.u), x.row(e.v)))) / kPi;
    return total;
}

Cut hyperplane_round(const RelaxedSolution& x, std::uint64_t seed) {
    const int n = x.size();
    const int k = x.rank;
    Rng rng(derive_seed(seed, seed_stream::kRounding));
    std::vector<double> r(k);
    Cut c;
    c.bits.resize(n);
    for (;;) {
        for (int d = 0; d < k; ++d) r[d] = rng.normal();
        bool tie = false;
        for (int i = 0; i < n; ++i) {
            const double s = dot(x.row(i), std::span<const double>(r));
            if (s == 0.0) {  // measure-zero tie: redraw the hyperplane
                tie = true;
                break;
            }
            c.bits[i] = s > 0.0 ? 0 : 1;
        }
        if (!tie) return c;
    }
}

namespace {

struct Adjacency {
    std::vector<std::vector<std::pair<int, double>>> nbr;
    explicit Adjacency(const WeightedGraph& g) : nbr(g.vertex_count()) {
        for (const Edge& e : g.edges()) {
            nbr[e.u].push_back({e.v, e.w});
            nbr[e.v].push_back({e.u, e.w});
        }
    }
};

RelaxedSolution random_sphere_points(int n, int rank, Rng& rng) {
    RelaxedSolution x;
    x.rank = rank;
    x.vecs.resize(static_cast<std::size_t>(n) * rank);
    for (int i = 0; i < n; ++i) {
        auto r = x.row(i);
        double norm = 0.0;
        do {
            norm = 0.0;
            for (int d = 0; d < rank; ++d) {
                r[d] = rng.normal();
                norm += r[d] * r[d];
            }
            norm = std::sqrt(norm);
        } while (norm < 1e-12);
        for (int d = 0; d < rank; ++d) r[d] /= norm;
    }
    return x;
}

// Riemannian gradient of the relaxation objective: per vertex,
// grad_i = -(1/2) Σ_j w_ij x_j projected onto the tangent space at x_i.
double riemannian_gradient(const Adjacency& adj, const RelaxedSolution& x,
                           std::vector<double>& grad) {
    const int n = x.size();
    const int k = x.rank;
    grad.assign(static_cast<std::size_t>(n) * k, 0.0);
    double norm2 = 0.0;
    for (int i = 0; i < n; ++i) {
        auto xi = x.row(i);
        double* gi = grad.data() + static_cast<std::size_t>(i) * k;
        for (const auto& [j, w] : adj.nbr[i]) {
            auto xj = x.row(j);
            for (int d = 0; d < k; ++d) gi[d] -= 0.5 * w * xj[d];
        }
        double proj = 0.0;
        for (int d = 0; d < k; ++d) proj += gi[d] * xi[d];
        for (int d = 0; d < k; ++d) {
            gi[d] -= proj * xi[d];
            norm2 += gi[d] * gi[d];
        }
    }
    return std::sqrt(norm2);
}

RelaxedSolution retract(const RelaxedSolution& x, const std::vector<double>& dir, double step) {
    RelaxedSolution y = x;
    const int k = x.rank;
    for (int i = 0; i < x.size(); ++i) {
        auto yi = y.row(i);
        const double* di = dir.data() + static_cast<std::size_t>(i) * k;
        double norm = 0.0;
        for (int d = 0; d < k; ++d) {
            yi[d] += step * di[d];
            norm += yi[d] * yi[d];
        }
        norm = std::sqrt(norm);
        for (int d = 0; d < k; ++d) yi[d] /= norm;
    }
    return y;
}

}  // namespace

BmResult bm_local_solve(const WeightedGraph& g, int rank, std::uint64_t seed, double tol,
                        int max_iters) {
    if (rank < 2) throw std::invalid_argument("rank must be >= 2");
    const int n = g.vertex_count();
    Rng rng(derive_seed(seed, seed_stream::kBmStart));
    Adjacency adj(g);

    BmResult res;
    res.solution = random_sphere_points(n, rank, rng);
    res.objective = bm_objective(g, res.solution);

    std::vector<double> grad;
    double step = 1.0;
    int it = 0;
    for (; it < max_iters; ++it) {
        const double gn = riemannian_gradient(adj, res.solution, grad);
        res.grad_norm = gn;
        if (gn < tol) {
            res.stationary = true;
            break;
        }
        // Backtracking from a mildly optimistic step (last accepted step x4).
        double trial = std::min(step * 4.0, 1e3);
        bool accepted = false;
        for (int h = 0; h < 60; ++h) {
            RelaxedSolution cand = retract(res.solution, grad, trial);
            const double fc = bm_objective(g, cand);
            if (fc > res.objective + 1e-4 * trial * gn * gn) {
                res.solution = std::move(cand);
                res.objective = fc;
                step = trial;
                accepted = true;
                break;
            }
            trial *= 0.5;
        }
        if (!accepted) break;  // improvement below float resolution
    }
    res.iterations = it;
    if (!res.stationary) res.grad_norm = riemannian_gradient(adj, res.solution, grad);
    res.stationary = res.grad_norm < tol;
    return res;
}

BmResult sdp_solve(const WeightedGraph& g, int restarts, std::uint64_t seed) {
    const int n = g.vertex_count();
    if (n == 1) {
        BmResult r;
        r.solution = RelaxedSolution{1, {1.0}};
        r.stationary = true;
        return r;
    }
    if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
    const int kstar = std::max(2, std::min(n, static_cast<int>(std::ceil(std::sqrt(2.0 * n))) + 1));
    BmResult best;
    bool have = false;
    for (int r = 0; r < restarts; ++r) {
        BmResult cur = bm_local_solve(g, kstar, derive_seed(seed, seed_stream::kBmStart, r));
        if (!have || cur.objective > best.objective) {
            best = std::move(cur);
            have = true;
        }
    }
    // Embed into R^n so the result stands in for the rank-n SDP solution.
    RelaxedSolution embedded;
    embedded.rank = n;
    embedded.vecs.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        auto src = best.solution.row(i);
        auto dst = embedded.row(i);
        std::copy(src.begin(), src.end(), dst.begin());
    }
    best.solution = std::move(embedded);
    return best;
}

RelaxedSolution project_to_subspace(const RelaxedSolution& x, int rank, std::uint64_t seed) {
    if (rank < 1) throw std::invalid_argument("target rank must be >= 1");
    if (rank >= x.rank) throw std::invalid_argument("target rank must be below the solution rank");
    const int n = x.size();
    const int full = x.rank;
    Rng rng(derive_seed(seed, seed_stream::kProjection));

    std::vector<double> basis(static_cast<std::size_t>(rank) * full);
    RelaxedSolution out;
    out.rank = rank;
    out.vecs.resize(static_cast<std::size_t>(n) * rank);

    for (;;) {
        // Gaussian rows orthonormalized in place: a uniformly random subspace.
        bool degenerate = false;
        for (int r = 0; r < rank && !degenerate; ++r) {
            double* br = basis.data() + static_cast<std::size_t>(r) * full;
            for (int d = 0; d < full; ++d) br[d] = rng.normal();
            for (int p = 0; p < r; ++p) {
                const double* bp = basis.data() + static_cast<std::size_t>(p) * full;
                double c = 0.0;
                for (int d = 0; d < full; ++d) c += br[d] * bp[d];
                for (int d = 0; d < full; ++d) br[d] -= c * bp[d];
            }
            double norm = 0.0;
            for (int d = 0; d < full; ++d) norm += br[d] * br[d];
            norm = std::sqrt(norm);
            if (norm < 1e-12) {
                degenerate = true;
                break;
            }
            for (int d = 0; d < full; ++d) br[d] /= norm;
        }
        if (degenerate) continue;

        bool zero_projection = false;
        for (int i = 0; i < n && !zero_projection; ++i) {
            auto xi = x.row(i);
            auto yi = out.row(i);
            double norm = 0.0;
            for (int r = 0; r < rank; ++r) {
                const double* br = basis.data() + static_cast<std::size_t>(r) * full;
                double c = 0.0;
                for (int d = 0; d < full; ++d) c += br[d] * xi[d];
                yi[r] = c;
                norm += c * c;
            }
            norm = std::sqrt(norm);
            if (norm < 1e-150) {
                zero_projection = true;  // measure-zero event: redraw the subspace
                break;
            }
            for (int r = 0; r < rank; ++r) yi[r] /= norm;
        }
        if (!zero_projection) return out;
    }
}

RelaxedSolution rotate_uniform(const RelaxedSolution& x, std::uint64_t seed) {
    Rng rng(derive_seed(seed, seed_stream::kRotation));
    RelaxedSolution y = x;
    const int n = x.size();
    if (x.rank == 2) {
        const double a = rng.uniform(0.0, 2.0 * kPi);
        const double c = std::cos(a), s = std::sin(a);
        for (int i = 0; i < n; ++i) {
            auto r = y.row(i);
            const double p = r[0], q = r[1];
            r[0] = c * p - s * q;
            r[1] = s * p + c * q;
        }
        return y;
    }
    if (x.rank == 3) {
        // Haar rotation from a uniform unit quaternion.
        double qw, qx, qy, qz, norm;
        do {
            qw = rng.normal();
            qx = rng.normal();
            qy = rng.normal();
            qz = rng.normal();
            norm = std::sqrt(qw * qw + qx * qx + qy * qy + qz * qz);
        } while (norm < 1e-12);
        qw /= norm;
        qx /= norm;
        qy /= norm;
        qz /= norm;
        const double R[3][3] = {
            {1 - 2 * (qy * qy + qz * qz), 2 * (qx * qy - qw * qz), 2 * (qx * qz + qw * qy)},
            {2 * (qx * qy + qw * qz), 1 - 2 * (qx * qx + qz * qz), 2 * (qy * qz - qw * qx)},
            {2 * (qx * qz - qw * qy), 2 * (qy * qz + qw * qx), 1 - 2 * (qx * qx + qy * qy)}};
        for (int i = 0; i < n; ++i) {
            auto r = y.row(i);
            const double v[3] = {r[0], r[1], r[2]};
            for (int a = 0; a < 3; ++a) r[a] = R[a][0] * v[0] + R[a][1] * v[1] + R[a][2] * v[2];
        }
        return y;
    }
    throw std::invalid_argument("uniform rotation supports rank 2 or 3");
}

RelaxedSolution rotate_vertex_at_top(const RelaxedSolution& x, int vertex) {
    if (vertex < 0 || vertex >= x.size()) throw std::invalid_argument("vertex out of range");
    RelaxedSolution y = x;
    const int n = x.size();
    if (x.rank == 2) {
        const double u0 = x.row(vertex)[0], u1 = x.row(vertex)[1];
        // Planar rotation sending (u0,u1) to (0,1): R = [[u1,-u0],[u0,u1]].
        for (int i = 0; i < n; ++i) {
            auto r = y.row(i);
            const double p = r[0], q = r[1];
            r[0] = u1 * p - u0 * q;
            r[1] = u0 * p + u1 * q;
        }
        y.row(vertex)[0] = 0.0;
        y.row(vertex)[1] = 1.0;
        return y;
    }
    if (x.rank == 3) {
        const auto u = x.row(vertex);
        const double c = u[2];
        const double ax = u[1], ay = -u[0];  // u x (0,0,1)
        const double s2 = ax * ax + ay * ay;
        double R[3][3];
        if (s2 < 1e-24) {
            if (c > 0.0) {
                return y;  // already at the pole
            }
            // Antipode: rotate by pi about the x-axis.
            const double F[3][3] = {{1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
            std::copy(&F[0][0], &F[0][0] + 9, &R[0][0]);
        } else {
            // Rodrigues with axis a = u x z: R = I + [a]x + [a]x^2 / (1+c).
            const double f = 1.0 / (1.0 + c);
            R[0][0] = 1 - f * ay * ay;
            R[0][1] = f * ax * ay;
            R[0][2] = ay;
            R[1][0] = f * ax * ay;
            R[1][1] = 1 - f * ax * ax;
            R[1][2] = -ax;
            R[2][0] = -ay;
            R[2][1] = ax;
            R[2][2] = 1 - f * (ax * ax + ay * ay);
        }
        for (int i = 0; i < n; ++i) {
            auto r = y.row(i);
            const double v[3] = {r[0], r[1], r[2]};
            for (int a = 0; a < 3; ++a) r[a] = R[a][0] * v[0] + R[a][1] * v[1] + R[a][2] * v[2];
        }
        y.row(vertex)[0] = 0.0;
        y.row(vertex)[1] = 0.0;
        y.row(vertex)[2] = 1.0;
        return y;
    }
    throw std::invalid_argument("vertex-at-top rotation supports rank 2 or 3");
}

BlochAngles to_bloch(const RelaxedSolution& x) {
    const int n = x.size();
    BlochAngles s;
    s.theta.resize(n);
    s.phi.resize(n);
    if (x.rank == 3) {
        for (int i = 0; i < n; ++i) {
            auto r = x.row(i);
            s.theta[i] = std::acos(clamp_unit(r[2]));
            double phi = std::atan2(r[1], r[0]);
            if (phi < 0.0) phi += 2.0 * kPi;
            if (phi >= 2.0 * kPi) phi = 0.0;
            s.phi[i] = phi;
        }
        return s;
    }
    if (x.rank == 2) {
        // (a,b) lives on the xz great circle as (a,0,b).
        for (int i = 0; i < n; ++i) {
            auto r = x.row(i);
            s.theta[i] = std::acos(clamp_unit(r[1]));
            s.phi[i] = r[0] >= 0.0 ? 0.0 : kPi;
        }
        return s;
    }
    throw std::invalid_argument("Bloch mapping supports rank 2 or 3");
}

double averaged_flip_probability(int rank, double theta) {
    if (rank != 2 && rank != 3) throw std::invalid_argument("rank must be 2 or 3");
    if (!(theta >= 0.0 && theta <= kPi)) throw std::invalid_argument("theta must lie in [0, pi]");
    return 0.5 * (1.0 - std::cos(theta) / rank);
}

double depth0_expected_cut(const WeightedGraph& g, const BlochAngles& s) {
    if (s.size() != g.vertex_count())
        throw std::invalid_argument("angle count does not match vertex count");
    double total = 0.0;
    for (const Edge& e : g.edges())
        total += 0.5 * e.w * (1.0 - std::cos(s.theta[e.u]) * std::cos(s.theta[e.v]));
    return total;
}

BlochAngles single_cut_epsilon_state(const Cut& c, double epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= kPi / 2.0))
        throw std::invalid_argument("epsilon must lie in [0, pi/2]");
    BlochAngles s;
    const int n = c.size();
    s.theta.resize(n);
    s.phi.assign(n, 0.0);
    for (int i = 0; i < n; ++i) s.theta[i] = c.bits[i] ? kPi - epsilon : epsilon;
    return s;
}

WarmstartResult select_warmstart(const WeightedGraph& g, const WarmstartOptions& opt,
                                 const CutExtremes* extremes) {
    if (opt.attempts < 1) throw std::invalid_argument("attempts must be >= 1");
    if (opt.rank != 2 && opt.rank != 3) throw std::invalid_argument("rank must be 2 or 3");

    WarmstartResult res;
    bool stationary = true;

    if (opt.method == WarmstartMethod::BurerMonteiro) {
        BmResult best;
        bool have = false;
        for (int a = 0; a < opt.attempts; ++a) {
            BmResult cur =
                bm_local_solve(g, opt.rank, derive_seed(opt.seed, seed_stream::kBmStart, a));
            if (!have || cur.objective > best.objective) {
                best = std::move(cur);
                have = true;
            }
        }
        res.solution = std::move(best.solution);
        stationary = best.stationary;
    } else {
        BmResult sdp = sdp_solve(g, opt.sdp_restarts, opt.seed);
        stationary = sdp.stationary;
        if (sdp.solution.rank <= opt.rank) {
            // Tiny instance: the relaxation already fits in the target rank.
            RelaxedSolution padded;
            padded.rank = opt.rank;
            padded.vecs.assign(static_cast<std::size_t>(sdp.solution.size()) * opt.rank, 0.0);
            for (int i = 0; i < sdp.solution.size(); ++i) {
                auto src = sdp.solution.row(i);
                auto dst = padded.row(i);
                std::copy(src.begin(), src.end(), dst.begin());
            }
            res.solution = std::move(padded);
        } else {
            RelaxedSolution best;
            double best_obj = -std::numeric_limits<double>::infinity();
            for (int a = 0; a < opt.attempts; ++a) {
                RelaxedSolution proj = project_to_subspace(sdp.solution, opt.rank,
                                                           derive_seed(opt.seed, seed_stream::kProjection, a));
                const double obj = bm_objective(g, proj);
                if (obj > best_obj) {
                    best_obj = obj;
                    best = std::move(proj);
                }
            }
            res.solution = std::move(best);
        }
    }

    res.report.method = opt.method == WarmstartMethod::BurerMonteiro ? "bm" : "gw_projected";
    res.report.rank = opt.rank;
    res.report.attempts = opt.attempts;
    res.report.seed = opt.seed;
    res.report.bm_objective = bm_objective(g, res.solution);
    res.report.hp_expected = hyperplane_expected_cut(g, res.solution);
    res.report.stationary = stationary;
    if (extremes != nullptr) {
        res.report.kappa_close = res.report.bm_objective / extremes->max_cut;
        res.report.kappa_approx = res.report.hp_expected / extremes->max_cut;
    } else {
        res.report.kappa_close = std::numeric_limits<double>::quiet_NaN();
        res.report.kappa_approx = std::numeric_limits<double>::quiet_NaN();
    }

    const int rotations = std::max(1, opt.rotations_per_solution);
    // Vertex-at-top rotations use distinct vertices (a seeded shuffle,
    // cycling if more rotations than vertices are requested).
    std::vector<int> vertex_order(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) vertex_order[v] = v;
    Rng shuffle_rng(derive_seed(opt.seed, seed_stream::kRotation));
    for (int v = g.vertex_count() - 1; v > 0; --v)
        std::swap(vertex_order[v], vertex_order[shuffle_rng.below(static_cast<std::uint32_t>(v + 1))]);

    for (int r = 0; r < rotations; ++r) {
        if (opt.rotation == RotationScheme::Uniform) {
            const std::uint64_t rseed = derive_seed(opt.seed, seed_stream::kRotation, r + 1);
            res.states.push_back(to_bloch(rotate_uniform(res.solution, rseed)));
            res.top_vertices.push_back(-1);
        } else {
            const int v = vertex_order[r % g.vertex_count()];
            res.states.push_back(to_bloch(rotate_vertex_at_top(res.solution, v)));
            res.top_vertices.push_back(v);
        }
    }
    return res;
}

std::string serialize_bloch(const BlochAngles& s) {
    std::string out = std::to_string(s.size()) + "\n";
    char buf[128];
    for (int i = 0; i < s.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g %.17g\n", s.theta[i], s.phi[i]);
        out += buf;
    }
    return out;
}

BlochAngles parse_bloch(std::string_view text) {
    std::istringstream in{std::string(text)};
    int n = 0;
    if (!(in >> n) || n < 1) throw ParseError(1, "expected qubit count");
    BlochAngles s;
    s.theta.resize(n);
    s.phi.resize(n);
    for (int i = 0; i < n; ++i) {
        if (!(in >> s.theta[i] >> s.phi[i]))
            throw ParseError(i + 2, "expected \"theta phi\"");
        if (!(s.theta[i] >= 0.0 && s.theta[i] <= kPi))
            throw ParseError(i + 2, "theta out of [0, pi]");
    }
    return s;
}

BlochAngles load_bloch(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_bloch(ss.str());
}

void save_bloch(const BlochAngles& s, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << serialize_bloch(s);
}

}  // namespace qwm
