#include "qwm/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qwm/config.hpp"
#include "qwm/density.hpp"
#include "qwm/errors.hpp"
#include "qwm/graph.hpp"
#include "qwm/optimize.hpp"
#include "qwm/rng.hpp"
#include "qwm/spectral.hpp"
#include "qwm/statevector.hpp"
#include "qwm/warmstart.hpp"

namespace qwm::cli {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    return parts;
}

WeightLaw parse_weight_law(const std::string& s) {
    if (s == "unit") return WeightLaw::unit();
    if (s.rfind("uniform:", 0) == 0) {
        const auto parts = split_csv(s.substr(8));
        if (parts.size() != 2) throw CLI::ValidationError("--weights", "expected uniform:a,b");
        try {
            return WeightLaw::uniform(std::stod(parts[0]), std::stod(parts[1]));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--weights", "expected uniform:a,b with numeric bounds");
        }
    }
    throw CLI::ValidationError("--weights", "expected unit or uniform:a,b");
}

std::string instance_id(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    return f;
}

std::optional<CutExtremes> try_extremes(const WeightedGraph& g) {
    if (g.vertex_count() > kDefaultCaps.brute_force_vertices) return std::nullopt;
    return brute_force_extremes(g);
}

nlohmann::json report_to_json(const WarmstartReport& r) {
    nlohmann::json j;
    j["method"] = r.method;
    j["rank"] = r.rank;
    j["attempts"] = r.attempts;
    j["seed"] = r.seed;
    j["bm_objective"] = r.bm_objective;
    j["hp_expected"] = r.hp_expected;
    j["kappa_close"] = r.kappa_close;    // NaN serializes as null
    j["kappa_approx"] = r.kappa_approx;
    return j;
}

void write_text(const std::string& path, const std::string& text) {
    auto f = open_out(path);
    f << text;
}

// ---------------------------------------------------------------- generate

int cmd_generate(CLI::App& app, std::ostream& out) {
    auto* er = app.get_subcommand("er");
    auto* karloff = app.get_subcommand("karloff");
    if (er->parsed()) {
        const int n = er->get_option("--n")->as<int>();
        const double p = er->get_option("--p")->as<double>();
        const auto law = parse_weight_law(er->get_option("--weights")->as<std::string>());
        const auto seed = er->get_option("--seed")->as<std::uint64_t>();
        const auto path = er->get_option("--out")->as<std::string>();
        const WeightedGraph g = generate_erdos_renyi(n, p, law, seed);
        save_edge_list(g, path);
        out << "n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
        return kOk;
    }
    if (karloff->parsed()) {
        const int m = karloff->get_option("--m")->as<int>();
        const int b = karloff->get_option("--b")->as<int>();
        if (m < 2 || m % 2 != 0) throw CLI::ValidationError("--m", "m must be even");
        int t = m / 2;
        if (karloff->count("--t") > 0) t = karloff->get_option("--t")->as<int>();
        const auto path = karloff->get_option("--out")->as<std::string>();
        const WeightedGraph g = generate_karloff(m, t, b);
        save_edge_list(g, path);
        out << "n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
        if (t == m / 2 && b >= 0 && 4 * b < m) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.4f", karloff_gw_ratio(m, b));
            out << "gw_ratio=" << buf << "\n";
        }
        return kOk;
    }
    throw CLI::ValidationError("generate", "expected a generator: er or karloff");
}

// ---------------------------------------------------------------- warmstart

int cmd_warmstart(CLI::App& cmd, std::ostream& out, std::ostream& err) {
    const auto instance = cmd.get_option("--instance")->as<std::string>();
    WarmstartOptions opt;
    opt.method = cmd.get_option("--method")->as<std::string>() == "gw_projected"
                     ? WarmstartMethod::GwProjected
                     : WarmstartMethod::BurerMonteiro;
    opt.rank = cmd.get_option("--rank")->as<int>();
    opt.attempts = cmd.get_option("--attempts")->as<int>();
    opt.rotation = cmd.get_option("--rotation")->as<std::string>() == "uniform"
                       ? RotationScheme::Uniform
                       : RotationScheme::VertexAtTop;
    opt.rotations_per_solution = cmd.get_option("--rotations")->as<int>();
    opt.seed = cmd.get_option("--seed")->as<std::uint64_t>();
    const bool one_indexed = cmd.count("--one-indexed") > 0;

    const WeightedGraph g = load_edge_list(instance, one_indexed);
    const auto extremes = try_extremes(g);
    const WarmstartResult res =
        select_warmstart(g, opt, extremes.has_value() ? &*extremes : nullptr);

    const std::string json_text = report_to_json(res.report).dump(2) + "\n";
    if (cmd.count("--out") > 0)
        write_text(cmd.get_option("--out")->as<std::string>(), json_text);
    else
        out << json_text;

    if (cmd.count("--angles-out") > 0) {
        const std::filesystem::path base = cmd.get_option("--angles-out")->as<std::string>();
        for (std::size_t r = 0; r < res.states.size(); ++r) {
            std::filesystem::path p = base;
            if (r > 0) {
                p = base.parent_path() /
                    (base.stem().string() + "_" + std::to_string(r) + base.extension().string());
            }
            save_bloch(res.states[r], p.string());
        }
    }

    if (cmd.count("--strict") > 0 && !res.report.stationary) {
        err << "warmstart: relaxation solve did not reach stationarity\n";
        return kNumericalError;
    }
    return kOk;
}

// ---------------------------------------------------------------- run

struct RowKey {
    std::string variant;
    int depth;
    bool operator<(const RowKey& o) const {
        return variant != o.variant ? variant < o.variant : depth < o.depth;
    }
};

struct RowData {
    double fp = std::numeric_limits<double>::quiet_NaN();
    double ar = std::numeric_limits<double>::quiet_NaN();
    std::string log_error = "nan";
    std::int64_t wall_ms = 0;
    std::string rank = "-";
    std::string rotation = "-";
    std::string error;
};

std::string log_error_text(double ar) {
    const double ae = 1.0 - ar;
    if (std::isnan(ae)) return "nan";
    if (ae <= 0.0) return "-inf";
    return fmt(std::log10(ae));
}

int cmd_run(CLI::App& cmd, std::ostream& out, std::ostream& err) {
    const auto instance = cmd.get_option("--instance")->as<std::string>();
    const auto variants = split_csv(cmd.get_option("--variant")->as<std::string>());
    for (const auto& v : variants)
        if (v != "standard" && v != "warm" && v != "warmest" && v != "single_cut_epsilon")
            throw CLI::ValidationError("--variant", "unknown variant " + v);
    std::vector<int> depths;
    for (const auto& d : split_csv(cmd.get_option("--depths")->as<std::string>())) {
        try {
            depths.push_back(std::stoi(d));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--depths", "expected a comma-separated list of integers");
        }
        if (depths.back() < 0) throw CLI::ValidationError("--depths", "depths must be >= 0");
    }
    if (depths.empty()) throw CLI::ValidationError("--depths", "at least one depth required");
    std::sort(depths.begin(), depths.end());
    depths.erase(std::unique(depths.begin(), depths.end()), depths.end());

    const int rank = cmd.get_option("--rank")->as<int>();
    const auto rotation_name = cmd.get_option("--rotation")->as<std::string>();
    const auto method_name = cmd.get_option("--method")->as<std::string>();
    const int attempts = cmd.get_option("--attempts")->as<int>();
    const int rotations = cmd.get_option("--rotations")->as<int>();
    const auto seed = cmd.get_option("--seed")->as<std::uint64_t>();
    const int starts = cmd.get_option("--starts")->as<int>();
    const double noise_q = cmd.get_option("--noise-q")->as<double>();
    const double epsilon = cmd.get_option("--epsilon")->as<double>();
    const auto out_path = cmd.get_option("--out")->as<std::string>();
    const bool one_indexed = cmd.count("--one-indexed") > 0;
    const std::string dump_path =
        cmd.count("--dump-state") > 0 ? cmd.get_option("--dump-state")->as<std::string>() : "";

    const Caps limits = caps();
    const WeightedGraph g = load_edge_list(instance, one_indexed);
    if (g.vertex_count() > limits.statevector_qubits)
        throw CapacityError("instance exceeds the statevector cap of " +
                            std::to_string(limits.statevector_qubits) + " qubits");
    if (noise_q > 0.0 && g.vertex_count() > limits.density_qubits)
        throw CapacityError("noisy runs are capped at " + std::to_string(limits.density_qubits) +
                            " qubits");
    const std::string id = instance_id(instance);
    const auto extremes = try_extremes(g);
    const CostDiagonal diag = cost_diagonal(g, limits.statevector_qubits);

    const bool needs_warm =
        std::count(variants.begin(), variants.end(), "warm") +
            std::count(variants.begin(), variants.end(), "warmest") >
        0;
    const bool needs_single = std::count(variants.begin(), variants.end(), "single_cut_epsilon") > 0;

    // Warm-started states are computed once and shared by the warm and
    // warmest variants, mirroring the shared-preprocessing protocol.
    std::vector<BlochAngles> warm_states;
    RelaxedSolution relaxation;
    if (needs_warm || needs_single) {
        WarmstartOptions wopt;
        wopt.method = method_name == "gw_projected" ? WarmstartMethod::GwProjected
                                                    : WarmstartMethod::BurerMonteiro;
        wopt.rank = rank;
        wopt.attempts = attempts;
        wopt.rotation =
            rotation_name == "uniform" ? RotationScheme::Uniform : RotationScheme::VertexAtTop;
        wopt.rotations_per_solution = rotations;
        wopt.seed = seed;
        WarmstartResult wres = select_warmstart(g, wopt, extremes.has_value() ? &*extremes : nullptr);
        warm_states = std::move(wres.states);
        relaxation = std::move(wres.solution);
    }

    BlochAngles single_cut_state;
    if (needs_single) {
        if (epsilon == 0.0)
            err << "run: epsilon = 0 places qubits at the poles; convergence is not guaranteed\n";
        Cut best_cut;
        double best_val = -std::numeric_limits<double>::infinity();
        for (int a = 0; a < std::max(1, attempts); ++a) {
            Cut c = hyperplane_round(relaxation, derive_seed(seed, seed_stream::kRounding, a));
            const double v = cut_value(g, c);
            if (v > best_val) {
                best_val = v;
                best_cut = std::move(c);
            }
        }
        single_cut_state = single_cut_epsilon_state(best_cut, epsilon);
    }

    std::vector<RowKey> keys;
    for (const auto& v : variants)
        for (int d : depths) keys.push_back({v, d});
    std::sort(keys.begin(), keys.end());
    if (!dump_path.empty() && keys.size() != 1)
        throw CLI::ValidationError("--dump-state", "requires exactly one variant and one depth");

    std::map<RowKey, RowData> rows;
    std::size_t row_index = 0;
    std::string current_variant;
    std::vector<std::pair<int, QaoaParams>> depth_chain;  // best params per finished depth

    for (const RowKey& key : keys) {
        if (key.variant != current_variant) {
            current_variant = key.variant;
            depth_chain.clear();
        }
        RowData row;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            BlochAngles init;
            MixerSpec mixer;
            if (key.variant == "standard") {
                init.theta.assign(g.vertex_count(), kPi / 2.0);
                init.phi.assign(g.vertex_count(), 0.0);
                mixer = standard_mixer(g.vertex_count());
            } else if (key.variant == "warm") {
                init = warm_states.at(0);
                mixer = standard_mixer(g.vertex_count());
                row.rank = std::to_string(rank);
                row.rotation = rotation_name;
            } else if (key.variant == "warmest") {
                init = warm_states.at(0);
                mixer = mixer_from_state(init);
                row.rank = std::to_string(rank);
                row.rotation = rotation_name;
            } else {
                init = single_cut_state;
                mixer = mixer_from_state(init);
                row.rank = std::to_string(rank);
            }

            OptConfig cfg;
            cfg.seed = derive_seed(seed, seed_stream::kRun, row_index);
            OptResult best;
            double best_fp = -std::numeric_limits<double>::infinity();
            const std::size_t n_states =
                (key.variant == "warm" || key.variant == "warmest") ? warm_states.size() : 1;
            for (std::size_t si = 0; si < n_states; ++si) {
                const BlochAngles& state = n_states > 1 ? warm_states[si] : init;
                const MixerSpec mix = (key.variant == "warm" || key.variant == "standard")
                                          ? standard_mixer(g.vertex_count())
                                          : mixer_from_state(state);
                // Depth-extension seeding: the deepest finished optimum,
                // zero-padded, joins the fresh starts.
                std::vector<QaoaParams> extra;
                const std::pair<int, QaoaParams>* prev = nullptr;
                for (const auto& entry : depth_chain)
                    if (entry.first < key.depth && (!prev || entry.first > prev->first))
                        prev = &entry;
                if (prev != nullptr) {
                    QaoaParams padded = prev->second;
                    padded.gamma.resize(key.depth, 0.0);
                    padded.beta.resize(key.depth, 0.0);
                    extra.push_back(std::move(padded));
                }
                OptConfig c = cfg;
                c.seed = derive_seed(cfg.seed, seed_stream::kOptimizerStart, si);
                OptResult r = key.depth == 0 ? optimize(g, state, mix, 0, c)
                                             : multistart(g, state, mix, key.depth, starts, c, extra);
                if (r.best_value > best_fp) {
                    best_fp = r.best_value;
                    best = std::move(r);
                    if (n_states > 1) init = state;
                }
            }
            depth_chain.push_back({key.depth, best.params});

            row.fp = best.best_value;
            if (noise_q > 0.0 && key.depth > 0) {
                // Ideal-optimal parameters re-evaluated under phase damping.
                const MixerSpec mix = (key.variant == "warm" || key.variant == "standard")
                                          ? standard_mixer(g.vertex_count())
                                          : mixer_from_state(init);
                row.fp = run_qaoa_noisy(diag, init, mix, best.params, noise_q,
                                        limits.density_qubits)
                             .expected_cut;
            }
            if (extremes.has_value()) {
                row.ar = approximation_ratio(row.fp, *extremes);
                row.log_error = log_error_text(row.ar);
            }
            if (!dump_path.empty()) {
                const MixerSpec mix = (key.variant == "warm" || key.variant == "standard")
                                          ? standard_mixer(g.vertex_count())
                                          : mixer_from_state(init);
                dump_statevector(run_qaoa(diag, init, mix, best.params), dump_path);
            }
        } catch (const std::exception& e) {
            row.error = e.what();
            err << "run: row " << key.variant << " p=" << key.depth << " failed: " << e.what()
                << "\n";
        }
        const auto t1 = std::chrono::steady_clock::now();
        row.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        rows[key] = std::move(row);
        ++row_index;
    }

    auto f = open_out(out_path);
    f << "instance,variant,rank,rotation,depth,fp,ar,log_error,wall_ms\n";
    for (const RowKey& key : keys) {
        const RowData& row = rows[key];
        f << id << ',' << key.variant << ',' << row.rank << ',' << row.rotation << ',' << key.depth
          << ',' << fmt(row.fp) << ',' << fmt(row.ar) << ',' << row.log_error << ','
          << row.wall_ms << "\n";
    }
    out << "wrote " << keys.size() << " rows to " << out_path << "\n";
    return kOk;
}

// ---------------------------------------------------------------- spectrum

int cmd_spectrum(CLI::App& cmd, std::ostream& out) {
    const auto instance = cmd.get_option("--instance")->as<std::string>();
    const int grid = cmd.get_option("--grid")->as<int>();
    if (grid < 2) throw CLI::ValidationError("--grid", "need at least two grid points");
    const bool one_indexed = cmd.count("--one-indexed") > 0;

    const Caps limits = caps();
    const WeightedGraph g = load_edge_list(instance, one_indexed);
    if (g.vertex_count() > limits.dense_qubits)
        throw CapacityError("spectrum analysis capped at " + std::to_string(limits.dense_qubits) +
                            " qubits");

    BlochAngles init;
    std::string init_name = "standard";
    if (cmd.count("--angles") > 0) {
        init = load_bloch(cmd.get_option("--angles")->as<std::string>());
        if (init.size() != g.vertex_count())
            throw std::invalid_argument("angle count does not match instance");
        init_name = "custom";
    } else {
        init.theta.assign(g.vertex_count(), kPi / 2.0);
        init.phi.assign(g.vertex_count(), 0.0);
    }

    const MixerSpec mixer = mixer_from_state(init);
    const CostDiagonal diag = cost_diagonal(g, limits.dense_qubits);

    nlohmann::json j;
    j["instance"] = instance_id(instance);
    j["n"] = g.vertex_count();
    j["init"] = init_name;
    auto t_arr = nlohmann::json::array();
    auto gap_arr = nlohmann::json::array();
    auto stoq_arr = nlohmann::json::array();
    auto irr_arr = nlohmann::json::array();
    for (int i = 0; i < grid; ++i) {
        const double t = static_cast<double>(i) / (grid - 1);
        const Eigen::MatrixXcd h = interpolated_hamiltonian(mixer, diag, t, limits.dense_qubits);
        t_arr.push_back(t);
        gap_arr.push_back(eigen_gap(h));
        stoq_arr.push_back(is_stoquastic(h));
        irr_arr.push_back(is_irreducible(h));
    }
    j["t"] = t_arr;
    j["gap"] = gap_arr;
    j["stoquastic"] = stoq_arr;
    j["irreducible"] = irr_arr;

    const std::string text = j.dump(2) + "\n";
    if (cmd.count("--out") > 0)
        write_text(cmd.get_option("--out")->as<std::string>(), text);
    else
        out << text;
    return kOk;
}

// ---------------------------------------------------------------- sweep

int cmd_sweep(CLI::App& cmd, std::ostream& out) {
    const auto instance = cmd.get_option("--instance")->as<std::string>();
    const auto variant = cmd.get_option("--variant")->as<std::string>();
    if (variant != "standard" && variant != "warm" && variant != "warmest")
        throw CLI::ValidationError("--variant", "sweep supports standard, warm, warmest");
    const int resolution = cmd.get_option("--resolution")->as<int>();
    const double gmin = cmd.get_option("--gamma-min")->as<double>();
    const double gmax = cmd.get_option("--gamma-max")->as<double>();
    const double bmin = cmd.get_option("--beta-min")->as<double>();
    const double bmax = cmd.get_option("--beta-max")->as<double>();
    const bool one_indexed = cmd.count("--one-indexed") > 0;

    const Caps limits = caps();
    const WeightedGraph g = load_edge_list(instance, one_indexed);
    if (g.vertex_count() > limits.statevector_qubits)
        throw CapacityError("instance exceeds the statevector cap");

    BlochAngles init;
    if (variant == "standard") {
        init.theta.assign(g.vertex_count(), kPi / 2.0);
        init.phi.assign(g.vertex_count(), 0.0);
    } else {
        if (cmd.count("--angles") == 0)
            throw CLI::ValidationError("--angles", "warm/warmest sweeps need a Bloch-angle file");
        init = load_bloch(cmd.get_option("--angles")->as<std::string>());
        if (init.size() != g.vertex_count())
            throw std::invalid_argument("angle count does not match instance");
    }
    const MixerSpec mixer =
        variant == "warmest" ? mixer_from_state(init) : standard_mixer(g.vertex_count());

    const SweepGrid grid = sweep_grid(g, init, mixer, {gmin, gmax}, {bmin, bmax}, resolution);

    auto f = open_out(cmd.get_option("--out")->as<std::string>());
    f << "beta\\gamma";
    for (double gv : grid.gamma) f << ',' << fmt(gv);
    f << "\n";
    for (int bi = 0; bi < resolution; ++bi) {
        f << fmt(grid.beta[bi]);
        for (int gi = 0; gi < resolution; ++gi) f << ',' << fmt(grid.at(bi, gi));
        f << "\n";
    }
    out << "wrote " << resolution << "x" << resolution << " grid\n";
    return kOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Warm-started QAOA for Max-Cut with custom mixers"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "Write a Max-Cut instance file");
    generate->require_subcommand(1);
    auto* er = generate->add_subcommand("er", "Erdős–Rényi G(n,p)");
    er->add_option("--n", "vertex count")->required();
    er->add_option("--p", "edge probability")->required();
    er->add_option("--weights", "unit or uniform:a,b")->default_val("unit");
    er->add_option("--seed", "generator seed")->default_val("0");
    er->add_option("--out", "output edge-list path")->required();
    auto* karloff = generate->add_subcommand("karloff", "Karloff graph J(m, m/2, b)");
    karloff->add_option("--m", "ground-set size (even)")->required();
    karloff->add_option("--t", "subset size (defaults to m/2)");
    karloff->add_option("--b", "required intersection size")->required();
    karloff->add_option("--out", "output edge-list path")->required();

    // warmstart
    auto* warmstart = app.add_subcommand("warmstart", "Compute a warm-start and report");
    warmstart->add_option("--instance", "edge-list instance path")->required();
    warmstart->add_option("--method", "bm or gw_projected")
        ->default_val("bm")
        ->check(CLI::IsMember({"bm", "gw_projected"}));
    warmstart->add_option("--rank", "2 or 3")->default_val("2")->check(CLI::IsMember({"2", "3"}));
    warmstart->add_option("--attempts", "solves/projections to rank")->default_val("5");
    warmstart->add_option("--rotation", "uniform or vertex")
        ->default_val("vertex")
        ->check(CLI::IsMember({"uniform", "vertex"}));
    warmstart->add_option("--rotations", "rotated states to emit")->default_val("1");
    warmstart->add_option("--seed", "master seed")->default_val("0");
    warmstart->add_option("--out", "report JSON path (stdout when omitted)");
    warmstart->add_option("--angles-out", "Bloch-angle file path");
    warmstart->add_flag("--strict", "exit 3 when the solver is non-stationary");
    warmstart->add_flag("--one-indexed", "read 1-indexed edge lists");

    // run
    auto* run = app.add_subcommand("run", "Optimize QAOA variants and emit a results CSV");
    run->add_option("--instance", "edge-list instance path")->required();
    run->add_option("--variant", "comma list of standard,warm,warmest,single_cut_epsilon")
        ->default_val("warmest");
    run->add_option("--rank", "warm-start rank")->default_val("2")->check(CLI::IsMember({"2", "3"}));
    run->add_option("--rotation", "uniform or vertex")
        ->default_val("vertex")
        ->check(CLI::IsMember({"uniform", "vertex"}));
    run->add_option("--method", "bm or gw_projected")
        ->default_val("bm")
        ->check(CLI::IsMember({"bm", "gw_projected"}));
    run->add_option("--attempts", "warm-start attempts")->default_val("5");
    run->add_option("--rotations", "rotations per solution (best kept)")->default_val("1");
    run->add_option("--depths", "comma list of depths")->default_val("1");
    run->add_option("--seed", "master seed")->default_val("0");
    run->add_option("--starts", "optimizer multistarts per row")->default_val("3");
    run->add_option("--noise-q", "phase-damping probability per mixer gate")->default_val("0");
    run->add_option("--epsilon", "pole offset for single_cut_epsilon")->default_val("0.1");
    run->add_option("--out", "results CSV path")->required();
    run->add_option("--dump-state", "debug: raw statevector dump (single row only)");
    run->add_flag("--one-indexed", "read 1-indexed edge lists");

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "Interpolated-Hamiltonian gap report");
    spectrum->add_option("--instance", "edge-list instance path")->required();
    spectrum->add_option("--angles", "Bloch-angle file (standard init when omitted)");
    spectrum->add_option("--grid", "points on t in [0,1]")->default_val("11");
    spectrum->add_option("--out", "report JSON path (stdout when omitted)");
    spectrum->add_flag("--one-indexed", "read 1-indexed edge lists");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Depth-1 landscape grid CSV");
    sweep->add_option("--instance", "edge-list instance path")->required();
    sweep->add_option("--variant", "standard, warm or warmest")->default_val("standard");
    sweep->add_option("--angles", "Bloch-angle file for warm/warmest");
    sweep->add_option("--gamma-min", "")->default_val("0");
    sweep->add_option("--gamma-max", "")->default_val(std::to_string(kPi));
    sweep->add_option("--beta-min", "")->default_val("0");
    sweep->add_option("--beta-max", "")->default_val(std::to_string(kPi));
    sweep->add_option("--resolution", "grid points per axis")->default_val("21");
    sweep->add_option("--out", "grid CSV path")->required();
    sweep->add_flag("--one-indexed", "read 1-indexed edge lists");

    std::vector<char*> argv;
    std::vector<std::string> storage = args;
    std::string prog = "qwm";
    argv.push_back(prog.data());
    for (auto& a : storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kArgError;
    }

    try {
        if (generate->parsed()) return cmd_generate(*generate, out);
        if (warmstart->parsed()) return cmd_warmstart(*warmstart, out, err);
        if (run->parsed()) return cmd_run(*run, out, err);
        if (spectrum->parsed()) return cmd_spectrum(*spectrum, out);
        if (sweep->parsed()) return cmd_sweep(*sweep, out);
        err << "no subcommand given\n";
        return kArgError;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kArgError;
    } catch (const CapacityError& e) {
        err << "capacity: " << e.what() << "\n";
        return kCapacityError;
    } catch (const DegenerateInstanceError& e) {
        err << "numerical: " << e.what() << "\n";
        return kNumericalError;
    } catch (const ParseError& e) {
        err << "parse: " << e.what() << "\n";
        return kArgError;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << "\n";
        return kArgError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kArgError;
    }
}

}  // namespace qwm::cli
