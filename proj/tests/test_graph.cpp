#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <cmath>

#include "qwm/errors.hpp"
#include "qwm/graph.hpp"
#include "qwm/rng.hpp"
#include "qwm/serial_ref.hpp"

using namespace qwm;

namespace {

WeightedGraph triangle() { return WeightedGraph(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}); }

WeightedGraph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5, 1.0});      // outer cycle
        edges.push_back({i, i + 5, 1.0});            // spokes
        edges.push_back({i + 5, (i + 2) % 5 + 5, 1.0});  // inner pentagram
    }
    return WeightedGraph(10, edges);
}

Cut cut_from_string(const std::string& s) {
    Cut c;
    for (char ch : s) c.bits.push_back(ch == '1' ? 1 : 0);
    return c;
}

WeightedGraph random_graph(Rng& rng, int n, double p) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform() < p) edges.push_back({u, v, rng.uniform(-1.0, 1.0)});
    return WeightedGraph(n, std::move(edges));
}

}  // namespace

TEST_CASE("cut_value basics", "[graph]") {
    const auto tri = triangle();
    CHECK(cut_value(tri, cut_from_string("011")) == 2.0);
    CHECK(cut_value(tri, cut_from_string("000")) == 0.0);

    const WeightedGraph single(2, {{0, 1, 3.5}});
    CHECK(cut_value(single, cut_from_string("01")) == 3.5);

    CHECK_THROWS_AS(cut_value(tri, cut_from_string("01")), std::invalid_argument);
}

TEST_CASE("cut_value is complement-invariant", "[graph]") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(7));
        const auto g = random_graph(rng, n, 0.6);
        const auto c = Cut::from_index(n, rng.next_u64() & ((1ULL << n) - 1));
        CHECK(cut_value(g, c) == Catch::Approx(cut_value(g, c.complement())).margin(1e-12));
    }
}

TEST_CASE("brute_force_extremes on known instances", "[graph]") {
    const auto tri_ex = brute_force_extremes(triangle());
    CHECK(tri_ex.max_cut == 2.0);
    CHECK(tri_ex.min_cut == 0.0);

    const WeightedGraph neg(2, {{0, 1, -1.0}});
    const auto neg_ex = brute_force_extremes(neg);
    CHECK(neg_ex.max_cut == 0.0);
    CHECK(neg_ex.min_cut == -1.0);

    // Frozen from the reference double-enumeration oracle.
    const auto pet = petersen();
    CHECK(ref::brute_force_extremes(pet).max_cut == 12.0);
    CHECK(brute_force_extremes(pet).max_cut == 12.0);
}

TEST_CASE("brute_force_extremes matches naive enumeration", "[graph]") {
    Rng rng(22);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(10));
        const auto g = random_graph(rng, n, 0.5);
        const auto fast = brute_force_extremes(g);
        const auto ref = ref::brute_force_extremes(g);
        CHECK(fast.max_cut == ref.max_cut);
        CHECK(fast.min_cut == ref.min_cut);
        CHECK(cut_value(g, fast.max_witness) == fast.max_cut);
        CHECK(cut_value(g, fast.min_witness) == fast.min_cut);
    }
}

TEST_CASE("brute_force_extremes rejects oversized instances", "[graph]") {
    const WeightedGraph g(30, {{0, 1, 1.0}});
    CHECK_THROWS_AS(brute_force_extremes(g), CapacityError);
}

TEST_CASE("approximation_ratio", "[graph]") {
    const auto ex = brute_force_extremes(triangle());
    CHECK(approximation_ratio(ex.max_cut, ex) == 1.0);
    CHECK(approximation_ratio(ex.min_cut, ex) == 0.0);
    CHECK(approximation_ratio(1.5, ex) == Catch::Approx(0.75));

    CutExtremes degenerate;
    degenerate.max_cut = degenerate.min_cut = 1.0;
    CHECK_THROWS_AS(approximation_ratio(1.0, degenerate), DegenerateInstanceError);

    // Affine invariance: shifting all three quantities leaves the ratio alone.
    CutExtremes shifted = ex;
    shifted.max_cut += 5.0;
    shifted.min_cut += 5.0;
    CHECK(approximation_ratio(1.5 + 5.0, shifted) == Catch::Approx(0.75));
}

TEST_CASE("erdos-renyi generator", "[graph]") {
    const auto k4 = generate_erdos_renyi(4, 1.0, WeightLaw::unit(), 7);
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);
    for (const Edge& e : k4.edges()) CHECK(e.w == 1.0);

    const auto empty = generate_erdos_renyi(5, 0.0, WeightLaw::unit(), 7);
    CHECK(empty.edge_count() == 0);

    const auto a = generate_erdos_renyi(8, 0.5, WeightLaw::uniform(-1, 1), 42);
    const auto b = generate_erdos_renyi(8, 0.5, WeightLaw::uniform(-1, 1), 42);
    CHECK(serialize_edge_list(a) == serialize_edge_list(b));

    CHECK_THROWS_AS(generate_erdos_renyi(0, 0.5, WeightLaw::unit(), 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_erdos_renyi(4, 1.5, WeightLaw::unit(), 1), std::invalid_argument);
}

TEST_CASE("karloff generator node/edge counts", "[graph]") {
    struct Row {
        int m, t, b;
        int nodes;
        std::size_t edges;
    };
    const Row rows[] = {{6, 3, 1, 20, 90},     {8, 4, 1, 70, 560},     {10, 5, 1, 252, 3150},
                        {10, 5, 2, 252, 12600}, {12, 6, 1, 924, 16632}, {12, 6, 2, 924, 103950}};
    for (const Row& r : rows) {
        const auto g = generate_karloff(r.m, r.t, r.b);
        CHECK(g.vertex_count() == r.nodes);
        CHECK(g.edge_count() == r.edges);
        // Regular with degree C(t,b) * C(m-t, t-b).
        const auto expected_degree = binomial(r.t, r.b) * binomial(r.m - r.t, r.t - r.b);
        std::vector<int> deg(g.vertex_count(), 0);
        for (const Edge& e : g.edges()) {
            ++deg[e.u];
            ++deg[e.v];
        }
        for (int d : deg) CHECK(d == expected_degree);
    }
    CHECK_THROWS_AS(generate_karloff(6, 7, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_karloff(6, 3, -1), std::invalid_argument);
    CHECK_THROWS_AS(generate_karloff(40, 20, 1), CapacityError);
}

TEST_CASE("karloff gw ratio", "[graph]") {
    CHECK(karloff_gw_ratio(6, 1) == Catch::Approx(0.9123).margin(5e-4));
    CHECK(karloff_gw_ratio(8, 1) == Catch::Approx(0.8889).margin(5e-4));
    CHECK(karloff_gw_ratio(10, 1) == Catch::Approx(0.8810).margin(5e-4));
    CHECK(karloff_gw_ratio(10, 2) == Catch::Approx(0.9402).margin(5e-4));
    CHECK(karloff_gw_ratio(8, 0) == 1.0);
    CHECK_THROWS_AS(karloff_gw_ratio(7, 1), std::invalid_argument);
    CHECK_THROWS_AS(karloff_gw_ratio(8, 2), std::invalid_argument);
}

TEST_CASE("johnson eigenvalues", "[graph]") {
    // beta_0 is the degree: handshake consistency with J(6,3,1).
    CHECK(johnson_eigenvalue(6, 3, 1, 0) == 9.0);
    CHECK(johnson_eigenvalue(6, 3, 1, 1) == -3.0);

    // beta_1 equals the smallest adjacency eigenvalue of J(6,3,1).
    const auto g = generate_karloff(6, 3, 1);
    const int n = g.vertex_count();
    Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n, n);
    for (const Edge& e : g.edges()) adj(e.u, e.v) = adj(e.v, e.u) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adj, Eigen::EigenvaluesOnly);
    CHECK(solver.eigenvalues()(0) == Catch::Approx(johnson_eigenvalue(6, 3, 1, 1)).margin(1e-8));

    // beta_1(m, m/2, b) = C(m/2, b)^2 (4b/m - 1) on the conjecture range.
    for (int m : {6, 8, 10}) {
        for (int b = 0; 4 * b < m; ++b) {
            const double c = static_cast<double>(binomial(m / 2, b));
            CHECK(johnson_eigenvalue(m, m / 2, b, 1) ==
                  Catch::Approx(c * c * (4.0 * b / m - 1.0)).margin(1e-9));
        }
    }

    CHECK_THROWS_AS(johnson_eigenvalue(6, 3, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(johnson_eigenvalue(6, 3, 1, 4), std::invalid_argument);
}

TEST_CASE("edge-list parsing and serialization", "[graph]") {
    const auto g = parse_edge_list("2 1\n0 1 1.0\n");
    CHECK(g.vertex_count() == 2);
    REQUIRE(g.edge_count() == 1);
    CHECK(g.edges()[0].w == 1.0);

    // serialize . parse is the identity on canonical text.
    Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const auto h = random_graph(rng, 2 + static_cast<int>(rng.below(8)), 0.5);
        const std::string text = serialize_edge_list(h);
        CHECK(serialize_edge_list(parse_edge_list(text)) == text);
    }

    CHECK_THROWS_AS(parse_edge_list("2 1\n1 1 1.0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 2 1.0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 2\n0 1 1.0\n0 1 2.0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);

    try {
        parse_edge_list("3 2\n0 1 1.0\n2 2 1.0\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }

    // 1-indexed variant behind the flag.
    const auto one = parse_edge_list("2 1\n1 2 0.5\n", true);
    CHECK(one.edges()[0].u == 0);
    CHECK(one.edges()[0].v == 1);
}
