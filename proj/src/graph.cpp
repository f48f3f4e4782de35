#include "qwm/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "qwm/errors.hpp"
#include "qwm/rng.hpp"

namespace qwm {

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 1) throw std::invalid_argument("vertex count must be >= 1");
    for (Edge& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_) throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loops are not allowed");
        if (!std::isfinite(e.w)) throw std::invalid_argument("edge weight must be finite");
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v)
            throw std::invalid_argument("duplicate edge");
    }
    for (const Edge& e : edges_) {
        total_abs_weight_ += std::abs(e.w);
        total_weight_ += e.w;
    }
}

Cut Cut::from_index(int n, std::uint64_t basis_index) {
    Cut c;
    c.bits.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) c.bits[j] = static_cast<std::uint8_t>((basis_index >> j) & 1u);
    return c;
}

std::uint64_t Cut::to_index() const {
    if (bits.size() > 64) throw std::invalid_argument("cut too wide for a 64-bit index");
    std::uint64_t idx = 0;
    for (std::size_t j = 0; j < bits.size(); ++j)
        if (bits[j]) idx |= (1ULL << j);
    return idx;
}

Cut Cut::complement() const {
    Cut c = *this;
    for (auto& b : c.bits) b ^= 1u;
    return c;
}

double cut_value(const WeightedGraph& g, const Cut& c) {
    if (c.size() != g.vertex_count())
        throw std::invalid_argument("cut length does not match vertex count");
    double total = 0.0;
    for (const Edge& e : g.edges())
        if (c.bits[e.u] != c.bits[e.v]) total += e.w;
    return total;
}

CutExtremes brute_force_extremes(const WeightedGraph& g, int vertex_cap) {
    const int n = g.vertex_count();
    if (n > vertex_cap) throw CapacityError("brute force capped at " + std::to_string(vertex_cap) + " vertices");

    const auto& edges = g.edges();
    const std::size_t m = edges.size();
    // Vertex 0 stays on side 0; each enumerated value covers itself and its complement.
    const std::uint64_t count = (n == 1) ? 1 : (1ULL << (n - 1));

    double best_max = -std::numeric_limits<double>::infinity();
    double best_min = std::numeric_limits<double>::infinity();
    std::uint64_t max_mask = 0, min_mask = 0;

#pragma omp parallel
    {
        double lmax = -std::numeric_limits<double>::infinity();
        double lmin = std::numeric_limits<double>::infinity();
        std::uint64_t lmax_mask = 0, lmin_mask = 0;
#pragma omp for schedule(static) nowait
        for (std::int64_t c = 0; c < static_cast<std::int64_t>(count); ++c) {
            const std::uint64_t mask = static_cast<std::uint64_t>(c) << 1;
            double val = 0.0;
            for (std::size_t i = 0; i < m; ++i)
                if (((mask >> edges[i].u) ^ (mask >> edges[i].v)) & 1ULL) val += edges[i].w;
            if (val > lmax || (val == lmax && mask < lmax_mask)) {
                lmax = val;
                lmax_mask = mask;
            }
            if (val < lmin || (val == lmin && mask < lmin_mask)) {
                lmin = val;
                lmin_mask = mask;
            }
        }
#pragma omp critical
        {
            // Tie-break on the smaller assignment index: the merged result is
            // independent of thread count and merge order.
            if (lmax > best_max || (lmax == best_max && lmax_mask < max_mask)) {
                best_max = lmax;
                max_mask = lmax_mask;
            }
            if (lmin < best_min || (lmin == best_min && lmin_mask < min_mask)) {
                best_min = lmin;
                min_mask = lmin_mask;
            }
        }
    }

    CutExtremes ex;
    ex.max_cut = best_max;
    ex.min_cut = best_min;
    ex.max_witness = Cut::from_index(n, max_mask);
    ex.min_witness = Cut::from_index(n, min_mask);
    return ex;
}

double approximation_ratio(double expected_cut, const CutExtremes& extremes) {
    if (!(extremes.max_cut > extremes.min_cut))
        throw DegenerateInstanceError("max cut equals min cut; ratio undefined");
    return (expected_cut - extremes.min_cut) / (extremes.max_cut - extremes.min_cut);
}

WeightedGraph generate_erdos_renyi(int n, double edge_prob, const WeightLaw& law,
                                   std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
        throw std::invalid_argument("edge probability must lie in [0,1]");
    Rng rng(derive_seed(seed, seed_stream::kGraphGen));
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.uniform() < edge_prob) {
                double w = (law.kind == WeightLaw::Kind::Unit) ? 1.0 : rng.uniform(law.a, law.b);
                edges.push_back({u, v, w});
            }
        }
    }
    return WeightedGraph(n, std::move(edges));
}

std::int64_t binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial with negative upper index");
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t res = 1;
    for (int i = 1; i <= k; ++i) res = res * (n - k + i) / i;
    return res;
}

namespace {

// t-subsets of {0..m-1} in lexicographic order.
std::vector<std::vector<int>> subsets_lex(int m, int t) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(t);
    for (int i = 0; i < t; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = t - 1;
        while (i >= 0 && cur[i] == m - t + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < t; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    int i = 0, j = 0, c = 0;
    while (i < static_cast<int>(a.size()) && j < static_cast<int>(b.size())) {
        if (a[i] < b[j])
            ++i;
        else if (a[i] > b[j])
            ++j;
        else {
            ++c;
            ++i;
            ++j;
        }
    }
    return c;
}

}  // namespace

WeightedGraph generate_karloff(int m, int t, int b, int vertex_cap) {
    if (!(0 <= b && b <= t && t <= m)) throw std::invalid_argument("need 0 <= b <= t <= m");
    const std::int64_t nverts = binomial(m, t);
    if (nverts < 1) throw std::invalid_argument("empty vertex set");
    if (nverts > vertex_cap)
        throw CapacityError("J(" + std::to_string(m) + "," + std::to_string(t) + "," +
                            std::to_string(b) + ") has " + std::to_string(nverts) +
                            " vertices, above the cap of " + std::to_string(vertex_cap));

    const auto verts = subsets_lex(m, t);
    const int n = static_cast<int>(verts.size());
    std::vector<Edge> edges;
    if (m <= 64) {
        std::vector<std::uint64_t> masks(n, 0);
        for (int i = 0; i < n; ++i)
            for (int x : verts[i]) masks[i] |= (1ULL << x);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (std::popcount(masks[i] & masks[j]) == b) edges.push_back({i, j, 1.0});
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (intersection_size(verts[i], verts[j]) == b) edges.push_back({i, j, 1.0});
    }
    return WeightedGraph(n, std::move(edges));
}

double karloff_gw_ratio(int m, int b) {
    if (m < 2 || m % 2 != 0) throw std::invalid_argument("m must be a positive even integer");
    if (!(0 <= b && 4 * b < m)) throw std::invalid_argument("need 0 <= b < m/4");
    const double pi = 3.14159265358979323846;
    const double x = 4.0 * b / m - 1.0;
    return (std::acos(x) / pi) / (1.0 - 2.0 * b / m);
}

double johnson_eigenvalue(int m, int t, int b, int s) {
    if (!(0 <= s && s <= t)) throw std::invalid_argument("need 0 <= s <= t");
    if (!(0 <= b && b < t)) throw std::invalid_argument("need 0 <= b < t");
    double sum = 0.0;
    for (int r = 0; r <= s; ++r) {
        const double term = static_cast<double>(binomial(s, r)) *
                            static_cast<double>(binomial(t - r, t - b)) *
                            static_cast<double>(binomial(m - t - s + r, m - 2 * t + b));
        sum += ((s - r) % 2 == 0) ? term : -term;
    }
    return sum;
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

bool is_blank(std::string_view s) {
    return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

WeightedGraph parse_edge_list(std::string_view text, bool one_indexed) {
    const auto lines = split_lines(text);
    std::size_t li = 0;
    while (li < lines.size() && is_blank(lines[li])) ++li;
    if (li >= lines.size()) throw ParseError(0, "empty input");

    long n = 0, m = 0;
    {
        std::istringstream hs{std::string(lines[li])};
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra))
            throw ParseError(static_cast<int>(li + 1), "expected header \"n m\"");
        if (n < 1) throw ParseError(static_cast<int>(li + 1), "vertex count must be >= 1");
        if (m < 0) throw ParseError(static_cast<int>(li + 1), "edge count must be >= 0");
    }
    ++li;

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    const int offset = one_indexed ? 1 : 0;
    long parsed = 0;
    for (; li < lines.size() && parsed < m; ++li) {
        if (is_blank(lines[li])) continue;
        const int lineno = static_cast<int>(li + 1);
        std::istringstream es{std::string(lines[li])};
        long u = 0, v = 0;
        double w = 0.0;
        std::string extra;
        if (!(es >> u >> v >> w) || (es >> extra))
            throw ParseError(lineno, "expected edge line \"u v w\"");
        u -= offset;
        v -= offset;
        if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(lineno, "vertex index out of range");
        if (u == v) throw ParseError(lineno, "self-loop");
        if (!std::isfinite(w)) throw ParseError(lineno, "weight must be finite");
        edges.push_back({static_cast<int>(u), static_cast<int>(v), w});
        ++parsed;
    }
    for (; li < lines.size(); ++li)
        if (!is_blank(lines[li]))
            throw ParseError(static_cast<int>(li + 1), "trailing content after declared edges");
    if (parsed < m) throw ParseError(static_cast<int>(lines.size()), "fewer edge lines than declared");

    // Duplicate detection here keeps the line number; the constructor would
    // reject them too, but without provenance.
    std::vector<Edge> canon = edges;
    for (Edge& e : canon)
        if (e.u > e.v) std::swap(e.u, e.v);
    std::vector<std::size_t> order(canon.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return canon[a].u != canon[b].u ? canon[a].u < canon[b].u : canon[a].v < canon[b].v;
    });
    for (std::size_t i = 1; i < order.size(); ++i) {
        const Edge& a = canon[order[i - 1]];
        const Edge& b = canon[order[i]];
        if (a.u == b.u && a.v == b.v)
            throw ParseError(0, "duplicate edge (" + std::to_string(a.u) + "," +
                                    std::to_string(a.v) + ")");
    }
    return WeightedGraph(static_cast<int>(n), std::move(edges));
}

std::string serialize_edge_list(const WeightedGraph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    char buf[64];
    for (const Edge& e : g.edges()) {
        std::snprintf(buf, sizeof(buf), "%.17g", e.w);
        out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + buf + "\n";
    }
    return out;
}

WeightedGraph load_edge_list(const std::string& path, bool one_indexed) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_edge_list(ss.str(), one_indexed);
}

void save_edge_list(const WeightedGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << serialize_edge_list(g);
}

}  // namespace qwm
