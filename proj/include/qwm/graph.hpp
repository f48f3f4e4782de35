#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qwm/config.hpp"

namespace qwm {

struct Edge {
    int u = 0;
    int v = 0;
    double w = 0.0;
};

/// Undirected weighted graph, immutable after construction. Edges are stored
/// once each with u < v, sorted lexicographically; construction rejects
/// self-loops, duplicates, out-of-range endpoints and non-finite weights.
class WeightedGraph {
  public:
    WeightedGraph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// W̄ = Σ|w_e|, the optimizer's termination scale.
    double total_abs_weight() const { return total_abs_weight_; }
    double total_weight() const { return total_weight_; }

  private:
    int n_;
    std::vector<Edge> edges_;
    double total_abs_weight_ = 0.0;
    double total_weight_ = 0.0;
};

/// Vertex bipartition; bits[j] ∈ {0,1} is the side of vertex j.
/// Side-0 vertices form the set S of the cut (S, V\S).
struct Cut {
    std::vector<std::uint8_t> bits;

    static Cut from_index(int n, std::uint64_t basis_index);
    std::uint64_t to_index() const;  // requires bits.size() <= 64
    Cut complement() const;
    int size() const { return static_cast<int>(bits.size()); }
};

struct CutExtremes {
    double max_cut = 0.0;
    double min_cut = 0.0;
    Cut max_witness;
    Cut min_witness;
};

/// Total weight of edges crossing the cut.
double cut_value(const WeightedGraph& g, const Cut& c);

/// Exact max/min cut by enumerating the 2^{n-1} assignments with vertex 0
/// fixed to side 0 (complement symmetry). Parallelizes over assignment
/// ranges; the result (including witnesses) is deterministic.
CutExtremes brute_force_extremes(const WeightedGraph& g,
                                 int vertex_cap = kDefaultCaps.brute_force_vertices);

/// Normalized instance-specific ratio (expected − min) / (max − min).
/// Throws DegenerateInstanceError when max == min.
double approximation_ratio(double expected_cut, const CutExtremes& extremes);

struct WeightLaw {
    enum class Kind { Unit, Uniform } kind = Kind::Unit;
    double a = 0.0;
    double b = 1.0;

    static WeightLaw unit() { return {Kind::Unit, 1.0, 1.0}; }
    static WeightLaw uniform(double a, double b) { return {Kind::Uniform, a, b}; }
};

/// Erdős–Rényi G(n, p): each unordered pair included independently.
/// Deterministic for a given seed.
WeightedGraph generate_erdos_renyi(int n, double edge_prob, const WeightLaw& law,
                                   std::uint64_t seed);

/// J(m, t, b): vertices are the t-subsets of {0..m-1} in lexicographic order,
/// with a unit edge between subsets sharing exactly b elements.
WeightedGraph generate_karloff(int m, int t, int b, int vertex_cap = 10000);

/// Closed-form Goemans-Williamson ratio on J(m, m/2, b) for even m and
/// 0 <= b < m/4: (arccos(4b/m − 1)/π) / (1 − 2b/m).
double karloff_gw_ratio(int m, int b);

/// Adjacency eigenvalue β_s of J(m, t, b):
///   β_s = Σ_{r=0}^{s} (−1)^{s−r} C(s,r) C(t−r, t−b) C(m−t−s+r, m−2t+b).
double johnson_eigenvalue(int m, int t, int b, int s);

/// Exact binomial coefficient; 0 when k < 0 or k > n, throws on n < 0.
std::int64_t binomial(int n, int k);

/// Edge-list text format: header "n m", then m lines "u v w" (0-indexed,
/// UTF-8, LF). `one_indexed` accepts the "u v w" 1-indexed variant.
WeightedGraph parse_edge_list(std::string_view text, bool one_indexed = false);

/// Canonical form: edges sorted with u < v, weights at 17 significant digits.
std::string serialize_edge_list(const WeightedGraph& g);

WeightedGraph load_edge_list(const std::string& path, bool one_indexed = false);
void save_edge_list(const WeightedGraph& g, const std::string& path);

}  // namespace qwm
