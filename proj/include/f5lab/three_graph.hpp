#pragma once

#include "f5lab/graph.hpp"
#include "f5lab/vertex_set.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace f5lab {

using Triple = std::array<int, 3>;

/// 3-uniform hypergraph on vertices 0..n-1.
///
/// Edges are kept sorted and unique. A triangular table of pair neighbourhoods gives
/// constant-time membership tests and direct access to N(uv). The value is immutable
/// once built, so it can be shared across threads freely.
class ThreeGraph {
public:
    ThreeGraph() = default;

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }
    const std::vector<Triple>& edges() const noexcept { return edges_; }

    bool has_edge(int a, int b, int c) const noexcept;
    bool has_edge(const Triple& t) const noexcept { return has_edge(t[0], t[1], t[2]); }

    /// N(uv) = { w : {u,v,w} is an edge }. u and v must differ.
    const VertexSet& pair_neighborhood(int u, int v) const;

    int degree(int v) const;
    const std::vector<int>& degrees() const noexcept { return degrees_; }

    friend bool operator==(const ThreeGraph& a, const ThreeGraph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

    friend ThreeGraph build_three_graph(int n, const std::vector<Triple>& edges);

private:
    std::size_t pair_slot(int u, int v) const noexcept;

    int n_ = 0;
    std::vector<Triple> edges_;
    std::vector<VertexSet> pair_nbhd_;
    std::vector<int> degrees_;
};

/// Sorts and deduplicates. Throws OutOfRange / DegenerateEdge on malformed triples.
ThreeGraph build_three_graph(int n, const std::vector<Triple>& edges);

Triple sorted_triple(int a, int b, int c);

Graph shadow(const ThreeGraph& h);

/// Link of v, optionally restricted to pairs inside w.
Graph link(const ThreeGraph& h, int v, const std::optional<VertexSet>& w = std::nullopt);

VertexSet pair_neighborhood(const ThreeGraph& h, int u, int v);

struct DegreeProfile {
    int min_degree = 0;
    int max_degree = 0;
    std::vector<int> degrees;
};

DegreeProfile degree_profile(const ThreeGraph& h);

inline constexpr int kDefaultIndependenceCap = 40;
inline constexpr int kDefaultPartitionCap = 64;

/// Largest vertex set meeting every edge in at most one vertex. Exponential; throws SizeLimit above cap.
int independence_number(const ThreeGraph& h, int cap = kDefaultIndependenceCap);

struct Witness {
    enum class Kind { F5, K4minus, K4shadow, Clique, Triangle, Partition, Homomorphism };

    Kind kind = Kind::F5;
    std::vector<int> vertices;
    std::vector<std::vector<int>> edges;
    /// Per-vertex part index (partition) or image (homomorphism).
    std::vector<int> assignment;
};

std::string_view to_string(Witness::Kind kind);

/// Proper 3-colouring of the shadow, i.e. a partition with every edge meeting each part once.
std::optional<Witness> three_partition(const ThreeGraph& h, int cap = kDefaultPartitionCap);

/// Re-checks a witness against its host 3-graph (F5, K4minus, K4shadow, Partition kinds).
bool validate_witness(const ThreeGraph& h, const Witness& w);
/// Re-checks a witness against a graph (Clique, Triangle kinds).
bool validate_witness(const Graph& g, const Witness& w);
/// Checks that w.assignment maps every edge of g onto an edge of pattern.
bool validate_homomorphism(const Graph& g, const Graph& pattern, const Witness& w);

}  // namespace f5lab
