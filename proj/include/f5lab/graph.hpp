#pragma once

#include "f5lab/vertex_set.hpp"

#include <array>
#include <utility>
#include <vector>

namespace f5lab {

using Pair = std::array<int, 2>;

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
public:
    Graph() = default;
    /// Rejects loops and out-of-range endpoints; duplicate pairs collapse.
    Graph(int n, const std::vector<Pair>& edges);

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }
    const std::vector<Pair>& edges() const noexcept { return edges_; }

    bool adjacent(int u, int v) const noexcept { return u >= 0 && u < n_ && adj_[static_cast<std::size_t>(u)].contains(v); }
    const VertexSet& neighbors(int v) const;
    int degree(int v) const { return neighbors(v).count(); }
    int min_degree() const;
    int max_degree() const;
    bool is_regular() const;

    Graph induced(const VertexSet& s) const;
    Graph complement() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Pair> edges_;
    std::vector<VertexSet> adj_;
};

Graph cycle_graph(int m);
Graph complete_graph(int m);

/// Maximum independent set size by plain branch and bound; cap on vertex count.
int graph_independence_number(const Graph& g, int cap = 64);

}  // namespace f5lab
