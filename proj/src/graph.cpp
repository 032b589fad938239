#include "f5lab/graph.hpp"

#include "f5lab/error.hpp"

#include <algorithm>
#include <string>

namespace f5lab {

Graph::Graph(int n, const std::vector<Pair>& edges) : n_(n) {
    if (n < 0) throw Error(ErrorKind::OutOfRange, "negative vertex count");
    adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorKind::OutOfRange, "edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        if (u == v) throw Error(ErrorKind::DegenerateEdge, "loop at " + std::to_string(u));
        if (u > v) std::swap(u, v);
        edges_.push_back({u, v});
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (auto [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u)].insert(v);
        adj_[static_cast<std::size_t>(v)].insert(u);
    }
}

const VertexSet& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw Error(ErrorKind::OutOfRange, "vertex " + std::to_string(v));
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = n_;
    for (const auto& a : adj_) d = std::min(d, a.count());
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, a.count());
    return d;
}

bool Graph::is_regular() const { return min_degree() == max_degree(); }

Graph Graph::induced(const VertexSet& s) const {
    std::vector<Pair> kept;
    for (auto [u, v] : edges_)
        if (s.contains(u) && s.contains(v)) kept.push_back({u, v});
    return Graph(n_, kept);
}

Graph Graph::complement() const {
    std::vector<Pair> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) out.push_back({u, v});
    return Graph(n_, out);
}

Graph cycle_graph(int m) {
    std::vector<Pair> e;
    if (m >= 3)
        for (int i = 0; i < m; ++i) e.push_back({i, (i + 1) % m});
    else if (m == 2)
        e.push_back({0, 1});
    return Graph(m, e);
}

Graph complete_graph(int m) {
    std::vector<Pair> e;
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) e.push_back({u, v});
    return Graph(m, e);
}

namespace {

// Bron–Kerbosch style search on the complement: pick a vertex of P, either take it (drop its
// neighbours) or drop it. Bound: |current| + |P|.
void max_independent(const Graph& g, VertexSet p, int size, int& best) {
    if (p.empty()) {
        best = std::max(best, size);
        return;
    }
    if (size + p.count() <= best) return;
    // Branch on a vertex of maximum degree inside P.
    int pick = -1, pick_deg = -1;
    p.for_each([&](int v) {
        int d = (g.neighbors(v) & p).count();
        if (d > pick_deg) {
            pick = v;
            pick_deg = d;
        }
    });
    if (pick_deg == 0) {
        best = std::max(best, size + p.count());
        return;
    }
    VertexSet take = p - g.neighbors(pick);
    take.erase(pick);
    max_independent(g, take, size + 1, best);
    p.erase(pick);
    max_independent(g, p, size, best);
}

}  // namespace

int graph_independence_number(const Graph& g, int cap) {
    if (g.order() > cap)
        throw Error(ErrorKind::SizeLimit, "independence number limited to " + std::to_string(cap) + " vertices");
    int best = 0;
    max_independent(g, VertexSet::full(g.order()), 0, best);
    return best;
}

}  // namespace f5lab
