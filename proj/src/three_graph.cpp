#include "f5lab/three_graph.hpp"

#include "f5lab/error.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace f5lab {

Triple sorted_triple(int a, int b, int c) {
    Triple t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

std::size_t ThreeGraph::pair_slot(int u, int v) const noexcept {
    if (u > v) std::swap(u, v);
    // Row-major upper triangle without the diagonal.
    auto uu = static_cast<std::size_t>(u), vv = static_cast<std::size_t>(v), nn = static_cast<std::size_t>(n_);
    return uu * nn - uu * (uu + 1) / 2 + (vv - uu - 1);
}

ThreeGraph build_three_graph(int n, const std::vector<Triple>& edges) {
    if (n < 0) throw Error(ErrorKind::OutOfRange, "negative vertex count");
    ThreeGraph h;
    h.n_ = n;
    h.edges_.reserve(edges.size());
    for (const auto& e : edges) {
        for (int v : e)
            if (v < 0 || v >= n)
                throw Error(ErrorKind::OutOfRange, "vertex " + std::to_string(v) + " in a " + std::to_string(n) + "-vertex 3-graph");
        auto t = sorted_triple(e[0], e[1], e[2]);
        if (t[0] == t[1] || t[1] == t[2])
            throw Error(ErrorKind::DegenerateEdge, "repeated vertex in {" + std::to_string(e[0]) + "," +
                                                       std::to_string(e[1]) + "," + std::to_string(e[2]) + "}");
        h.edges_.push_back(t);
    }
    std::sort(h.edges_.begin(), h.edges_.end());
    h.edges_.erase(std::unique(h.edges_.begin(), h.edges_.end()), h.edges_.end());

    auto pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    h.pair_nbhd_.assign(pairs, VertexSet(n));
    h.degrees_.assign(static_cast<std::size_t>(n), 0);
    for (const auto& [a, b, c] : h.edges_) {
        h.pair_nbhd_[h.pair_slot(a, b)].insert(c);
        h.pair_nbhd_[h.pair_slot(a, c)].insert(b);
        h.pair_nbhd_[h.pair_slot(b, c)].insert(a);
        ++h.degrees_[static_cast<std::size_t>(a)];
        ++h.degrees_[static_cast<std::size_t>(b)];
        ++h.degrees_[static_cast<std::size_t>(c)];
    }
    return h;
}

bool ThreeGraph::has_edge(int a, int b, int c) const noexcept {
    if (a < 0 || b < 0 || c < 0 || a >= n_ || b >= n_ || c >= n_ || a == b) return false;
    return pair_nbhd_[pair_slot(a, b)].contains(c);
}

const VertexSet& ThreeGraph::pair_neighborhood(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw Error(ErrorKind::OutOfRange, "pair outside vertex range");
    if (u == v) throw Error(ErrorKind::SameVertex, "pair neighbourhood of a single vertex");
    return pair_nbhd_[pair_slot(u, v)];
}

int ThreeGraph::degree(int v) const {
    if (v < 0 || v >= n_) throw Error(ErrorKind::OutOfRange, "vertex " + std::to_string(v));
    return degrees_[static_cast<std::size_t>(v)];
}

Graph shadow(const ThreeGraph& h) {
    std::vector<Pair> pairs;
    pairs.reserve(3 * h.size());
    for (const auto& [a, b, c] : h.edges()) {
        pairs.push_back({a, b});
        pairs.push_back({a, c});
        pairs.push_back({b, c});
    }
    return Graph(h.order(), pairs);
}

Graph link(const ThreeGraph& h, int v, const std::optional<VertexSet>& w) {
    if (v < 0 || v >= h.order()) throw Error(ErrorKind::OutOfRange, "vertex " + std::to_string(v));
    if (w && w->universe() != h.order()) throw Error(ErrorKind::OutOfRange, "restriction set over a different universe");
    std::vector<Pair> pairs;
    for (const auto& e : h.edges()) {
        if (e[0] != v && e[1] != v && e[2] != v) continue;
        Pair p{};
        int k = 0;
        for (int x : e)
            if (x != v) p[static_cast<std::size_t>(k++)] = x;
        if (w && !(w->contains(p[0]) && w->contains(p[1]))) continue;
        pairs.push_back(p);
    }
    return Graph(h.order(), pairs);
}

VertexSet pair_neighborhood(const ThreeGraph& h, int u, int v) { return h.pair_neighborhood(u, v); }

DegreeProfile degree_profile(const ThreeGraph& h) {
    DegreeProfile p;
    p.degrees = h.degrees();
    if (!p.degrees.empty()) {
        auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
        p.min_degree = *lo;
        p.max_degree = *hi;
    }
    return p;
}

int independence_number(const ThreeGraph& h, int cap) {
    if (h.order() > cap)
        throw Error(ErrorKind::SizeLimit, "independence number limited to " + std::to_string(cap) + " vertices");
    return graph_independence_number(shadow(h), cap);
}

std::string_view to_string(Witness::Kind kind) {
    switch (kind) {
    case Witness::Kind::F5: return "F5";
    case Witness::Kind::K4minus: return "K4minus";
    case Witness::Kind::K4shadow: return "K4shadow";
    case Witness::Kind::Clique: return "clique";
    case Witness::Kind::Triangle: return "triangle";
    case Witness::Kind::Partition: return "partition";
    case Witness::Kind::Homomorphism: return "homomorphism";
    }
    return "unknown";
}

namespace {

struct Colouring {
    int n;
    std::vector<std::uint64_t> adj;
    std::vector<int> colour;
    std::vector<int> degree;

    bool solve(int coloured, int used) {
        if (coloured == n) return true;
        // Most saturated uncoloured vertex first, ties by degree.
        int pick = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (colour[static_cast<std::size_t>(v)] >= 0) continue;
            int seen = 0;
            auto nb = adj[static_cast<std::size_t>(v)];
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                if (colour[static_cast<std::size_t>(u)] >= 0) seen |= 1 << colour[static_cast<std::size_t>(u)];
            }
            int sat = std::popcount(static_cast<unsigned>(seen));
            if (sat > best_sat || (sat == best_sat && degree[static_cast<std::size_t>(v)] > best_deg)) {
                pick = v;
                best_sat = sat;
                best_deg = degree[static_cast<std::size_t>(v)];
            }
        }
        auto nb = adj[static_cast<std::size_t>(pick)];
        int forbidden = 0;
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            if (colour[static_cast<std::size_t>(u)] >= 0) forbidden |= 1 << colour[static_cast<std::size_t>(u)];
        }
        // A fresh colour is interchangeable with any other fresh colour.
        int limit = std::min(3, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (forbidden & (1 << c)) continue;
            colour[static_cast<std::size_t>(pick)] = c;
            if (solve(coloured + 1, std::max(used, c + 1))) return true;
        }
        colour[static_cast<std::size_t>(pick)] = -1;
        return false;
    }
};

}  // namespace

std::optional<Witness> three_partition(const ThreeGraph& h, int cap) {
    if (h.order() > cap || h.order() > 64)
        throw Error(ErrorKind::SizeLimit, "3-partition search limited to " + std::to_string(std::min(cap, 64)) + " vertices");
    auto g = shadow(h);
    Colouring c{h.order(), std::vector<std::uint64_t>(static_cast<std::size_t>(h.order()), 0),
                std::vector<int>(static_cast<std::size_t>(h.order()), -1), {}};
    for (auto [u, v] : g.edges()) {
        c.adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        c.adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    for (int v = 0; v < h.order(); ++v) c.degree.push_back(std::popcount(c.adj[static_cast<std::size_t>(v)]));
    if (!c.solve(0, 0)) return std::nullopt;
    Witness w;
    w.kind = Witness::Kind::Partition;
    w.assignment = c.colour;
    for (int v = 0; v < h.order(); ++v) w.vertices.push_back(v);
    return w;
}

namespace {

bool distinct(const std::vector<int>& vs, int n) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] < 0 || vs[i] >= n) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (vs[i] == vs[j]) return false;
    }
    return true;
}

bool edges_match(const std::vector<std::vector<int>>& listed, const std::vector<Triple>& expected) {
    if (listed.size() != expected.size()) return false;
    for (std::size_t i = 0; i < listed.size(); ++i) {
        if (listed[i].size() != 3) return false;
        if (sorted_triple(listed[i][0], listed[i][1], listed[i][2]) != expected[i]) return false;
    }
    return true;
}

}  // namespace

bool validate_witness(const ThreeGraph& h, const Witness& w) {
    const auto& v = w.vertices;
    switch (w.kind) {
    case Witness::Kind::F5: {
        if (v.size() != 5 || !distinct(v, h.order())) return false;
        std::vector<Triple> need{sorted_triple(v[0], v[1], v[2]), sorted_triple(v[0], v[1], v[3]),
                                 sorted_triple(v[2], v[3], v[4])};
        for (const auto& t : need)
            if (!h.has_edge(t)) return false;
        return edges_match(w.edges, need);
    }
    case Witness::Kind::K4minus: {
        if (v.size() != 4 || !distinct(v, h.order())) return false;
        std::vector<Triple> need{sorted_triple(v[0], v[1], v[2]), sorted_triple(v[0], v[1], v[3]),
                                 sorted_triple(v[0], v[2], v[3])};
        for (const auto& t : need)
            if (!h.has_edge(t)) return false;
        return edges_match(w.edges, need);
    }
    case Witness::Kind::K4shadow: {
        if (v.size() != 4 || !distinct(v, h.order()) || w.edges.size() != 6) return false;
        // edges[k] must be a host edge covering the k-th pair in lexicographic order of positions.
        std::size_t k = 0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j, ++k) {
                const auto& e = w.edges[k];
                if (e.size() != 3 || !h.has_edge(e[0], e[1], e[2])) return false;
                if (std::find(e.begin(), e.end(), v[i]) == e.end() || std::find(e.begin(), e.end(), v[j]) == e.end())
                    return false;
            }
        return true;
    }
    case Witness::Kind::Partition: {
        if (w.assignment.size() != static_cast<std::size_t>(h.order())) return false;
        for (int c : w.assignment)
            if (c < 0 || c > 2) return false;
        for (const auto& [a, b, c] : h.edges()) {
            int mask = (1 << w.assignment[static_cast<std::size_t>(a)]) | (1 << w.assignment[static_cast<std::size_t>(b)]) |
                       (1 << w.assignment[static_cast<std::size_t>(c)]);
            if (mask != 7) return false;
        }
        return true;
    }
    default: return false;
    }
}

bool validate_witness(const Graph& g, const Witness& w) {
    const auto& v = w.vertices;
    switch (w.kind) {
    case Witness::Kind::Clique:
    case Witness::Kind::Triangle: {
        if (w.kind == Witness::Kind::Triangle && v.size() != 3) return false;
        if (!distinct(v, g.order())) return false;
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j)
                if (!g.adjacent(v[i], v[j])) return false;
        return true;
    }
    default: return false;
    }
}

bool validate_homomorphism(const Graph& g, const Graph& pattern, const Witness& w) {
    if (w.kind != Witness::Kind::Homomorphism || w.assignment.size() != static_cast<std::size_t>(g.order())) return false;
    for (int x : w.assignment)
        if (x < 0 || x >= pattern.order()) return false;
    for (auto [u, v] : g.edges())
        if (!pattern.adjacent(w.assignment[static_cast<std::size_t>(u)], w.assignment[static_cast<std::size_t>(v)]))
            return false;
    return true;
}

}  // namespace f5lab
