#pragma once

// Naive reference implementations, written without the library's data structures.

#include "f5lab/three_graph.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Tri = std::array<int, 3>;

inline std::set<Tri> edge_set(const f5lab::ThreeGraph& h) {
    std::set<Tri> s;
    for (const auto& e : h.edges()) {
        Tri t{e[0], e[1], e[2]};
        std::sort(t.begin(), t.end());
        s.insert(t);
    }
    return s;
}

inline bool has(const std::set<Tri>& s, int a, int b, int c) {
    Tri t{a, b, c};
    std::sort(t.begin(), t.end());
    return s.count(t) > 0;
}

/// Ordered 5-tuples of distinct vertices with abc, abd, cde present.
inline bool has_F5(const f5lab::ThreeGraph& h) {
    auto s = edge_set(h);
    int n = h.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (c == a || c == b || d == a || d == b || d == c) continue;
                    if (!has(s, a, b, c) || !has(s, a, b, d)) continue;
                    for (int e = 0; e < n; ++e)
                        if (e != a && e != b && e != c && e != d && has(s, c, d, e)) return true;
                }
    return false;
}

/// abc, abd, acd for some apex a.
inline bool has_K4minus(const f5lab::ThreeGraph& h) {
    auto s = edge_set(h);
    int n = h.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    if (a == b || a == c || a == d) continue;
                    if (has(s, a, b, c) && has(s, a, b, d) && has(s, a, c, d)) return true;
                }
    return false;
}

inline std::vector<std::vector<bool>> shadow_matrix(const f5lab::ThreeGraph& h) {
    int n = h.order();
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (const auto& e : h.edges())
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j) adj[static_cast<std::size_t>(e[i])][static_cast<std::size_t>(e[j])] = true;
    return adj;
}

inline bool has_K4_shadow(const f5lab::ThreeGraph& h) {
    auto adj = shadow_matrix(h);
    int n = h.order();
    auto A = [&](int u, int v) { return adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    if (A(a, b) && A(a, c) && A(a, d) && A(b, c) && A(b, d) && A(c, d)) return true;
    return false;
}

/// No distinct edges A, B and edge C with A xor B inside C.
inline bool cancellative(const f5lab::ThreeGraph& h) {
    std::vector<std::set<int>> es;
    for (const auto& e : h.edges()) es.push_back({e[0], e[1], e[2]});
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = 0; j < es.size(); ++j) {
            if (i == j) continue;
            std::vector<int> diff;
            std::set_symmetric_difference(es[i].begin(), es[i].end(), es[j].begin(), es[j].end(),
                                          std::back_inserter(diff));
            for (const auto& c : es)
                if (std::all_of(diff.begin(), diff.end(), [&](int v) { return c.count(v) > 0; })) return false;
        }
    return true;
}

/// Every edge rainbow under some 3-colouring; exhaustive over 3^n.
inline bool three_colourable(const f5lab::ThreeGraph& h) {
    int n = h.order();
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    std::vector<int> col(static_cast<std::size_t>(n));
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (int i = 0; i < n; ++i) {
            col[static_cast<std::size_t>(i)] = static_cast<int>(c % 3);
            c /= 3;
        }
        bool ok = true;
        for (const auto& e : h.edges()) {
            int x = col[static_cast<std::size_t>(e[0])], y = col[static_cast<std::size_t>(e[1])],
                z = col[static_cast<std::size_t>(e[2])];
            if (x == y || y == z || x == z) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

/// Largest set meeting every edge in at most one vertex.
inline int alpha(const f5lab::ThreeGraph& h) {
    int n = h.order(), best = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        int cnt = __builtin_popcount(s);
        if (cnt <= best) continue;
        bool ok = true;
        for (const auto& e : h.edges()) {
            int in = ((s >> e[0]) & 1) + ((s >> e[1]) & 1) + ((s >> e[2]) & 1);
            if (in > 1) {
                ok = false;
                break;
            }
        }
        if (ok) best = cnt;
    }
    return best;
}

inline int min_degree(const f5lab::ThreeGraph& h) {
    std::vector<int> deg(static_cast<std::size_t>(h.order()));
    for (const auto& e : h.edges())
        for (int v : e) ++deg[static_cast<std::size_t>(v)];
    return deg.empty() ? 0 : *std::min_element(deg.begin(), deg.end());
}

inline std::vector<Tri> all_triples(int n) {
    std::vector<Tri> t;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) t.push_back({a, b, c});
    return t;
}

inline f5lab::ThreeGraph from_mask(int n, const std::vector<Tri>& triples, std::uint64_t mask) {
    std::vector<f5lab::Triple> edges;
    for (std::size_t i = 0; i < triples.size(); ++i)
        if ((mask >> i) & 1) edges.push_back({triples[i][0], triples[i][1], triples[i][2]});
    return f5lab::build_three_graph(n, edges);
}

/// Number of 3-graphs on n vertices up to isomorphism: distinct orbit minima over all labelled graphs.
inline std::size_t isomorphism_classes(int n) {
    auto triples = all_triples(n);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> image;  // perm -> triple -> triple
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> img;
        for (const auto& t : triples) {
            Tri u{perm[static_cast<std::size_t>(t[0])], perm[static_cast<std::size_t>(t[1])],
                  perm[static_cast<std::size_t>(t[2])]};
            std::sort(u.begin(), u.end());
            img.push_back(static_cast<int>(std::find(triples.begin(), triples.end(), u) - triples.begin()));
        }
        image.push_back(img);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::set<std::uint64_t> reps;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << triples.size()); ++m) {
        std::uint64_t best = m;
        for (const auto& img : image) {
            std::uint64_t x = 0;
            for (std::size_t i = 0; i < triples.size(); ++i)
                if ((m >> i) & 1) x |= std::uint64_t{1} << img[i];
            best = std::min(best, x);
        }
        reps.insert(best);
    }
    return reps.size();
}

struct SubsetScan {
    int max_edges = -1;
    int max_min_degree_non3 = -1;  ///< -1 when no cancellative non-3-partite graph exists
};

/// Full subset lattice of triples on n <= 5 vertices, cancellative graphs only.
inline SubsetScan cancellative_scan(int n) {
    auto triples = all_triples(n);
    SubsetScan r;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << triples.size()); ++m) {
        auto h = from_mask(n, triples, m);
        if (has_F5(h) || has_K4minus(h)) continue;
        r.max_edges = std::max(r.max_edges, static_cast<int>(h.size()));
        if (!three_colourable(h)) r.max_min_degree_non3 = std::max(r.max_min_degree_non3, min_degree(h));
    }
    return r;
}

// Values computed with exact symbolic arithmetic outside this code base.
namespace constants {
inline constexpr double s0 = 0.61486082400022432;  // 3 - 16/(3 sqrt5)
inline constexpr double s0_squared = 0.37805383289023483;  // 661/45 - (32/5) sqrt5
inline constexpr double claim_e = 0.35590504884914079;  // 33(12 - 5 sqrt5)/76
inline constexpr double claim_d = 0.088802621666246060;  // 2 sqrt5 - 263/60
inline constexpr double beta = 0.59628479399994392;  // 4/(3 sqrt5)
}  // namespace constants

}  // namespace oracle
