#include "f5lab/detect.hpp"

#include "f5lab/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace f5lab {

namespace {

Witness make_f5(int a, int b, int c, int d, int e) {
    Witness w;
    w.kind = Witness::Kind::F5;
    w.vertices = {a, b, c, d, e};
    for (const auto& t : {sorted_triple(a, b, c), sorted_triple(a, b, d), sorted_triple(c, d, e)})
        w.edges.push_back({t[0], t[1], t[2]});
    return w;
}

Witness make_k4minus(int apex, int b, int c, int d) {
    Witness w;
    w.kind = Witness::Kind::K4minus;
    w.vertices = {apex, b, c, d};
    for (const auto& t : {sorted_triple(apex, b, c), sorted_triple(apex, b, d), sorted_triple(apex, c, d)})
        w.edges.push_back({t[0], t[1], t[2]});
    return w;
}

// Edges {s,x,y1} and {s,x,y2} plus some edge covering {y1,y2}: always an F5 or a K4^{3-}.
Witness shared_pair_witness(const ThreeGraph& h, int s, int x, int y1, int y2) {
    const auto& cover = h.pair_neighborhood(y1, y2);
    for (int z = cover.first(); z >= 0; z = cover.next(z))
        if (z != s && z != x) return make_f5(s, x, y1, y2, z);
    int apex = cover.contains(s) ? s : x;
    int other = apex == s ? x : s;
    return make_k4minus(apex, other, y1, y2);
}

}  // namespace

std::optional<Witness> find_F5(const ThreeGraph& h) {
    const int n = h.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const auto& common = h.pair_neighborhood(u, v);
            if (common.count() < 2) continue;
            for (int c = common.first(); c >= 0; c = common.next(c))
                for (int d = common.next(c); d >= 0; d = common.next(d)) {
                    const auto& tail = h.pair_neighborhood(c, d);
                    for (int e = tail.first(); e >= 0; e = tail.next(e))
                        if (e != u && e != v) return make_f5(u, v, c, d, e);
                }
        }
    return std::nullopt;
}

std::optional<Witness> find_K4_3minus(const ThreeGraph& h) {
    const int n = h.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const auto& common = h.pair_neighborhood(u, v);
            if (common.count() < 2) continue;
            for (int c = common.first(); c >= 0; c = common.next(c))
                for (int d = common.next(c); d >= 0; d = common.next(d)) {
                    if (h.has_edge(u, c, d)) return make_k4minus(u, v, c, d);
                    if (h.has_edge(v, c, d)) return make_k4minus(v, u, c, d);
                }
        }
    return std::nullopt;
}

std::optional<Witness> find_K4_shadow(const ThreeGraph& h) {
    auto clique = find_clique(shadow(h), 4, std::max(h.order(), kDefaultCliqueCap));
    if (!clique) return std::nullopt;
    Witness w;
    w.kind = Witness::Kind::K4shadow;
    w.vertices = clique->vertices;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            int a = w.vertices[i], b = w.vertices[j];
            auto t = sorted_triple(a, b, h.pair_neighborhood(a, b).first());
            w.edges.push_back({t[0], t[1], t[2]});
        }
    return w;
}

bool is_cancellative(const ThreeGraph& h) {
    // Two distinct triples have symmetric difference of size 2, 4 or 6; only size 2 can fit
    // inside a third triple. Pair coverage is rebuilt from the edge list here.
    std::set<Pair> covered;
    for (const auto& [a, b, c] : h.edges()) {
        covered.insert({a, b});
        covered.insert({a, c});
        covered.insert({b, c});
    }
    const auto& e = h.edges();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            std::vector<int> diff;
            std::set_symmetric_difference(e[i].begin(), e[i].end(), e[j].begin(), e[j].end(), std::back_inserter(diff));
            if (diff.size() == 2 && covered.count({diff[0], diff[1]})) return false;
        }
    return true;
}

namespace {

int greedy_colour_bound(const Graph& g, const VertexSet& p) {
    // Number of colour classes in a greedy colouring of g[p]; an upper bound on its clique number.
    VertexSet left = p;
    int colours = 0;
    while (!left.empty()) {
        ++colours;
        VertexSet avail = left;
        while (!avail.empty()) {
            int v = avail.first();
            avail.erase(v);
            avail -= g.neighbors(v);
            left.erase(v);
        }
    }
    return colours;
}

bool extend_clique(const Graph& g, int k, std::vector<int>& chosen, VertexSet p) {
    if (static_cast<int>(chosen.size()) == k) return true;
    if (static_cast<int>(chosen.size()) + p.count() < k) return false;
    if (static_cast<int>(chosen.size()) + greedy_colour_bound(g, p) < k) return false;
    while (!p.empty()) {
        int v = p.first();
        p.erase(v);
        chosen.push_back(v);
        if (extend_clique(g, k, chosen, p & g.neighbors(v))) return true;
        chosen.pop_back();
        if (static_cast<int>(chosen.size()) + p.count() < k) return false;
    }
    return false;
}

}  // namespace

std::optional<Witness> find_clique(const Graph& g, int k, int cap) {
    if (k < 1) throw Error(ErrorKind::PreconditionViolated, "clique size must be at least 1");
    if (g.order() > cap) throw Error(ErrorKind::SizeLimit, "clique search limited to " + std::to_string(cap) + " vertices");
    std::vector<int> chosen;
    if (!extend_clique(g, k, chosen, VertexSet::full(g.order()))) return std::nullopt;
    Witness w;
    w.kind = Witness::Kind::Clique;
    w.vertices = chosen;
    return w;
}

namespace {

struct HomSearch {
    const Graph& g;
    const Graph& p;
    std::vector<int> image;
    std::vector<VertexSet> domain;

    bool solve(int assigned) {
        if (assigned == g.order()) return true;
        int pick = -1, best_size = 0, best_deg = -1;
        for (int v = 0; v < g.order(); ++v) {
            if (image[static_cast<std::size_t>(v)] >= 0) continue;
            int size = domain[static_cast<std::size_t>(v)].count();
            int deg = g.degree(v);
            if (pick < 0 || size < best_size || (size == best_size && deg > best_deg)) {
                pick = v;
                best_size = size;
                best_deg = deg;
            }
        }
        if (best_size == 0) return false;
        const auto candidates = domain[static_cast<std::size_t>(pick)];
        for (int x = candidates.first(); x >= 0; x = candidates.next(x)) {
            std::vector<std::pair<int, VertexSet>> saved;
            bool wiped = false;
            const auto& nb = g.neighbors(pick);
            for (int w = nb.first(); w >= 0; w = nb.next(w)) {
                if (image[static_cast<std::size_t>(w)] >= 0) continue;
                auto& dw = domain[static_cast<std::size_t>(w)];
                saved.emplace_back(w, dw);
                dw &= p.neighbors(x);
                if (dw.empty()) {
                    wiped = true;
                    break;
                }
            }
            image[static_cast<std::size_t>(pick)] = x;
            if (!wiped && solve(assigned + 1)) return true;
            image[static_cast<std::size_t>(pick)] = -1;
            for (auto& [w, d] : saved) domain[static_cast<std::size_t>(w)] = std::move(d);
        }
        return false;
    }
};

}  // namespace

std::optional<Witness> find_homomorphism(const Graph& g, const Graph& pattern, int cap) {
    if (g.order() > cap || pattern.order() > cap)
        throw Error(ErrorKind::SizeLimit, "homomorphism search limited to " + std::to_string(cap) + " vertices");
    HomSearch s{g, pattern, std::vector<int>(static_cast<std::size_t>(g.order()), -1), {}};
    VertexSet any = VertexSet::full(pattern.order());
    VertexSet non_isolated(pattern.order());
    for (int x = 0; x < pattern.order(); ++x)
        if (pattern.degree(x) > 0) non_isolated.insert(x);
    for (int v = 0; v < g.order(); ++v) s.domain.push_back(g.degree(v) > 0 ? non_isolated : any);
    if (!s.solve(0)) return std::nullopt;
    Witness w;
    w.kind = Witness::Kind::Homomorphism;
    w.vertices.resize(static_cast<std::size_t>(g.order()));
    std::iota(w.vertices.begin(), w.vertices.end(), 0);
    w.assignment = s.image;
    return w;
}

std::vector<FactReport> audit_link_facts(const ThreeGraph& h) {
    const int n = h.order();
    FactReport tri{fact::kLinkTriangleFree, true, {}};
    FactReport indep{fact::kPairNeighborhoodIndependent, true, {}};
    FactReport adjacent{fact::kAdjacentLinksDisjoint, true, {}};
    FactReport edge_disjoint{fact::kEdgeLinksDisjoint, true, {}};
    FactReport split{fact::kEdgeLinksTriangleSplit, true, {}};

    // Triangle {a,b,c} in L(v) means va b, vac, vbc are edges: a K4^{3-} with apex v.
    for (int v = 0; v < n; ++v)
        for (int a = 0; a < n; ++a) {
            if (a == v) continue;
            const auto& na = h.pair_neighborhood(v, a);
            for (int b = na.next(a); b >= 0; b = na.next(b)) {
                auto both = na & h.pair_neighborhood(v, b);
                for (int c = both.next(b); c >= 0; c = both.next(c))
                    tri.violations.push_back({{v}, make_k4minus(v, a, b, c)});
            }
        }

    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const auto& common = h.pair_neighborhood(u, v);
            if (common.empty()) continue;
            for (int a = common.first(); a >= 0; a = common.next(a))
                for (int b = common.next(a); b >= 0; b = common.next(b))
                    if (!h.pair_neighborhood(a, b).empty())
                        indep.violations.push_back({{u, v}, shared_pair_witness(h, u, v, a, b)});
            for (int a = 0; a < n; ++a) {
                if (a == u || a == v) continue;
                auto both = h.pair_neighborhood(u, a) & h.pair_neighborhood(v, a);
                for (int b = both.next(a); b >= 0; b = both.next(b))
                    adjacent.violations.push_back({{u, v}, shared_pair_witness(h, a, b, u, v)});
            }
        }

    for (const auto& e : h.edges()) {
        VertexSet w = VertexSet::full(n);
        for (int x : e) w.erase(x);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j) {
                int vi = e[i], vj = e[j], vk = e[3 - i - j];
                for (int a = w.first(); a >= 0; a = w.next(a)) {
                    auto both = h.pair_neighborhood(vi, a) & h.pair_neighborhood(vj, a) & w;
                    for (int b = both.next(a); b >= 0; b = both.next(b))
                        edge_disjoint.violations.push_back({{e[0], e[1], e[2]}, make_f5(a, b, vi, vj, vk)});
                }
            }

        // Union graph of the three restricted links; adjacency per link as vertex sets.
        std::array<std::vector<VertexSet>, 3> lk;
        std::vector<VertexSet> uni(static_cast<std::size_t>(n), VertexSet(n));
        for (std::size_t i = 0; i < 3; ++i) {
            lk[i].assign(static_cast<std::size_t>(n), VertexSet(n));
            for (int a = w.first(); a >= 0; a = w.next(a)) {
                lk[i][static_cast<std::size_t>(a)] = h.pair_neighborhood(e[i], a) & w;
                uni[static_cast<std::size_t>(a)] |= lk[i][static_cast<std::size_t>(a)];
            }
        }
        for (int a = w.first(); a >= 0; a = w.next(a)) {
            const auto& na = uni[static_cast<std::size_t>(a)];
            for (int b = na.next(a); b >= 0; b = na.next(b)) {
                auto nc = na & uni[static_cast<std::size_t>(b)];
                for (int c = nc.next(b); c >= 0; c = nc.next(c)) {
                    std::array<int, 3> hits{};
                    bool all_one = true, some_full = false;
                    for (std::size_t i = 0; i < 3; ++i) {
                        const auto& L = lk[i];
                        hits[i] = int(L[static_cast<std::size_t>(a)].contains(b)) + int(L[static_cast<std::size_t>(a)].contains(c)) +
                                  int(L[static_cast<std::size_t>(b)].contains(c));
                        all_one = all_one && hits[i] == 1;
                        some_full = some_full || hits[i] == 3;
                    }
                    if (all_one || some_full) continue;
                    // Some link holds exactly two triangle sides; the third side sits in another link.
                    for (std::size_t i = 0; i < 3; ++i) {
                        if (hits[i] != 2) continue;
                        const auto& L = lk[i];
                        std::array<int, 3> t{a, b, c};
                        for (std::size_t s = 0; s < 3; ++s) {
                            int x = t[(s + 1) % 3], y = t[(s + 2) % 3];
                            if (L[static_cast<std::size_t>(x)].contains(y)) continue;
                            // Sides {t[s],x} and {t[s],y} are in L(vi); {x,y} is not.
                            for (std::size_t j = 0; j < 3; ++j)
                                if (j != i && lk[j][static_cast<std::size_t>(x)].contains(y)) {
                                    split.violations.push_back({{e[0], e[1], e[2]}, make_f5(e[i], t[s], x, y, e[j])});
                                    goto next_triangle;
                                }
                        }
                    }
                next_triangle:;
                }
            }
        }
    }

    std::vector<FactReport> out{std::move(tri), std::move(indep), std::move(adjacent), std::move(edge_disjoint),
                                std::move(split)};
    for (auto& r : out) r.holds = r.violations.empty();
    return out;
}

bool revalidate_violation(const ThreeGraph& h, const FactReport& report, const FactViolation& v) {
    const auto& w = v.witness;
    if (!validate_witness(h, w)) return false;
    const auto& s = v.subject;
    const auto& x = w.vertices;
    auto in_subject = [&](int a) { return std::find(s.begin(), s.end(), a) != s.end(); };
    auto same_pair = [](int a, int b, int c, int d) { return (a == c && b == d) || (a == d && b == c); };
    const std::string& f = report.fact;
    if (f == fact::kLinkTriangleFree) return s.size() == 1 && w.kind == Witness::Kind::K4minus && x[0] == s[0];
    if (f == fact::kPairNeighborhoodIndependent)
        return s.size() == 2 && same_pair(x[0], x[1], s[0], s[1]) && !h.pair_neighborhood(x[2], x[3]).empty();
    if (f == fact::kAdjacentLinksDisjoint)
        return s.size() == 2 && same_pair(x[2], x[3], s[0], s[1]) && !h.pair_neighborhood(s[0], s[1]).empty();
    if (f == fact::kEdgeLinksDisjoint)
        return s.size() == 3 && h.has_edge(s[0], s[1], s[2]) && w.kind == Witness::Kind::F5 && !in_subject(x[0]) &&
               !in_subject(x[1]) && in_subject(x[2]) && in_subject(x[3]) && in_subject(x[4]);
    if (f == fact::kEdgeLinksTriangleSplit)
        return s.size() == 3 && h.has_edge(s[0], s[1], s[2]) && w.kind == Witness::Kind::F5 && in_subject(x[0]) &&
               !in_subject(x[1]) && !in_subject(x[2]) && !in_subject(x[3]) && in_subject(x[4]) && x[0] != x[4];
    return false;
}

LinkRestrictionBound link_restriction_bound(const ThreeGraph& h, int v, const VertexSet& s) {
    if (v < 0 || v >= h.order()) throw Error(ErrorKind::OutOfRange, "vertex " + std::to_string(v));
    if (s.universe() != h.order()) throw Error(ErrorKind::OutOfRange, "vertex set over a different universe");
    LinkRestrictionBound b;
    b.lhs = static_cast<long long>(link(h, v, s).size());
    long long outside = h.order() - s.count();
    b.rhs = static_cast<long long>(h.degree(v)) - static_cast<long long>(independence_number(h)) * outside;
    return b;
}

}  // namespace f5lab
