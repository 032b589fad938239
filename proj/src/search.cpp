#include "f5lab/search.hpp"

#include "f5lab/detect.hpp"
#include "f5lab/error.hpp"
#include "f5lab/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

namespace f5lab {

ForbiddenFamily ForbiddenFamily::parse(std::string_view text) {
    ForbiddenFamily f;
    std::string s(text);
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
        std::transform(item.begin(), item.end(), item.begin(), [](unsigned char c) { return std::tolower(c); });
        if (item.empty()) continue;
        if (item == "f5") f.f5 = true;
        else if (item == "k4minus" || item == "k4-" || item == "k43minus") f.k4minus = true;
        else if (item == "k4shadow") f.k4shadow = true;
        else throw Error(ErrorKind::Parse, "unknown forbidden pattern '" + item + "'");
    }
    return f;
}

std::string ForbiddenFamily::to_string() const {
    std::string out;
    auto add = [&](bool on, const char* name) {
        if (!on) return;
        if (!out.empty()) out += ",";
        out += name;
    };
    add(k4minus, "k4minus");
    add(f5, "f5");
    add(k4shadow, "k4shadow");
    return out;
}

bool ForbiddenFamily::admits(const ThreeGraph& h) const {
    if (f5 && find_F5(h)) return false;
    if (k4minus && find_K4_3minus(h)) return false;
    if (k4shadow && find_K4_shadow(h)) return false;
    return true;
}

namespace {

constexpr EdgeMask bit(int t) { return EdgeMask{1} << t; }

EdgeMask reverse_bits(EdgeMask x) {
    x = ((x >> 1) & 0x5555555555555555ULL) | ((x & 0x5555555555555555ULL) << 1);
    x = ((x >> 2) & 0x3333333333333333ULL) | ((x & 0x3333333333333333ULL) << 2);
    x = ((x >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((x & 0x0F0F0F0F0F0F0F0FULL) << 4);
    x = ((x >> 8) & 0x00FF00FF00FF00FFULL) | ((x & 0x00FF00FF00FF00FFULL) << 8);
    x = ((x >> 16) & 0x0000FFFF0000FFFFULL) | ((x & 0x0000FFFF0000FFFFULL) << 16);
    return (x >> 32) | (x << 32);
}

}  // namespace

TripleSpace::TripleSpace(int n) : n_(n) {
    if (n < 0 || n > 8) throw Error(ErrorKind::SizeLimit, "triple space supports n <= 8, got " + std::to_string(n));
    index_.assign(static_cast<std::size_t>(std::max(n, 1) * std::max(n, 1) * std::max(n, 1)), -1);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                index_[static_cast<std::size_t>((a * n + b) * n + c)] = static_cast<int>(triples_.size());
                for (int v : {a, b, c}) at_[static_cast<std::size_t>(v)] |= bit(static_cast<int>(triples_.size()));
                triples_.push_back({a, b, c});
            }
    const auto T = triples_.size();
    f5_partner_.assign(T, std::vector<EdgeMask>(T, 0));
    k4m_partner_.assign(T, std::vector<EdgeMask>(T, 0));
    f5_reach_.assign(T, 0);
    k4m_reach_.assign(T, 0);
    auto link3 = [](std::vector<std::vector<EdgeMask>>& partner, std::vector<EdgeMask>& reach, int x, int y, int z) {
        const int copy[3] = {x, y, z};
        for (int i = 0; i < 3; ++i) {
            int t = copy[i], p = copy[(i + 1) % 3], q = copy[(i + 2) % 3];
            partner[static_cast<std::size_t>(t)][static_cast<std::size_t>(p)] |= bit(q);
            partner[static_cast<std::size_t>(t)][static_cast<std::size_t>(q)] |= bit(p);
            reach[static_cast<std::size_t>(t)] |= bit(p) | bit(q);
        }
    };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (c == a || c == b) continue;
                for (int d = c + 1; d < n; ++d) {
                    if (d == a || d == b) continue;
                    for (int e = 0; e < n; ++e) {
                        if (e == a || e == b || e == c || e == d) continue;
                        link3(f5_partner_, f5_reach_, index(a, b, c), index(a, b, d), index(c, d, e));
                    }
                }
            }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    const int q[4] = {a, b, c, d};
                    for (int apex = 0; apex < 4; ++apex) {
                        int o[3], k = 0;
                        for (int i = 0; i < 4; ++i)
                            if (i != apex) o[k++] = q[i];
                        int x = q[apex];
                        link3(k4m_partner_, k4m_reach_, index(x, o[0], o[1]), index(x, o[0], o[2]), index(x, o[1], o[2]));
                    }
                }

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<std::uint8_t> img(T);
        for (std::size_t t = 0; t < T; ++t) {
            const auto& [a, b, c] = triples_[t];
            img[t] = static_cast<std::uint8_t>(index(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)],
                                                     perm[static_cast<std::size_t>(c)]));
        }
        perm_image_.push_back(std::move(img));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

int TripleSpace::index(int a, int b, int c) const {
    auto t = sorted_triple(a, b, c);
    if (t[0] < 0 || t[2] >= n_ || t[0] == t[1] || t[1] == t[2])
        throw Error(ErrorKind::OutOfRange, "not a triple of the vertex set");
    return index_[static_cast<std::size_t>((t[0] * n_ + t[1]) * n_ + t[2])];
}

ThreeGraph TripleSpace::graph(EdgeMask mask) const {
    std::vector<Triple> edges;
    for (EdgeMask m = mask; m; m &= m - 1) edges.push_back(triples_[static_cast<std::size_t>(std::countr_zero(m))]);
    return build_three_graph(n_, edges);
}

EdgeMask TripleSpace::mask(const ThreeGraph& h) const {
    if (h.order() != n_) throw Error(ErrorKind::PreconditionViolated, "vertex count mismatch");
    EdgeMask m = 0;
    for (const auto& [a, b, c] : h.edges()) m |= bit(index(a, b, c));
    return m;
}

bool TripleSpace::creates_forbidden(EdgeMask mask, int t, const ForbiddenFamily& family) const {
    const auto ts = static_cast<std::size_t>(t);
    if (family.f5)
        for (EdgeMask m = mask & f5_reach_[ts]; m; m &= m - 1)
            if (f5_partner_[ts][static_cast<std::size_t>(std::countr_zero(m))] & mask) return true;
    if (family.k4minus)
        for (EdgeMask m = mask & k4m_reach_[ts]; m; m &= m - 1)
            if (k4m_partner_[ts][static_cast<std::size_t>(std::countr_zero(m))] & mask) return true;
    if (family.k4shadow) {
        std::array<unsigned, 8> adj{};
        EdgeMask all = mask | bit(t);
        for (EdgeMask m = all; m; m &= m - 1) {
            const auto& [a, b, c] = triples_[static_cast<std::size_t>(std::countr_zero(m))];
            adj[static_cast<std::size_t>(a)] |= (1U << b) | (1U << c);
            adj[static_cast<std::size_t>(b)] |= (1U << a) | (1U << c);
            adj[static_cast<std::size_t>(c)] |= (1U << a) | (1U << b);
        }
        const auto& tr = triples_[ts];
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                unsigned common = adj[static_cast<std::size_t>(tr[static_cast<std::size_t>(i)])] &
                                  adj[static_cast<std::size_t>(tr[static_cast<std::size_t>(j)])];
                for (unsigned c = common; c; c &= c - 1)
                    if (adj[static_cast<std::size_t>(std::countr_zero(c))] & common) return true;
            }
    }
    return false;
}

EdgeMask TripleSpace::newly_blocked(EdgeMask mask, int t, const ForbiddenFamily& family) const {
    const auto ts = static_cast<std::size_t>(t);
    EdgeMask out = 0;
    if (family.f5)
        for (EdgeMask m = mask & f5_reach_[ts]; m; m &= m - 1) out |= f5_partner_[ts][static_cast<std::size_t>(std::countr_zero(m))];
    if (family.k4minus)
        for (EdgeMask m = mask & k4m_reach_[ts]; m; m &= m - 1) out |= k4m_partner_[ts][static_cast<std::size_t>(std::countr_zero(m))];
    return out;
}

std::array<int, 8> TripleSpace::degrees(EdgeMask mask) const {
    std::array<int, 8> d{};
    for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = std::popcount(mask & at_[static_cast<std::size_t>(v)]);
    return d;
}

EdgeMask TripleSpace::key(EdgeMask mask) const {
    int T = triples();
    if (T == 0) return 0;
    return reverse_bits(mask) >> (64 - T);
}

EdgeMask TripleSpace::image(EdgeMask mask, std::size_t perm) const {
    EdgeMask out = 0;
    const auto& img = perm_image_[perm];
    for (EdgeMask m = mask; m; m &= m - 1) out |= bit(img[static_cast<std::size_t>(std::countr_zero(m))]);
    return out;
}

EdgeMask TripleSpace::canonical_form(EdgeMask mask) const {
    EdgeMask best = mask, best_key = key(mask);
    for (std::size_t p = 0; p < perm_image_.size(); ++p) {
        EdgeMask im = image(mask, p);
        EdgeMask k = key(im);
        if (k > best_key) {
            best_key = k;
            best = im;
        }
    }
    return best;
}

bool TripleSpace::is_canonical(EdgeMask mask) const {
    EdgeMask k = key(mask);
    for (std::size_t p = 0; p < perm_image_.size(); ++p)
        if (key(image(mask, p)) > k) return false;
    return true;
}

namespace {

struct Node {
    EdgeMask mask = 0;
    EdgeMask addable = 0;  // triples after `last` not yet blocked
    int last = -1;
};

class Searcher {
public:
    Searcher(const SearchSpec& spec, const TripleSpace& space) : spec_(spec), space_(space) {}

    long long value(EdgeMask mask) const {
        if (spec_.mode == SearchMode::MaxEdges) return std::popcount(mask);
        auto d = space_.degrees(mask);
        return *std::min_element(d.begin(), d.begin() + space_.order());
    }

    long long bound(const Node& node) const {
        if (spec_.mode == SearchMode::MaxEdges) return std::popcount(node.mask) + std::popcount(node.addable);
        long long b = std::numeric_limits<long long>::max();
        for (int v = 0; v < space_.order(); ++v)
            b = std::min<long long>(b, std::popcount((node.mask | node.addable) & space_.triples_at(v)));
        return b;
    }

    bool meets_side_conditions(EdgeMask mask) const {
        if (!spec_.require_non_3partite) return true;
        return !three_partition(space_.graph(mask)).has_value();
    }

    /// Offers a visited graph to the incumbent.
    void offer(EdgeMask mask) {
        long long v = value(mask);
        if (v > best_ && meets_side_conditions(mask)) {
            best_ = v;
            witness_ = mask;
        }
    }

    std::vector<Node> children(const Node& node) const {
        std::vector<Node> out;
        for (EdgeMask m = node.addable; m; m &= m - 1) {
            int t = std::countr_zero(m);
            if (space_.creates_forbidden(node.mask, t, spec_.family)) continue;
            Node c;
            c.mask = node.mask | bit(t);
            c.last = t;
            EdgeMask later = (t + 1 >= 64) ? 0 : node.addable & ~((EdgeMask{1} << (t + 1)) - 1);
            c.addable = later & ~space_.newly_blocked(node.mask, t, spec_.family);
            if (spec_.isomorphism_reduction && !space_.is_canonical(c.mask)) continue;
            out.push_back(c);
        }
        return out;
    }

    /// Depth-first search below node (node itself already offered). Returns false when the budget ran out.
    bool explore(const Node& node) {
        if (bound(node) <= best_) return true;
        for (const auto& c : children(node)) {
            if (budget_ && nodes_ >= budget_) return false;
            ++nodes_;
            offer(c.mask);
            if (!explore(c)) return false;
        }
        return true;
    }

    Node root() const {
        Node r;
        int T = space_.triples();
        r.addable = T == 64 ? ~EdgeMask{0} : (EdgeMask{1} << T) - 1;
        return r;
    }

    EdgeMask greedy() const {
        EdgeMask mask = 0;
        for (int t = 0; t < space_.triples(); ++t)
            if (!space_.creates_forbidden(mask, t, spec_.family)) mask |= bit(t);
        return mask;
    }

    const SearchSpec& spec_;
    const TripleSpace& space_;
    long long best_ = -1;
    EdgeMask witness_ = 0;
    std::uint64_t nodes_ = 0;
    std::uint64_t budget_ = 0;
};

}  // namespace

SearchResult run_search(const SearchSpec& spec) {
    if (spec.n < 0) throw Error(ErrorKind::OutOfRange, "negative vertex count");
    int cap = spec.isomorphism_reduction || spec.family.empty() ? spec.cap_reduced : spec.cap_labeled;
    if (spec.n > cap || spec.n > 8)
        throw Error(ErrorKind::SizeLimit, "search limited to n <= " + std::to_string(std::min(cap, 8)));
    TripleSpace space(spec.n);

    // Fixed depth-2 frontier; every task starts from the same incumbent.
    Searcher top(spec, space);
    Node root = top.root();
    top.nodes_ = 1;
    top.offer(root.mask);
    EdgeMask g = top.greedy();
    if (spec.family.admits(space.graph(g))) top.offer(g);

    std::vector<Node> frontier;
    for (const auto& c : top.children(root)) {
        ++top.nodes_;
        top.offer(c.mask);
        if (top.bound(c) <= top.best_) continue;
        for (const auto& gc : top.children(c)) {
            ++top.nodes_;
            top.offer(gc.mask);
            frontier.push_back(gc);
        }
    }

    struct TaskResult {
        long long best = -1;
        EdgeMask witness = 0;
        std::uint64_t nodes = 0;
        bool complete = true;
    };
    std::vector<TaskResult> results(frontier.size());
    std::uint64_t per_task = 0;
    if (spec.budget) {
        std::uint64_t left = spec.budget > top.nodes_ ? spec.budget - top.nodes_ : 0;
        per_task = frontier.empty() ? 0 : std::max<std::uint64_t>(1, left / frontier.size());
    }
    const long long start_best = top.best_;
    parallel_for(static_cast<int>(frontier.size()), spec.threads, [&](int i) {
        Searcher s(spec, space);
        s.best_ = start_best;
        s.budget_ = per_task;
        auto& r = results[static_cast<std::size_t>(i)];
        r.complete = s.explore(frontier[static_cast<std::size_t>(i)]);
        r.nodes = s.nodes_;
        if (s.best_ > start_best) {
            r.best = s.best_;
            r.witness = s.witness_;
        }
    });

    SearchResult out;
    out.exhaustive = true;
    long long best = top.best_;
    EdgeMask witness = top.witness_;
    out.nodes = top.nodes_;
    for (const auto& r : results) {
        out.nodes += r.nodes;
        out.exhaustive = out.exhaustive && r.complete;
        if (r.best > best) {
            best = r.best;
            witness = r.witness;
        }
    }
    if (best >= 0) {
        out.optimum = best;
        out.witness = space.graph(witness);
    }
    return out;
}

SearchResult extremal_number(int n, const ForbiddenFamily& family, bool reduction, int threads) {
    SearchSpec spec;
    spec.n = n;
    spec.family = family;
    spec.mode = SearchMode::MaxEdges;
    spec.isomorphism_reduction = reduction;
    spec.threads = threads;
    return run_search(spec);
}

SearchResult max_min_degree(SearchSpec spec) {
    spec.mode = SearchMode::MaxMinDegree;
    return run_search(spec);
}

bool validate_search_witness(const SearchSpec& spec, const ThreeGraph& h, long long value) {
    if (h.order() != spec.n || !spec.family.admits(h)) return false;
    if (spec.require_non_3partite && three_partition(h)) return false;
    long long v = spec.mode == SearchMode::MaxEdges ? static_cast<long long>(h.size()) : degree_profile(h).min_degree;
    return v == value;
}

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::Vacuous: return "vacuous";
    case Verdict::Consistent: return "consistent";
    case Verdict::Counterexample: return "COUNTEREXAMPLE";
    }
    return "?";
}

TheoremCheck check_main_theorem(const ThreeGraph& h) {
    TheoremCheck c;
    const long long n = h.order();
    c.min_degree = degree_profile(h).min_degree;
    c.f5_free = !find_F5(h).has_value();
    c.cancellative = c.f5_free && !find_K4_3minus(h).has_value();
    if (!c.f5_free) {
        c.reason = "contains F5";
        return c;
    }
    if (45LL * c.min_degree <= 4 * n * n) {
        c.reason = "min degree " + std::to_string(c.min_degree) + " is not above 4n^2/45";
        return c;
    }
    if (!c.cancellative && n < kLargeOrderHypothesis) {
        c.reason = "hypothesis out of range: F5-free but not K4^{3-}-free, and n < " + std::to_string(kLargeOrderHypothesis);
        return c;
    }
    c.partition = three_partition(h);
    if (c.partition) {
        c.verdict = Verdict::Consistent;
        c.reason = "degree hypothesis holds and H is 3-partite";
    } else {
        c.verdict = Verdict::Counterexample;
        c.reason = "degree hypothesis holds but H is not 3-partite";
    }
    return c;
}

namespace {

void walk(const TripleSpace& space, const Node& node, bool canonical, const ForbiddenFamily& family,
          const std::function<bool(const ThreeGraph&)>& predicate, const std::function<bool(const ThreeGraph&)>& visit,
          bool& stop) {
    for (EdgeMask m = node.addable; m && !stop; m &= m - 1) {
        int t = std::countr_zero(m);
        if (space.creates_forbidden(node.mask, t, family)) continue;
        Node c;
        c.mask = node.mask | bit(t);
        c.last = t;
        c.addable = (t + 1 >= 64) ? 0 : node.addable & ~((EdgeMask{1} << (t + 1)) - 1);
        if (canonical && !space.is_canonical(c.mask)) continue;
        ThreeGraph g = space.graph(c.mask);
        if ((!predicate || predicate(g)) && !visit(g)) {
            stop = true;
            return;
        }
        walk(space, c, canonical, family, predicate, visit, stop);
    }
}

}  // namespace

void enumerate(int n, const std::function<bool(const ThreeGraph&)>& predicate, bool canonical,
               const std::function<bool(const ThreeGraph&)>& visit, const ForbiddenFamily& family) {
    if (n > 7) throw Error(ErrorKind::SizeLimit, "enumeration limited to n <= 7");
    TripleSpace space(n);
    Node root;
    int T = space.triples();
    root.addable = (EdgeMask{1} << T) - 1;
    ThreeGraph empty = space.graph(0);
    if ((!predicate || predicate(empty)) && !visit(empty)) return;
    bool stop = false;
    walk(space, root, canonical, family, predicate, visit, stop);
}

std::vector<ThreeGraph> enumerate_all(int n, const std::function<bool(const ThreeGraph&)>& predicate, bool canonical,
                                      const ForbiddenFamily& family) {
    std::vector<ThreeGraph> out;
    enumerate(n, predicate, canonical, [&](const ThreeGraph& g) {
        out.push_back(g);
        return true;
    }, family);
    return out;
}

}  // namespace f5lab
