#include "f5lab/corpus.hpp"

#include "f5lab/construct.hpp"
#include "f5lab/error.hpp"

#include <algorithm>
#include <numeric>

namespace f5lab {

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(rng() % span);
}

namespace {

void shuffle(std::vector<int>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(rng() % i)]);
}

std::vector<int> random_perm(int n, std::mt19937_64& rng) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    shuffle(p, rng);
    return p;
}

}  // namespace

ThreeGraph random_three_graph(int n, double p, std::mt19937_64& rng) {
    TripleSpace space(n);
    EdgeMask mask = 0;
    for (int t = 0; t < space.triples(); ++t)
        if (uniform01(rng) < p) mask |= EdgeMask{1} << t;
    return space.graph(mask);
}

ThreeGraph random_free_three_graph(int n, const ForbiddenFamily& family, double keep, std::mt19937_64& rng) {
    TripleSpace space(n);
    std::vector<int> order(static_cast<std::size_t>(space.triples()));
    std::iota(order.begin(), order.end(), 0);
    shuffle(order, rng);
    EdgeMask mask = 0;
    for (int t : order)
        if (uniform01(rng) < keep && !space.creates_forbidden(mask, t, family)) mask |= EdgeMask{1} << t;
    return space.graph(mask);
}

ThreeGraph relabel(const ThreeGraph& h, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != h.order()) throw Error(ErrorKind::PreconditionViolated, "permutation size");
    std::vector<Triple> edges;
    for (const auto& [a, b, c] : h.edges())
        edges.push_back({perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)], perm[static_cast<std::size_t>(c)]});
    return build_three_graph(h.order(), edges);
}

ThreeGraph random_structured_cancellative(int n, std::mt19937_64& rng) {
    ThreeGraph base;
    if (n >= 6 && uniform01(rng) < 0.5) {
        // Wheel blowup: every class nonempty, the n - 6 spare vertices spread at random.
        int x = 1;
        std::array<int, 5> y{1, 1, 1, 1, 1};
        for (int k = 0; k < n - 6; ++k) {
            int c = uniform_int(rng, 0, 5);
            if (c == 0) ++x;
            else ++y[static_cast<std::size_t>(c - 1)];
        }
        base = wheel_blowup(x, y);
    } else {
        // Random subgraph of a complete 3-partite 3-graph with random part sizes.
        std::vector<int> part(static_cast<std::size_t>(n));
        for (auto& p : part) p = uniform_int(rng, 0, 2);
        double keep = 0.4 + 0.6 * uniform01(rng);
        std::vector<Triple> edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) {
                    auto pa = part[static_cast<std::size_t>(a)], pb = part[static_cast<std::size_t>(b)],
                         pc = part[static_cast<std::size_t>(c)];
                    if (pa != pb && pb != pc && pa != pc && uniform01(rng) < keep) edges.push_back({a, b, c});
                }
        base = build_three_graph(n, edges);
    }
    return relabel(base, random_perm(n, rng));
}

std::vector<ThreeGraph> free_corpus(const ForbiddenFamily& family, const CorpusSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    std::vector<ThreeGraph> out;
    out.reserve(static_cast<std::size_t>(spec.count));
    for (int i = 0; i < spec.count; ++i) {
        int n = uniform_int(rng, spec.min_n, spec.max_n);
        if (i % 5 == 4) {
            out.push_back(random_structured_cancellative(n, rng));
        } else {
            double keep = 0.3 + 0.7 * uniform01(rng);
            out.push_back(random_free_three_graph(n, family, keep, rng));
        }
    }
    return out;
}

std::vector<ThreeGraph> random_corpus(const CorpusSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    std::vector<ThreeGraph> out;
    out.reserve(static_cast<std::size_t>(spec.count));
    for (int i = 0; i < spec.count; ++i) {
        int n = uniform_int(rng, spec.min_n, spec.max_n);
        out.push_back(random_three_graph(n, 0.05 + 0.6 * uniform01(rng), rng));
    }
    return out;
}

}  // namespace f5lab
