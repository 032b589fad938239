#pragma once

#include "f5lab/search.hpp"
#include "f5lab/three_graph.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace f5lab {

/// Seeded generators for fuzzing and property checks. Same seed, same corpus.
struct CorpusSpec {
    int count = 1000;
    int min_n = 4;
    int max_n = 8;
    std::uint64_t seed = 1;
};

double uniform01(std::mt19937_64& rng);
int uniform_int(std::mt19937_64& rng, int lo, int hi);  ///< inclusive

/// Each triple independently with probability p (n <= 8).
ThreeGraph random_three_graph(int n, double p, std::mt19937_64& rng);

/// Random greedy family-free 3-graph: triples in random order, each kept with probability keep when allowed.
ThreeGraph random_free_three_graph(int n, const ForbiddenFamily& family, double keep, std::mt19937_64& rng);

/// Random relabelling of a wheel blowup or a 3-partite subgraph, sized to n.
ThreeGraph random_structured_cancellative(int n, std::mt19937_64& rng);

ThreeGraph relabel(const ThreeGraph& h, const std::vector<int>& perm);

/// Family-free instances: random greedy ones plus every fifth a structured cancellative one
/// (wheel blowups and 3-partite graphs avoid all three patterns).
std::vector<ThreeGraph> free_corpus(const ForbiddenFamily& family, const CorpusSpec& spec);

/// Unconstrained random 3-graphs with edge density drawn per instance.
std::vector<ThreeGraph> random_corpus(const CorpusSpec& spec);

}  // namespace f5lab
