#pragma once

#include "f5lab/three_graph.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace f5lab {

/// Subset of {F5, K4^{3-}, K4 in the shadow}.
struct ForbiddenFamily {
    bool f5 = false;
    bool k4minus = false;
    bool k4shadow = false;

    static ForbiddenFamily cancellative() { return {true, true, false}; }
    /// Comma list of f5, k4minus, k4shadow; empty means no restriction.
    static ForbiddenFamily parse(std::string_view text);

    bool empty() const { return !f5 && !k4minus && !k4shadow; }
    std::string to_string() const;
    /// Detector-based membership test.
    bool admits(const ThreeGraph& h) const;
};

using EdgeMask = std::uint64_t;

/// All triples of an n-vertex set (n <= 8), indexed lexicographically, with the
/// forbidden-pattern copies through each triple precomputed.
class TripleSpace {
public:
    explicit TripleSpace(int n);

    int order() const noexcept { return n_; }
    int triples() const noexcept { return static_cast<int>(triples_.size()); }
    const Triple& triple(int t) const { return triples_[static_cast<std::size_t>(t)]; }
    int index(int a, int b, int c) const;

    ThreeGraph graph(EdgeMask mask) const;
    EdgeMask mask(const ThreeGraph& h) const;

    /// True when adding t to mask creates a copy of a forbidden pattern through t.
    bool creates_forbidden(EdgeMask mask, int t, const ForbiddenFamily& family) const;
    /// Triples that become forbidden once t joins mask (pairwise patterns only).
    EdgeMask newly_blocked(EdgeMask mask, int t, const ForbiddenFamily& family) const;

    /// Per-vertex degrees of the triples in mask.
    std::array<int, 8> degrees(EdgeMask mask) const;
    /// Vertex incidence of each triple.
    EdgeMask triples_at(int v) const { return at_[static_cast<std::size_t>(v)]; }

    /// Largest image of mask over all vertex permutations, with triple 0 as the most significant bit.
    EdgeMask canonical_form(EdgeMask mask) const;
    bool is_canonical(EdgeMask mask) const;

private:
    EdgeMask image(EdgeMask mask, std::size_t perm) const;
    /// Bit order in which triple 0 is most significant.
    EdgeMask key(EdgeMask mask) const;

    int n_ = 0;
    std::vector<Triple> triples_;
    std::vector<int> index_;  // a*n*n + b*n + c -> triple index
    std::array<EdgeMask, 8> at_{};
    // partner[t][a]: triples b such that {t, a, b} is a copy of the pattern.
    std::vector<std::vector<EdgeMask>> f5_partner_;
    std::vector<std::vector<EdgeMask>> k4m_partner_;
    std::vector<EdgeMask> f5_reach_;   // OR over a of the a with a nonempty partner set
    std::vector<EdgeMask> k4m_reach_;
    std::vector<std::vector<std::uint8_t>> perm_image_;  // perm -> triple -> triple
};

enum class SearchMode { MaxEdges, MaxMinDegree };

struct SearchSpec {
    int n = 0;
    ForbiddenFamily family;
    SearchMode mode = SearchMode::MaxEdges;
    bool require_non_3partite = false;
    bool isomorphism_reduction = true;
    /// Node limit, 0 for none.
    std::uint64_t budget = 0;
    int threads = 0;
    /// n caps: with reduction / without reduction and a nonempty family.
    int cap_reduced = 8;
    int cap_labeled = 7;
};

struct SearchResult {
    /// Empty when no 3-graph meets the constraints.
    std::optional<long long> optimum;
    std::optional<ThreeGraph> witness;
    std::uint64_t nodes = 0;
    bool exhaustive = false;
};

/// Throws SizeLimit when spec.n exceeds the configured cap.
SearchResult run_search(const SearchSpec& spec);

/// Max edges among family-free n-vertex 3-graphs.
SearchResult extremal_number(int n, const ForbiddenFamily& family, bool reduction = true, int threads = 0);

/// Max min-degree under spec (spec.mode is forced to MaxMinDegree).
SearchResult max_min_degree(SearchSpec spec);

/// Re-checks that a witness meets the spec and attains value.
bool validate_search_witness(const SearchSpec& spec, const ThreeGraph& h, long long value);

enum class Verdict { Vacuous, Consistent, Counterexample };
std::string_view to_string(Verdict v);

struct TheoremCheck {
    Verdict verdict = Verdict::Vacuous;
    std::string reason;
    int min_degree = 0;
    bool f5_free = false;
    bool cancellative = false;
    std::optional<Witness> partition;
};

/// Min degree above 4n^2/45 forces 3-partiteness: asserted for cancellative H, reported
/// as out of range for F5-free H below the large-n hypothesis.
TheoremCheck check_main_theorem(const ThreeGraph& h);

inline constexpr int kLargeOrderHypothesis = 5000;

/// Calls visit on each 3-graph on n vertices satisfying the predicate; one per isomorphism class when canonical.
/// The family (hereditary) prunes the traversal. visit returns false to stop early.
void enumerate(int n, const std::function<bool(const ThreeGraph&)>& predicate, bool canonical,
               const std::function<bool(const ThreeGraph&)>& visit, const ForbiddenFamily& family = {});

std::vector<ThreeGraph> enumerate_all(int n, const std::function<bool(const ThreeGraph&)>& predicate, bool canonical,
                                      const ForbiddenFamily& family = {});

}  // namespace f5lab
