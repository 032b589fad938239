#pragma once

#include "f5lab/graph.hpp"
#include "f5lab/three_graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace f5lab {

/// F5 = {abc, abd, cde}. Witness vertices are [a, b, c, d, e].
std::optional<Witness> find_F5(const ThreeGraph& h);

/// K4^{3-} = {abc, abd, acd}. Witness vertices are [a, b, c, d] with a the apex.
std::optional<Witness> find_K4_3minus(const ThreeGraph& h);

/// A K4 inside the shadow, with one covering edge per pair.
std::optional<Witness> find_K4_shadow(const ThreeGraph& h);

/// No edges A != B, C with A xor B inside C. Computed straight from the edge list.
bool is_cancellative(const ThreeGraph& h);

inline constexpr int kDefaultCliqueCap = 256;
inline constexpr int kDefaultHomomorphismCap = 512;

std::optional<Witness> find_clique(const Graph& g, int k, int cap = kDefaultCliqueCap);

/// Map V(g) -> V(pattern) sending edges to edges; backtracking with forward checking.
std::optional<Witness> find_homomorphism(const Graph& g, const Graph& pattern, int cap = kDefaultHomomorphismCap);

struct FactViolation {
    /// Vertex, pair or edge at which the clause was evaluated.
    std::vector<int> subject;
    /// F5 or K4minus copy that makes the clause fail.
    Witness witness;
};

struct FactReport {
    std::string fact;
    bool holds = true;
    std::vector<FactViolation> violations;
};

namespace fact {
inline constexpr const char* kLinkTriangleFree = "link-triangle-free";
inline constexpr const char* kPairNeighborhoodIndependent = "pair-neighborhood-independent";
inline constexpr const char* kAdjacentLinksDisjoint = "adjacent-links-disjoint";
inline constexpr const char* kEdgeLinksDisjoint = "edge-links-disjoint";
inline constexpr const char* kEdgeLinksTriangleSplit = "edge-links-triangle-split";
}  // namespace fact

/// Checks the link structure forced by forbidding K4^{3-} and F5:
///  - every link is triangle-free;
///  - N(uv) is independent for every shadow pair uv;
///  - L(u) and L(v) share no pair for every shadow pair uv;
///  - for every edge v1v2v3 and W = V \ {v1,v2,v3}, the L(vi, W) are pairwise edge-disjoint;
///  - any triangle in their union lies in one L(vi, W) or meets each of them once.
/// The first three presuppose a cancellative host, the last two only F5-freeness.
std::vector<FactReport> audit_link_facts(const ThreeGraph& h);

/// True when a reported violation still describes a real failure in h.
bool revalidate_violation(const ThreeGraph& h, const FactReport& report, const FactViolation& v);

struct LinkRestrictionBound {
    long long lhs = 0;  ///< |L(v, S)|
    long long rhs = 0;  ///< |L(v)| - alpha(H) * |V \ S|
};

LinkRestrictionBound link_restriction_bound(const ThreeGraph& h, int v, const VertexSet& s);

}  // namespace f5lab
