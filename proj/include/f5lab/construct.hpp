#pragma once

#include "f5lab/graph.hpp"
#include "f5lab/three_graph.hpp"

#include <array>
#include <optional>
#include <vector>

namespace f5lab {

/// Part sizes of T3(n,3): contiguous blocks, larger parts first.
std::array<int, 3> turan_part_sizes(int n);

/// Balanced complete 3-partite 3-graph.
ThreeGraph balanced_turan(int n);

/// Blowup W5[x, y1..y5] of the 3-uniform 5-wheel. Vertices: hub class, then the Y1..Y5 classes.
ThreeGraph wheel_blowup(int x, const std::array<int, 5>& y);

/// min{ sum y_i y_{i+1}, x (y_{i-1} + y_{i+1}) } with indices mod 5.
long long wheel_min_degree_formula(int x, const std::array<int, 5>& y);

/// H[m]: vertex v becomes v*m .. v*m + m - 1.
ThreeGraph uniform_blowup(const ThreeGraph& h, int m);

/// Circulant on 3d-1 vertices with offsets 1, 4, ..., 3*ceil(d/2) - 2. d = 1 gives K2.
Graph gamma_graph(int d);

struct TightnessSizes {
    std::array<int, 3> y{};
    std::array<int, 3> z{};
};

/// Balanced split of n-10 into three blocks, each with |Y| = round((n-10)/sqrt(12)) capped by the block.
TightnessSizes default_tightness_sizes(int n);

/// Vertex bookkeeping for the seven-part F5-free witness with a K4 in its shadow.
struct TightnessLayout {
    int n = 0;
    TightnessSizes sizes;
    /// Indices of the four core vertices "1".."4".
    std::array<int, 4> core{};
    /// x_12, x_13, x_14, x_23, x_24, x_34.
    std::array<int, 6> expansion{};
    std::array<std::vector<int>, 3> y_blocks;
    std::array<std::vector<int>, 3> z_blocks;
    /// E1..E4: a partition of the complete 3-partite pair set on the Y_i u Z_i blocks.
    std::array<std::vector<Pair>, 4> link_classes;
    /// Which E_k each vertex is attached to (0..3), or -1.
    std::vector<int> assigned_class;
};

/// Throws PreconditionViolated for n < 13, BadPartition if sizes do not sum to n - 10.
TightnessLayout tightness_layout(int n, const std::optional<TightnessSizes>& sizes = std::nullopt);
ThreeGraph tightness_witness(const TightnessLayout& layout);
ThreeGraph tightness_witness(int n, const std::optional<TightnessSizes>& sizes = std::nullopt);

}  // namespace f5lab
