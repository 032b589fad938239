#include "f5lab/construct.hpp"

#include "f5lab/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace f5lab {

std::array<int, 3> turan_part_sizes(int n) {
    if (n < 0) throw Error(ErrorKind::OutOfRange, "negative vertex count");
    std::array<int, 3> s{};
    for (int i = 0; i < 3; ++i) s[static_cast<std::size_t>(i)] = n / 3 + (i < n % 3 ? 1 : 0);
    return s;
}

ThreeGraph balanced_turan(int n) {
    auto s = turan_part_sizes(n);
    int b1 = s[0], b2 = s[0] + s[1];
    std::vector<Triple> edges;
    for (int a = 0; a < b1; ++a)
        for (int b = b1; b < b2; ++b)
            for (int c = b2; c < n; ++c) edges.push_back({a, b, c});
    return build_three_graph(n, edges);
}

ThreeGraph wheel_blowup(int x, const std::array<int, 5>& y) {
    if (x < 0) throw Error(ErrorKind::OutOfRange, "negative hub class");
    for (int yi : y)
        if (yi < 0) throw Error(ErrorKind::OutOfRange, "negative rim class");
    std::array<int, 5> first{};
    first[0] = x;
    for (std::size_t i = 1; i < 5; ++i) first[i] = first[i - 1] + y[i - 1];
    int n = first[4] + y[4];
    std::vector<Triple> edges;
    for (std::size_t i = 0; i < 5; ++i) {
        std::size_t j = (i + 1) % 5;
        for (int u = 0; u < x; ++u)
            for (int a = 0; a < y[i]; ++a)
                for (int b = 0; b < y[j]; ++b) edges.push_back(sorted_triple(u, first[i] + a, first[j] + b));
    }
    return build_three_graph(n, edges);
}

long long wheel_min_degree_formula(int x, const std::array<int, 5>& y) {
    long long best = 0;
    for (std::size_t i = 0; i < 5; ++i) best += static_cast<long long>(y[i]) * y[(i + 1) % 5];
    for (std::size_t i = 0; i < 5; ++i)
        best = std::min(best, static_cast<long long>(x) * (y[(i + 4) % 5] + y[(i + 1) % 5]));
    return best;
}

ThreeGraph uniform_blowup(const ThreeGraph& h, int m) {
    if (m < 1) throw Error(ErrorKind::PreconditionViolated, "blowup factor must be at least 1");
    std::vector<Triple> edges;
    edges.reserve(h.size() * static_cast<std::size_t>(m * m * m));
    for (const auto& [a, b, c] : h.edges())
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < m; ++k) edges.push_back({a * m + i, b * m + j, c * m + k});
    return build_three_graph(h.order() * m, edges);
}

Graph gamma_graph(int d) {
    if (d < 1) throw Error(ErrorKind::PreconditionViolated, "gamma graph needs d >= 1");
    int m = 3 * d - 1;
    int top = 3 * ((d + 1) / 2) - 2;
    std::vector<Pair> edges;
    for (int i = 0; i < m; ++i)
        for (int off = 1; off <= top; off += 3) {
            int j = (i + off) % m;
            if (i != j) edges.push_back({std::min(i, j), std::max(i, j)});
        }
    Graph g(m, edges);
    if (!g.is_regular() || g.degree(0) != d)
        throw Error(ErrorKind::NotRegular, "gamma graph for d=" + std::to_string(d) + " is not d-regular");
    return g;
}

TightnessSizes default_tightness_sizes(int n) {
    if (n < 13) throw Error(ErrorKind::PreconditionViolated, "tightness witness needs n >= 13");
    TightnessSizes s;
    auto t = turan_part_sizes(n - 10);
    int y = static_cast<int>(std::lround((n - 10) / std::sqrt(12.0)));
    for (std::size_t i = 0; i < 3; ++i) {
        s.y[i] = std::min(t[i], y);
        s.z[i] = t[i] - s.y[i];
    }
    return s;
}

TightnessLayout tightness_layout(int n, const std::optional<TightnessSizes>& sizes) {
    if (n < 13) throw Error(ErrorKind::PreconditionViolated, "tightness witness needs n >= 13");
    TightnessLayout L;
    L.n = n;
    L.sizes = sizes ? *sizes : default_tightness_sizes(n);
    int total = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        if (L.sizes.y[i] < 0 || L.sizes.z[i] < 0) throw Error(ErrorKind::BadPartition, "negative block size");
        total += L.sizes.y[i] + L.sizes.z[i];
    }
    if (total != n - 10)
        throw Error(ErrorKind::BadPartition,
                    "blocks sum to " + std::to_string(total) + ", expected " + std::to_string(n - 10));

    for (int i = 0; i < 4; ++i) L.core[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < 6; ++i) L.expansion[static_cast<std::size_t>(i)] = 4 + i;
    int next = 10;
    for (std::size_t i = 0; i < 3; ++i)
        for (int k = 0; k < L.sizes.y[i]; ++k) L.y_blocks[i].push_back(next++);
    for (std::size_t i = 0; i < 3; ++i)
        for (int k = 0; k < L.sizes.z[i]; ++k) L.z_blocks[i].push_back(next++);

    // Pairs between block i and block j, split by whether both ends lie in Y.
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            std::size_t own = 3 - i - j;  // E_{own+1} collects the Y_i x Y_j pairs
            auto add = [&](const std::vector<int>& a, const std::vector<int>& b, std::size_t cls) {
                for (int u : a)
                    for (int v : b) L.link_classes[cls].push_back({std::min(u, v), std::max(u, v)});
            };
            add(L.y_blocks[i], L.y_blocks[j], own);
            add(L.y_blocks[i], L.z_blocks[j], 3);
            add(L.z_blocks[i], L.y_blocks[j], 3);
            add(L.z_blocks[i], L.z_blocks[j], 3);
        }

    L.assigned_class.assign(static_cast<std::size_t>(n), -1);
    auto assign = [&](int v, int cls) { L.assigned_class[static_cast<std::size_t>(v)] = cls; };
    for (std::size_t i = 0; i < 3; ++i) {
        for (int v : L.y_blocks[i]) assign(v, static_cast<int>(i));
        for (int v : L.z_blocks[i]) assign(v, static_cast<int>(i));
        assign(L.core[i], static_cast<int>(i));
    }
    // x_23, x_24, x_34 -> E1; x_13, x_14 -> E2; x_12 -> E3.
    assign(L.expansion[3], 0);
    assign(L.expansion[4], 0);
    assign(L.expansion[5], 0);
    assign(L.expansion[1], 1);
    assign(L.expansion[2], 1);
    assign(L.expansion[0], 2);
    assign(L.core[3], 3);
    return L;
}

ThreeGraph tightness_witness(const TightnessLayout& L) {
    std::vector<Triple> edges;
    const std::array<Pair, 6> core_pairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    for (std::size_t k = 0; k < 6; ++k)
        edges.push_back(sorted_triple(L.core[static_cast<std::size_t>(core_pairs[k][0])],
                                      L.core[static_cast<std::size_t>(core_pairs[k][1])], L.expansion[k]));
    for (int v = 0; v < L.n; ++v) {
        int cls = L.assigned_class[static_cast<std::size_t>(v)];
        if (cls < 0) continue;
        for (const auto& [a, b] : L.link_classes[static_cast<std::size_t>(cls)]) edges.push_back(sorted_triple(v, a, b));
    }
    return build_three_graph(L.n, edges);
}

ThreeGraph tightness_witness(int n, const std::optional<TightnessSizes>& sizes) {
    return tightness_witness(tightness_layout(n, sizes));
}

}  // namespace f5lab
