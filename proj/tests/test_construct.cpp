#include "oracles.hpp"

#include "f5lab/construct.hpp"
#include "f5lab/detect.hpp"
#include "f5lab/error.hpp"

#include <doctest.h>

#include <random>

using namespace f5lab;

namespace {

// Direct degree count of the wheel blowup, independent of the closed form.
long long brute_wheel_min_degree(int x, const std::array<int, 5>& y) {
    return oracle::min_degree(wheel_blowup(x, y));
}

long long closed_form(int x, const std::array<int, 5>& y) {
    long long rim = 0;
    for (int i = 0; i < 5; ++i) rim += static_cast<long long>(y[i]) * y[(i + 1) % 5];
    long long best = rim;
    for (int i = 0; i < 5; ++i) best = std::min(best, static_cast<long long>(x) * (y[(i + 4) % 5] + y[(i + 1) % 5]));
    return best;
}

}  // namespace

TEST_SUITE("construct") {

TEST_CASE("balanced Turan 3-graph") {
    CHECK(balanced_turan(6).size() == 8);
    CHECK(balanced_turan(7).size() == 12);
    CHECK(balanced_turan(5).size() == 4);
    CHECK(balanced_turan(0).size() == 0);
    CHECK(turan_part_sizes(7) == std::array<int, 3>{3, 2, 2});
    for (int n = 0; n <= 12; ++n) {
        auto p = turan_part_sizes(n);
        CHECK(balanced_turan(n).size() == static_cast<std::size_t>(p[0] * p[1] * p[2]));
    }
}

TEST_CASE("wheel blowups") {
    auto g = wheel_blowup(5, {2, 2, 2, 2, 2});
    CHECK(g.order() == 15);
    CHECK(g.size() == 100);
    CHECK(oracle::min_degree(g) == 20);
    CHECK(wheel_min_degree_formula(5, {2, 2, 2, 2, 2}) == 20);
    CHECK_FALSE(three_partition(g).has_value());
    CHECK(is_cancellative(g));

    auto w = wheel_blowup(1, {1, 1, 1, 1, 1});
    CHECK(w.size() == 5);
    CHECK(oracle::min_degree(w) == 2);
    CHECK(wheel_blowup(0, {1, 1, 1, 1, 1}).size() == 0);
}

TEST_CASE("wheel blowup min degree matches the closed form on random sizes") {
    std::mt19937_64 rng(20261018);
    std::uniform_int_distribution<int> size(0, 6);
    for (int trial = 0; trial < 200; ++trial) {
        int x = size(rng);
        std::array<int, 5> y{};
        for (auto& v : y) v = size(rng);
        bool nonempty = x > 0 && std::all_of(y.begin(), y.end(), [](int v) { return v > 0; });
        if (!nonempty) continue;
        CHECK(brute_wheel_min_degree(x, y) == closed_form(x, y));
        CHECK(wheel_min_degree_formula(x, y) == closed_form(x, y));
    }
}

TEST_CASE("uniform blowup") {
    auto f5 = build_three_graph(5, {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}});
    CHECK(uniform_blowup(f5, 1) == f5);
    auto t = uniform_blowup(balanced_turan(3), 2);
    CHECK(t.order() == 6);
    CHECK(t.size() == 8);
    CHECK(three_partition(t).has_value());
    auto w = uniform_blowup(wheel_blowup(1, {1, 1, 1, 1, 1}), 2);
    CHECK(oracle::min_degree(w) == 8);
    CHECK_THROWS_AS(uniform_blowup(f5, 0), Error);
}

TEST_CASE("gamma graphs") {
    CHECK(gamma_graph(2) == cycle_graph(5));
    Graph g3 = gamma_graph(3);
    CHECK(g3.order() == 8);
    CHECK(g3.is_regular());
    CHECK(g3.min_degree() == 3);
    CHECK(g3.adjacent(0, 4));
    Graph g5 = gamma_graph(5);
    CHECK(g5.order() == 14);
    CHECK(g5.min_degree() == 5);
    CHECK(g5.adjacent(0, 7));
    for (int d = 1; d <= 20; ++d) {
        Graph g = gamma_graph(d);
        CHECK(g.order() == 3 * d - 1);
        CHECK(g.is_regular());
        CHECK(g.min_degree() == d);
    }
    CHECK_THROWS_AS(gamma_graph(0), Error);
}

TEST_CASE("smaller gamma graphs map into larger ones") {
    for (int d = 1; d <= 6; ++d)
        for (int i = 1; i <= d; ++i) {
            auto h = find_homomorphism(gamma_graph(i), gamma_graph(d));
            REQUIRE_MESSAGE(h.has_value(), "Gamma_" << i << " -> Gamma_" << d);
            CHECK(validate_homomorphism(gamma_graph(i), gamma_graph(d), *h));
        }
}

TEST_CASE("seven-part witness at n = 58") {
    TightnessSizes sizes{{14, 14, 14}, {2, 2, 2}};
    auto layout = tightness_layout(58, sizes);
    auto h = tightness_witness(layout);
    CHECK(h.order() == 58);
    CHECK(find_K4_3minus(h).has_value());
    auto k4 = find_K4_shadow(h);
    REQUIRE(k4.has_value());
    CHECK(validate_witness(h, *k4));

    // |E4| = 3*16^2 - 3*14^2; vertex 4 also sits in three expansion triples.
    CHECK(layout.link_classes[3].size() == 180);
    Graph l4 = link(h, layout.core[3]);
    CHECK(l4.size() == 183);
    auto prof = degree_profile(h);
    CHECK(prof.min_degree == 183);
    CHECK(oracle::min_degree(h) == 183);
    CHECK(static_cast<double>(prof.min_degree) / (58.0 * 58.0) >= 0.0535);
}

TEST_CASE("seven-part witness contains F5 through vertex 4 once a Z block is nonempty") {
    // {4, z1, y2}, {4, z1, y3} come from L(4) = E4 and {1, y2, y3} from L(1) = E1.
    auto layout = tightness_layout(58, TightnessSizes{{14, 14, 14}, {2, 2, 2}});
    auto h = tightness_witness(layout);
    int four = layout.core[3], one = layout.core[0];
    int z1 = layout.z_blocks[0][0], y2 = layout.y_blocks[1][0], y3 = layout.y_blocks[2][0];
    CHECK(h.has_edge(four, z1, y2));
    CHECK(h.has_edge(four, z1, y3));
    CHECK(h.has_edge(one, y2, y3));
    CHECK(oracle::has_F5(h));
    auto w = find_F5(h);
    REQUIRE(w.has_value());
    CHECK(validate_witness(h, *w));

    for (int n : {13, 25, 37, 58}) {
        auto l = tightness_layout(n);
        auto g = tightness_witness(l);
        bool z_empty = l.sizes.z == std::array<int, 3>{0, 0, 0};
        CHECK(find_F5(g).has_value() == !z_empty);
        CHECK(find_K4_shadow(g).has_value());
    }
}

TEST_CASE("seven-part witness: links of Y and Z vertices restricted to Y u Z") {
    for (int n : {13, 25, 37, 58}) {
        auto layout = tightness_layout(n);
        auto h = tightness_witness(layout);
        VertexSet yz(n);
        for (int i = 0; i < 3; ++i) {
            for (int v : layout.y_blocks[static_cast<std::size_t>(i)]) yz.insert(v);
            for (int v : layout.z_blocks[static_cast<std::size_t>(i)]) yz.insert(v);
        }
        for (int i = 0; i < 3; ++i) {
            auto cls = layout.link_classes[static_cast<std::size_t>(i)];
            std::sort(cls.begin(), cls.end());
            for (int v : layout.z_blocks[static_cast<std::size_t>(i)]) {
                CHECK(link(h, v, yz).edges() == cls);
                CHECK(layout.assigned_class[static_cast<std::size_t>(v)] == i);
            }
            for (int v : layout.y_blocks[static_cast<std::size_t>(i)]) {
                Graph l = link(h, v, yz);
                for (const auto& [a, b] : cls) CHECK(l.adjacent(a, b));
                CHECK(layout.assigned_class[static_cast<std::size_t>(v)] == i);
            }
        }
    }
}

TEST_CASE("seven-part witness sizing") {
    auto h = tightness_witness(13, TightnessSizes{{1, 1, 1}, {0, 0, 0}});
    CHECK(h.order() == 13);
    CHECK_FALSE(find_F5(h).has_value());
    try {
        tightness_witness(20, TightnessSizes{{1, 1, 1}, {1, 1, 1}});
        FAIL("expected BadPartition");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BadPartition);
    }
    CHECK_THROWS_AS(tightness_layout(12), Error);
}

}  // TEST_SUITE
