#include "oracles.hpp"

#include "f5lab/construct.hpp"
#include "f5lab/detect.hpp"
#include "f5lab/error.hpp"

#include <doctest.h>

#include <algorithm>

using namespace f5lab;

namespace {

ThreeGraph f5() { return build_three_graph(5, {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}}); }
ThreeGraph k4minus() { return build_three_graph(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}); }

const FactReport& report(const std::vector<FactReport>& all, std::string_view name) {
    return *std::find_if(all.begin(), all.end(), [&](const FactReport& r) { return r.fact == name; });
}

}  // namespace

TEST_SUITE("detect") {

TEST_CASE("F5 detector") {
    auto w = find_F5(f5());
    REQUIRE(w.has_value());
    CHECK(w->kind == Witness::Kind::F5);
    CHECK(validate_witness(f5(), *w));
    for (int n = 0; n <= 12; ++n) CHECK_FALSE(find_F5(balanced_turan(n)).has_value());
    CHECK_FALSE(find_F5(wheel_blowup(2, {1, 1, 1, 1, 1})).has_value());
    CHECK_FALSE(find_F5(k4minus()).has_value());
}

TEST_CASE("K4 minus detector") {
    auto w = find_K4_3minus(k4minus());
    REQUIRE(w.has_value());
    CHECK(validate_witness(k4minus(), *w));
    CHECK(w->vertices[0] == 0);  // apex
    for (int n = 0; n <= 12; ++n) CHECK_FALSE(find_K4_3minus(balanced_turan(n)).has_value());
    CHECK_FALSE(find_K4_3minus(f5()).has_value());
}

TEST_CASE("cancellative") {
    CHECK(is_cancellative(balanced_turan(6)));
    CHECK_FALSE(is_cancellative(k4minus()));
    CHECK_FALSE(is_cancellative(f5()));
    CHECK(is_cancellative(wheel_blowup(3, {1, 2, 1, 2, 1})));
}

TEST_CASE("K4 in the shadow") {
    auto w = find_K4_shadow(f5());
    REQUIRE(w.has_value());
    CHECK(validate_witness(f5(), *w));
    auto vs = w->vertices;
    std::sort(vs.begin(), vs.end());
    CHECK(vs == std::vector<int>{0, 1, 2, 3});
    CHECK_FALSE(find_K4_shadow(balanced_turan(9)).has_value());
}

TEST_CASE("clique finder") {
    auto k = find_clique(shadow(f5()), 4);
    REQUIRE(k.has_value());
    CHECK(validate_witness(shadow(f5()), *k));
    CHECK_FALSE(find_clique(shadow(balanced_turan(9)), 4).has_value());
    auto one = find_clique(cycle_graph(5), 1);
    REQUIRE(one.has_value());
    CHECK(one->vertices.size() == 1);
    CHECK(find_clique(complete_graph(7), 7).has_value());
    CHECK_FALSE(find_clique(complete_graph(6), 7).has_value());
    CHECK_THROWS_AS(find_clique(cycle_graph(5), 0), Error);
}

TEST_CASE("homomorphisms") {
    auto id = find_homomorphism(cycle_graph(5), gamma_graph(2));
    REQUIRE(id.has_value());
    CHECK(validate_homomorphism(cycle_graph(5), gamma_graph(2), *id));

    // Balanced blowup of C5 with classes {2i, 2i+1}.
    std::vector<Pair> edges;
    for (int i = 0; i < 5; ++i)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                int u = 2 * i + a, v = 2 * ((i + 1) % 5) + b;
                edges.push_back({std::min(u, v), std::max(u, v)});
            }
    Graph blow(10, edges);
    auto h = find_homomorphism(blow, cycle_graph(5));
    REQUIRE(h.has_value());
    CHECK(validate_homomorphism(blow, cycle_graph(5), *h));

    CHECK_FALSE(find_homomorphism(complete_graph(3), cycle_graph(5)).has_value());
    CHECK_FALSE(find_homomorphism(cycle_graph(5), complete_graph(2)).has_value());
}

TEST_CASE("link facts on clean hosts") {
    for (const auto& h : {wheel_blowup(3, {1, 1, 1, 1, 1}), build_three_graph(3, {{0, 1, 2}}), balanced_turan(8)}) {
        auto reports = audit_link_facts(h);
        CHECK(reports.size() == 5);
        for (const auto& r : reports) {
            CHECK_MESSAGE(r.holds, r.fact);
            CHECK(r.violations.empty());
        }
    }
}

TEST_CASE("link facts flag the forbidden patterns") {
    auto reports = audit_link_facts(k4minus());
    const auto& tri = report(reports, fact::kLinkTriangleFree);
    CHECK_FALSE(tri.holds);
    for (const auto& r : reports) {
        CHECK(r.holds == r.violations.empty());
        for (const auto& v : r.violations) CHECK(revalidate_violation(k4minus(), r, v));
    }

    auto f = audit_link_facts(f5());
    bool any = std::any_of(f.begin(), f.end(), [](const FactReport& r) { return !r.holds; });
    CHECK(any);
    CHECK_FALSE(report(f, fact::kPairNeighborhoodIndependent).holds);
    for (const auto& r : f)
        for (const auto& v : r.violations) CHECK(revalidate_violation(f5(), r, v));
}

TEST_CASE("link restriction bound") {
    auto t = balanced_turan(6);
    auto full = link_restriction_bound(t, 0, VertexSet::full(6));
    CHECK(full.lhs == 4);
    CHECK(full.rhs == 4);
    auto none = link_restriction_bound(t, 0, VertexSet(6));
    CHECK(none.lhs == 0);
    CHECK(none.rhs == 4 - 2 * 6);
    VertexSet s = VertexSet::full(6);
    s.erase(5);
    auto part = link_restriction_bound(t, 0, s);
    CHECK(part.rhs == 2);
    CHECK(part.lhs == 2);  // {2,4}, {3,4}
}

}  // TEST_SUITE
