#include "oracles.hpp"

#include "f5lab/construct.hpp"
#include "f5lab/error.hpp"
#include "f5lab/io.hpp"
#include "f5lab/three_graph.hpp"

#include <doctest.h>

#include <sstream>

using namespace f5lab;

namespace {

ThreeGraph f5() { return build_three_graph(5, {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}}); }

ThreeGraph wheel() { return wheel_blowup(1, {1, 1, 1, 1, 1}); }

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::Parse;
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("vertex set basics") {
    VertexSet s(70, {0, 3, 64, 69});
    CHECK(s.count() == 4);
    CHECK(s.contains(64));
    CHECK_FALSE(s.contains(65));
    CHECK(s.first() == 0);
    CHECK(s.next(3) == 64);
    CHECK(s.next(69) == -1);
    s.erase(0);
    CHECK(s.members() == std::vector<int>{3, 64, 69});
    VertexSet c = s.complement();
    CHECK(c.count() == 67);
    CHECK((s & c).empty());
    CHECK((s | c) == VertexSet::full(70));
    CHECK(kind_of([&] { s.insert(70); }) == ErrorKind::OutOfRange);
}

TEST_CASE("build normalizes and rejects malformed triples") {
    auto h = build_three_graph(5, {{2, 1, 0}, {3, 0, 1}, {4, 3, 2}});
    CHECK(h == f5());
    CHECK(h.size() == 3);
    CHECK(h.has_edge(1, 2, 0));
    CHECK_FALSE(h.has_edge(0, 2, 3));

    auto empty = build_three_graph(4, {});
    CHECK(empty.size() == 0);
    CHECK(degree_profile(empty).min_degree == 0);

    CHECK(kind_of([] { build_three_graph(3, {{0, 1, 1}}); }) == ErrorKind::DegenerateEdge);
    CHECK(kind_of([] { build_three_graph(3, {{0, 1, 3}}); }) == ErrorKind::OutOfRange);
    CHECK(build_three_graph(4, {{0, 1, 2}, {2, 1, 0}}).size() == 1);
}

TEST_CASE("shadow") {
    auto one = build_three_graph(3, {{0, 1, 2}});
    CHECK(shadow(one).edges() == std::vector<Pair>{{0, 1}, {0, 2}, {1, 2}});

    Graph s = shadow(wheel());
    CHECK(s.size() == 10);
    for (int i = 1; i <= 5; ++i) CHECK(s.adjacent(0, i));
    for (int i = 0; i < 5; ++i) CHECK(s.adjacent(1 + i, 1 + (i + 1) % 5));

    CHECK(shadow(build_three_graph(4, {})).size() == 0);
}

TEST_CASE("link") {
    CHECK(link(f5(), 4).edges() == std::vector<Pair>{{2, 3}});
    Graph l = link(balanced_turan(9), 0);
    CHECK(l.size() == 9);
    for (const auto& [u, v] : l.edges()) CHECK(u / 3 != v / 3);
    CHECK(link(f5(), 0, VertexSet(5)).size() == 0);
    CHECK(kind_of([] { link(f5(), 5); }) == ErrorKind::OutOfRange);
}

TEST_CASE("pair neighbourhood") {
    CHECK(pair_neighborhood(f5(), 0, 1).members() == std::vector<int>{2, 3});
    CHECK(pair_neighborhood(f5(), 0, 4).empty());
    // Contiguous parts {0,1},{2,3},{4,5}.
    CHECK(pair_neighborhood(balanced_turan(6), 0, 2).members() == std::vector<int>{4, 5});
    CHECK(kind_of([] { pair_neighborhood(f5(), 1, 1); }) == ErrorKind::SameVertex);
    CHECK(kind_of([] { pair_neighborhood(f5(), 1, 9); }) == ErrorKind::OutOfRange);
}

TEST_CASE("degree profile") {
    auto w = degree_profile(wheel());
    CHECK(w.min_degree == 2);
    CHECK(w.max_degree == 5);
    auto big = degree_profile(wheel_blowup(5, {2, 2, 2, 2, 2}));
    CHECK(big.min_degree == 20);
    CHECK(45 * big.min_degree == 4 * 15 * 15);
    auto e = degree_profile(build_three_graph(4, {}));
    CHECK(e.min_degree == 0);
    CHECK(e.max_degree == 0);
}

TEST_CASE("independence number") {
    CHECK(independence_number(f5()) == 2);
    CHECK(oracle::alpha(f5()) == 2);
    CHECK(independence_number(balanced_turan(9)) == 3);
    CHECK(independence_number(build_three_graph(7, {})) == 7);
    CHECK(kind_of([] { independence_number(build_three_graph(41, {})); }) == ErrorKind::SizeLimit);
}

TEST_CASE("three partition") {
    auto t = three_partition(balanced_turan(7));
    REQUIRE(t.has_value());
    CHECK(validate_witness(balanced_turan(7), *t));
    std::array<int, 3> sizes{};
    for (int c : t->assignment) ++sizes[static_cast<std::size_t>(c)];
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::array<int, 3>{2, 2, 3});

    CHECK_FALSE(three_partition(wheel()).has_value());
    CHECK_FALSE(oracle::three_colourable(wheel()));
    CHECK(three_partition(build_three_graph(4, {})).has_value());
}

TEST_CASE("witness validation rejects forgeries") {
    Witness w;
    w.kind = Witness::Kind::F5;
    w.vertices = {0, 1, 2, 3, 4};
    w.edges = {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}};
    CHECK(validate_witness(f5(), w));
    w.edges[2] = {1, 3, 4};
    CHECK_FALSE(validate_witness(f5(), w));

    Witness p;
    p.kind = Witness::Kind::Partition;
    p.vertices = {0, 1, 2, 3, 4, 5};
    p.assignment = {0, 0, 0, 1, 1, 2};
    CHECK_FALSE(validate_witness(balanced_turan(6), p));
}

TEST_CASE(".3g and JSON round trips") {
    auto h = wheel_blowup(2, {1, 2, 1, 2, 1});
    std::string text = io::to_3g(h);
    std::istringstream in(text);
    CHECK(io::read_3g(in) == h);
    CHECK(io::three_graph_from_json(io::to_json(h)) == h);
    std::istringstream any(io::to_json(h).dump());
    CHECK(io::read_three_graph(any) == h);

    Graph g = cycle_graph(5);
    std::istringstream gin(io::to_g(g));
    CHECK(io::read_g(gin) == g);

    std::istringstream dup("4 2\n0 1 2\n0 1 2\n");
    CHECK(kind_of([&] { io::read_3g(dup); }) == ErrorKind::Duplicate);
    std::istringstream bad("4 2\n0 1 2\n");
    CHECK(kind_of([&] { io::read_3g(bad); }) == ErrorKind::Parse);
    std::istringstream unsorted("4 1\n2 1 0\n");
    CHECK(kind_of([&] { io::read_3g(unsorted); }) == ErrorKind::Parse);

    Witness w = *three_partition(balanced_turan(7));
    CHECK(io::witness_from_json(io::to_json(w)).assignment == w.assignment);
}

}  // TEST_SUITE
