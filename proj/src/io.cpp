#include "f5lab/io.hpp"

#include "f5lab/error.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace f5lab::io {

namespace {

long long read_int(std::istream& in, const char* what) {
    long long x = 0;
    if (!(in >> x)) throw Error(ErrorKind::Parse, std::string("expected integer for ") + what);
    return x;
}

void expect_end(std::istream& in) {
    std::string rest;
    if (in >> rest) throw Error(ErrorKind::Parse, "trailing content '" + rest + "'");
}

template <std::size_t K>
std::vector<std::array<int, K>> read_edge_lines(std::istream& in, int& n_out) {
    auto n = read_int(in, "vertex count");
    auto m = read_int(in, "edge count");
    if (n < 0 || m < 0) throw Error(ErrorKind::Parse, "negative header value");
    std::vector<std::array<int, K>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::set<std::array<int, K>> seen;
    for (long long i = 0; i < m; ++i) {
        std::array<int, K> e{};
        for (std::size_t k = 0; k < K; ++k) {
            auto x = read_int(in, "edge endpoint");
            if (x < 0 || x >= n) throw Error(ErrorKind::OutOfRange, "edge " + std::to_string(i) + " leaves the vertex range");
            e[k] = static_cast<int>(x);
            if (k > 0 && e[k - 1] >= e[k])
                throw Error(ErrorKind::Parse, "edge " + std::to_string(i) + " is not strictly increasing");
        }
        if (!seen.insert(e).second) throw Error(ErrorKind::Duplicate, "edge " + std::to_string(i) + " repeats an earlier edge");
        edges.push_back(e);
    }
    expect_end(in);
    n_out = static_cast<int>(n);
    return edges;
}

}  // namespace

ThreeGraph read_3g(std::istream& in) {
    int n = 0;
    auto edges = read_edge_lines<3>(in, n);
    return build_three_graph(n, edges);
}

void write_3g(std::ostream& out, const ThreeGraph& h) {
    out << h.order() << ' ' << h.size() << '\n';
    for (const auto& [a, b, c] : h.edges()) out << a << ' ' << b << ' ' << c << '\n';
}

std::string to_3g(const ThreeGraph& h) {
    std::ostringstream s;
    write_3g(s, h);
    return s.str();
}

Graph read_g(std::istream& in) {
    int n = 0;
    auto edges = read_edge_lines<2>(in, n);
    return Graph(n, edges);
}

void write_g(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& [a, b] : g.edges()) out << a << ' ' << b << '\n';
}

std::string to_g(const Graph& g) {
    std::ostringstream s;
    write_g(s, g);
    return s.str();
}

nlohmann::json to_json(const ThreeGraph& h) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : h.edges()) edges.push_back({e[0], e[1], e[2]});
    return {{"n", h.order()}, {"edges", edges}};
}

nlohmann::json to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges()) edges.push_back({e[0], e[1]});
    return {{"n", g.order()}, {"edges", edges}};
}

namespace {

template <std::size_t K>
std::vector<std::array<int, K>> json_edges(const nlohmann::json& j, int& n) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges") || !j["n"].is_number_integer() || !j["edges"].is_array())
        throw Error(ErrorKind::Parse, "expected {\"n\": int, \"edges\": [...]}");
    n = j["n"].get<int>();
    if (n < 0) throw Error(ErrorKind::Parse, "negative vertex count");
    std::vector<std::array<int, K>> out;
    std::set<std::array<int, K>> seen;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != K) throw Error(ErrorKind::Parse, "edge of wrong arity");
        std::array<int, K> t{};
        for (std::size_t k = 0; k < K; ++k) {
            if (!e[k].is_number_integer()) throw Error(ErrorKind::Parse, "non-integer endpoint");
            t[k] = e[k].get<int>();
        }
        auto key = t;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) throw Error(ErrorKind::Duplicate, "repeated edge in JSON input");
        out.push_back(t);
    }
    return out;
}

}  // namespace

ThreeGraph three_graph_from_json(const nlohmann::json& j) {
    int n = 0;
    auto edges = json_edges<3>(j, n);
    return build_three_graph(n, edges);
}

Graph graph_from_json(const nlohmann::json& j) {
    int n = 0;
    auto edges = json_edges<2>(j, n);
    return Graph(n, edges);
}

ThreeGraph read_three_graph(std::istream& in) {
    in >> std::ws;
    if (in.peek() == '{') {
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::Parse, e.what());
        }
        return three_graph_from_json(j);
    }
    return read_3g(in);
}

ThreeGraph load_three_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
    return read_three_graph(in);
}

nlohmann::json to_json(const Witness& w) {
    nlohmann::json j{{"kind", std::string(to_string(w.kind))}, {"vertices", w.vertices}, {"edges", w.edges}};
    if (!w.assignment.empty()) j["assignment"] = w.assignment;
    return j;
}

Witness witness_from_json(const nlohmann::json& j) {
    static const std::pair<const char*, Witness::Kind> kinds[] = {
        {"F5", Witness::Kind::F5},           {"K4minus", Witness::Kind::K4minus},
        {"K4shadow", Witness::Kind::K4shadow}, {"clique", Witness::Kind::Clique},
        {"triangle", Witness::Kind::Triangle}, {"partition", Witness::Kind::Partition},
        {"homomorphism", Witness::Kind::Homomorphism}};
    try {
        Witness w;
        auto name = j.at("kind").get<std::string>();
        bool found = false;
        for (auto [k, v] : kinds)
            if (name == k) {
                w.kind = v;
                found = true;
            }
        if (!found) throw Error(ErrorKind::Parse, "unknown witness kind '" + name + "'");
        w.vertices = j.at("vertices").get<std::vector<int>>();
        w.edges = j.at("edges").get<std::vector<std::vector<int>>>();
        if (j.contains("assignment")) w.assignment = j["assignment"].get<std::vector<int>>();
        return w;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
}

}  // namespace f5lab::io
