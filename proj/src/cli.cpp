#include "f5lab/cli.hpp"

#include "f5lab/construct.hpp"
#include "f5lab/corpus.hpp"
#include "f5lab/detect.hpp"
#include "f5lab/error.hpp"
#include "f5lab/feasibility.hpp"
#include "f5lab/io.hpp"
#include "f5lab/lemmas.hpp"
#include "f5lab/report.hpp"
#include "f5lab/search.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace f5lab::cli {

namespace {

struct Globals {
    std::string emit = "json";
    int threads = 0;
    int resolution = 0;
    std::uint64_t budget = 0;
    std::uint64_t seed = 1;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "12", "n/3", "2n/15" evaluated at n; must come out integral.
int eval_size(const std::string& expr, int n, bool have_n) {
    auto pos = expr.find('n');
    if (pos == std::string::npos) {
        try {
            std::size_t used = 0;
            int v = std::stoi(expr, &used);
            if (used != expr.size()) throw UsageError("--wheel: bad size '" + expr + "'");
            return v;
        } catch (const std::logic_error&) {
            throw UsageError("--wheel: bad size '" + expr + "'");
        }
    }
    if (!have_n) throw UsageError("--wheel: size '" + expr + "' refers to n; pass --n");
    long long num = 1, den = 1;
    try {
        if (pos > 0) num = std::stoll(expr.substr(0, pos));
        std::string rest = expr.substr(pos + 1);
        if (!rest.empty()) {
            if (rest[0] != '/') throw UsageError("--wheel: bad size '" + expr + "'");
            den = std::stoll(rest.substr(1));
        }
    } catch (const std::logic_error&) {
        throw UsageError("--wheel: bad size '" + expr + "'");
    }
    if (den <= 0 || (num * n) % den != 0)
        throw UsageError("--wheel: size '" + expr + "' is not an integer at n=" + std::to_string(n));
    return static_cast<int>(num * n / den);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

std::pair<int, std::array<int, 5>> parse_wheel(const std::string& spec, int n, bool have_n) {
    auto parts = split(spec, ',');
    std::array<int, 5> y{};
    int x = 0;
    if (!parts.empty() && parts[0].rfind("x=", 0) == 0) {
        if (parts.size() != 2 || parts[1].rfind("y=", 0) != 0) throw UsageError("--wheel: expected x=...,y=...");
        x = eval_size(parts[0].substr(2), n, have_n);
        y.fill(eval_size(parts[1].substr(2), n, have_n));
    } else {
        if (parts.size() != 6) throw UsageError("--wheel: expected six class sizes x,y1,...,y5");
        x = eval_size(parts[0], n, have_n);
        for (std::size_t i = 0; i < 5; ++i) y[i] = eval_size(parts[i + 1], n, have_n);
    }
    if (have_n && x + y[0] + y[1] + y[2] + y[3] + y[4] != n)
        throw UsageError("--wheel: class sizes do not add up to --n " + std::to_string(n));
    return {x, y};
}

std::array<int, 3> parse_triple(const std::string& s, const char* flag) {
    auto parts = split(s, ',');
    if (parts.size() != 3) throw UsageError(std::string(flag) + ": expected three comma-separated sizes");
    std::array<int, 3> out{};
    for (std::size_t i = 0; i < 3; ++i) {
        try {
            out[i] = std::stoi(parts[i]);
        } catch (const std::logic_error&) {
            throw UsageError(std::string(flag) + ": bad size '" + parts[i] + "'");
        }
    }
    return out;
}

ExactScalar parse_scalar(const std::string& text) {
    // "r", "r*sqrt5", "r+s*sqrt5", "r-s*sqrt5" with rationals r, s.
    const std::string tag = "*sqrt5";
    std::string s = text;
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (s.size() < tag.size() || s.compare(s.size() - tag.size(), tag.size(), tag) != 0) return Rational::parse(s);
    std::string body = s.substr(0, s.size() - tag.size());
    std::size_t cut = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;)
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != '/') {
            cut = i;
            break;
        }
    if (cut == std::string::npos) return {Rational(0), Rational::parse(body)};
    Rational a = Rational::parse(body.substr(0, cut));
    std::string b = body.substr(cut);
    if (b[0] == '+') b.erase(0, 1);
    return {a, Rational::parse(b)};
}

ThreeGraph load_input(const std::string& path) {
    if (path == "-") return io::read_three_graph(std::cin);
    return io::load_three_graph(path);
}

void emit_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

void emit_report(std::ostream& out, const Globals& g, const nlohmann::json& j) {
    if (g.emit == "text") {
        auto line = [&](const nlohmann::json& r) {
            std::string name = r.contains("lemma") ? r["lemma"].get<std::string>() : r.value("name", std::string("result"));
            out << name;
            if (r.contains("parameter") && !r["parameter"].is_null()) out << " " << r["parameter"].dump();
            out << ": " << (r.value("pass", false) ? "PASS" : "FAIL") << "\n";
        };
        if (j.is_array())
            for (const auto& r : j) line(r);
        else
            line(j);
        return;
    }
    emit_json(out, j);
}

nlohmann::json graph_summary(const ThreeGraph& h) {
    auto p = degree_profile(h);
    return {{"n", h.order()}, {"edges", h.size()}, {"min_degree", p.min_degree}, {"max_degree", p.max_degree}};
}

int cmd_construct(const Globals& g, std::ostream& out, const std::string& wheel, int n, bool have_n, int turan,
                  int gamma, int tightness, const std::string& ysz, const std::string& zsz, const std::string& blowup,
                  int m) {
    int chosen = (!wheel.empty()) + (turan >= 0) + (gamma >= 0) + (tightness >= 0) + (!blowup.empty());
    if (chosen != 1) throw UsageError("construct: pass exactly one of --wheel, --turan, --gamma, --tightness, --blowup");
    if (g.emit != "json" && g.emit != "3g") throw UsageError("--emit: construct supports 3g or json");
    if (gamma >= 0) {
        Graph gr = gamma_graph(gamma);
        if (g.emit == "3g") io::write_g(out, gr);
        else emit_json(out, {{"graph", io::to_json(gr)}, {"d", gamma}, {"regular", gr.is_regular()}});
        return 0;
    }
    ThreeGraph h;
    nlohmann::json info;
    if (!wheel.empty()) {
        auto [x, y] = parse_wheel(wheel, n, have_n);
        h = wheel_blowup(x, y);
        info = {{"construction", "wheel-blowup"}, {"x", x}, {"y", y}, {"min_degree_formula", wheel_min_degree_formula(x, y)}};
    } else if (turan >= 0) {
        h = balanced_turan(turan);
        info = {{"construction", "balanced-turan"}, {"parts", turan_part_sizes(turan)}};
    } else if (tightness >= 0) {
        std::optional<TightnessSizes> sizes;
        if (!ysz.empty() || !zsz.empty()) {
            if (ysz.empty() || zsz.empty()) throw UsageError("--y and --z must be given together");
            sizes = TightnessSizes{parse_triple(ysz, "--y"), parse_triple(zsz, "--z")};
        }
        auto layout = tightness_layout(tightness, sizes);
        h = tightness_witness(layout);
        double dn = static_cast<double>(tightness);
        info = {{"construction", "tightness-witness"}, {"y", layout.sizes.y}, {"z", layout.sizes.z},
                {"asymptotic_target", (dn - 10) * (dn - 10) / 12}, {"min_degree_over_n2", degree_profile(h).min_degree / (dn * dn)}};
    } else {
        if (m < 1) throw UsageError("--m must be at least 1");
        h = uniform_blowup(load_input(blowup), m);
        info = {{"construction", "uniform-blowup"}, {"m", m}};
    }
    if (g.emit == "3g") {
        io::write_3g(out, h);
    } else {
        info["summary"] = graph_summary(h);
        info["graph"] = io::to_json(h);
        emit_json(out, info);
    }
    return 0;
}

int cmd_check(const Globals& g, std::ostream& out, const std::string& file, bool f5, bool k4m, bool k4s, bool part,
              bool canc, bool alpha, bool theorem, bool facts) {
    ThreeGraph h = load_input(file);
    if (!(f5 || k4m || k4s || part || canc || alpha || theorem || facts)) f5 = k4m = k4s = part = canc = true;
    nlohmann::json j{{"summary", graph_summary(h)}};
    bool ok = true;
    auto witness = [](const std::optional<Witness>& w) { return w ? io::to_json(*w) : nlohmann::json(nullptr); };
    if (f5) {
        auto w = find_F5(h);
        j["f5"] = {{"free", !w}, {"witness", witness(w)}};
        ok = ok && !w;
    }
    if (k4m) {
        auto w = find_K4_3minus(h);
        j["k4minus"] = {{"free", !w}, {"witness", witness(w)}};
        ok = ok && !w;
    }
    if (k4s) {
        auto w = find_K4_shadow(h);
        j["k4shadow"] = {{"free", !w}, {"witness", witness(w)}};
        ok = ok && !w;
    }
    if (part) {
        auto w = three_partition(h);
        j["3partite"] = {{"holds", w.has_value()}, {"witness", witness(w)}};
        ok = ok && w.has_value();
    }
    if (canc) {
        bool c = is_cancellative(h);
        j["cancellative"] = c;
        ok = ok && c;
    }
    if (alpha) {
        int a = independence_number(h);
        j["independence_number"] = {{"alpha", a}, {"alpha_shadow", graph_independence_number(shadow(h))}};
    }
    if (theorem) {
        auto t = check_main_theorem(h);
        j["theorem"] = {{"verdict", std::string(to_string(t.verdict))}, {"reason", t.reason}, {"min_degree", t.min_degree}};
        ok = ok && t.verdict != Verdict::Counterexample;
    }
    if (facts) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : audit_link_facts(h)) arr.push_back(to_json(r));
        j["facts"] = arr;
    }
    j["pass"] = ok;
    if (g.emit == "text") {
        out << "check: " << (ok ? "PASS" : "FAIL") << "\n";
        for (auto it = j.begin(); it != j.end(); ++it)
            if (it.key() != "pass" && it.key() != "facts") out << "  " << it.key() << ": " << it.value().dump() << "\n";
    } else {
        emit_json(out, j);
    }
    return ok ? 0 : 1;
}

CertificateReport tight_parameters() {
    return aes_parameter_check(ExactScalar(Rational(1), Rational(-4, 15)), ExactScalar(Rational(0), Rational(4, 15)),
                               ExactScalar(Rational(4, 45)), ExactScalar(Rational(3), Rational(-4, 3)));
}

ScanOptions scan_options(const Globals& g) {
    ScanOptions o;
    o.threads = g.threads;
    o.seed = g.seed;
    return o;
}

int cmd_lemma(const Globals& g, std::ostream& out, const std::string& name, int d, bool have_d,
              const std::vector<std::string>& params) {
    std::vector<CertificateReport> reports;
    auto need_d = [&] {
        if (!have_d) throw UsageError("lemma " + name + ": --d is required");
    };
    if (name == "gamma-inverse") {
        need_d();
        reports.push_back(verify_gamma_inverse(d));
    } else if (name == "conjugation") {
        need_d();
        reports.push_back(verify_conjugation(d));
    } else if (name == "pentagon") {
        reports.push_back(verify_pentagon_identity());
    } else if (name == "opt1") {
        reports.push_back(opt1_certificate(g.resolution > 0 ? g.resolution : 60, scan_options(g)));
    } else if (name == "opt2") {
        if (have_d) {
            reports.push_back(opt2_certificate(d, g.resolution, scan_options(g)));
        } else {
            for (int k = 2; k <= 12; ++k) reports.push_back(opt2_certificate(k, g.resolution, scan_options(g)));
        }
    } else if (name == "aes-parameters") {
        if (params.empty()) {
            reports.push_back(tight_parameters());
        } else {
            if (params.size() != 4) throw UsageError("--params needs alpha,beta,delta,gamma");
            reports.push_back(aes_parameter_check(parse_scalar(params[0]), parse_scalar(params[1]),
                                                  parse_scalar(params[2]), parse_scalar(params[3])));
        }
    } else {
        throw UsageError("--name: unknown lemma '" + name +
                         "' (gamma-inverse, conjugation, pentagon, opt1, opt2, aes-parameters)");
    }
    bool ok = true;
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports) {
        ok = ok && r.pass;
        j.push_back(to_json(r));
    }
    emit_report(out, g, j.size() == 1 ? j[0] : j);
    return ok ? 0 : 1;
}

int cmd_audit(const Globals& g, std::ostream& out, bool all, bool claims, bool params, const std::string& facts_file,
              int fuzz) {
    if (!(all || claims || params || !facts_file.empty() || fuzz > 0))
        throw UsageError("audit: pass --all, --claims, --parameters, --facts FILE or --fuzz N");
    nlohmann::json j = nlohmann::json::array();
    bool ok = true;
    if (all || claims) {
        auto r = numeric_claim_audit();
        ok = ok && r.pass;
        j.push_back(to_json(r));
    }
    if (all || params) {
        auto r = tight_parameters();
        ok = ok && r.pass;
        j.push_back(to_json(r));
    }
    if (!facts_file.empty()) {
        ThreeGraph h = load_input(facts_file);
        nlohmann::json arr = nlohmann::json::array();
        bool holds = true;
        for (const auto& r : audit_link_facts(h)) {
            holds = holds && r.holds;
            arr.push_back(to_json(r));
        }
        ok = ok && holds;
        j.push_back({{"name", "link-facts"}, {"pass", holds}, {"facts", arr}});
    }
    if (fuzz > 0) {
        CorpusSpec spec{fuzz, 5, 7, g.seed};
        std::uint64_t counts[3] = {0, 0, 0};
        nlohmann::json bad = nlohmann::json::array();
        for (const auto& h : random_corpus(spec)) {
            auto t = check_main_theorem(h);
            ++counts[static_cast<int>(t.verdict)];
            if (t.verdict == Verdict::Counterexample) bad.push_back(io::to_json(h));
        }
        bool pass = counts[2] == 0;
        ok = ok && pass;
        j.push_back({{"name", "theorem-fuzz"}, {"pass", pass}, {"seed", g.seed}, {"instances", fuzz},
                     {"vacuous", counts[0]}, {"consistent", counts[1]}, {"counterexamples", bad}});
    }
    emit_report(out, g, j.size() == 1 ? j[0] : j);
    return ok ? 0 : 1;
}

int cmd_search(const Globals& g, std::ostream& out, int n, const std::string& forbid, const std::string& mode,
               bool non3, bool no_reduction, bool count_classes) {
    if (count_classes) {
        std::uint64_t count = 0;
        enumerate(n, nullptr, !no_reduction, [&](const ThreeGraph&) {
            ++count;
            return true;
        }, ForbiddenFamily::parse(forbid));
        emit_json(out, {{"n", n}, {"forbid", ForbiddenFamily::parse(forbid).to_string()}, {"canonical", !no_reduction},
                        {"count", count}});
        return 0;
    }
    SearchSpec spec;
    spec.n = n;
    spec.family = ForbiddenFamily::parse(forbid);
    if (mode == "max-edges") spec.mode = SearchMode::MaxEdges;
    else if (mode == "max-min-degree") spec.mode = SearchMode::MaxMinDegree;
    else throw UsageError("--mode: expected max-edges or max-min-degree, got '" + mode + "'");
    spec.require_non_3partite = non3;
    spec.isomorphism_reduction = !no_reduction;
    spec.budget = g.budget;
    spec.threads = g.threads;
    SearchResult r = run_search(spec);
    bool valid = !r.optimum || validate_search_witness(spec, *r.witness, *r.optimum);
    nlohmann::json j{{"n", n},
                     {"forbid", spec.family.to_string()},
                     {"mode", mode},
                     {"non_3partite", non3},
                     {"isomorphism_reduction", spec.isomorphism_reduction},
                     {"found", r.optimum.has_value()},
                     {"optimum", r.optimum ? nlohmann::json(*r.optimum) : nlohmann::json(nullptr)},
                     {"nodes", r.nodes},
                     {"exhaustive", r.exhaustive},
                     {"witness_valid", valid},
                     {"witness", r.witness ? nlohmann::json(io::to_3g(*r.witness)) : nlohmann::json(nullptr)},
                     {"pass", valid}};
    if (g.emit == "text") {
        out << "search n=" << n << " " << mode << ": "
            << (r.optimum ? std::to_string(*r.optimum) : std::string("none")) << (r.exhaustive ? " (exhaustive)" : " (budget hit)")
            << "\n";
    } else {
        emit_json(out, j);
    }
    return valid ? 0 : 1;
}

int cmd_validate(const Globals& g, std::ostream& out, const std::string& file, const std::string& witness_file) {
    ThreeGraph h = load_input(file);
    std::ifstream in(witness_file);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + witness_file);
    nlohmann::json wj;
    try {
        in >> wj;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("witness JSON: ") + e.what());
    }
    Witness w = io::witness_from_json(wj);
    bool ok = false;
    switch (w.kind) {
    case Witness::Kind::Clique:
    case Witness::Kind::Triangle: ok = validate_witness(shadow(h), w); break;
    default: ok = validate_witness(h, w); break;
    }
    nlohmann::json j{{"kind", std::string(to_string(w.kind))}, {"valid", ok}, {"pass", ok}};
    if (g.emit == "text") out << "validate " << to_string(w.kind) << ": " << (ok ? "PASS" : "FAIL") << "\n";
    else emit_json(out, j);
    return ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Extremal 3-graph workbench: constructions, detectors, exact certificates, small-n searches"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--emit", g.emit, "Output format: json (default), text, or 3g for construct")
        ->check(CLI::IsMember({"json", "text", "3g"}));
    app.add_option("--threads", g.threads, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    app.add_option("--resolution", g.resolution, "Scan lattice resolution (opt1 default 60, opt2 default auto)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--budget", g.budget, "Search node budget (0 = unlimited)");
    app.add_option("--seed", g.seed, "Seed for fuzz corpora and sampled scans");

    auto* construct = app.add_subcommand("construct", "Build a named construction");
    std::string wheel, ysz, zsz, blowup;
    int n = 0, turan = -1, gamma = -1, tightness = -1, m = 1;
    auto* n_opt = construct->add_option("--n", n, "Vertex count for symbolic --wheel sizes");
    construct->add_option("--wheel", wheel, "W5 blowup: x,y1,...,y5 or x=n/3,y=2n/15");
    construct->add_option("--turan", turan, "Balanced complete 3-partite 3-graph on N vertices");
    construct->add_option("--gamma", gamma, "Circulant Gamma_d graph");
    construct->add_option("--tightness", tightness, "Seven-part F5-free witness on N vertices");
    construct->add_option("--y", ysz, "Tightness Y block sizes a,b,c");
    construct->add_option("--z", zsz, "Tightness Z block sizes a,b,c");
    construct->add_option("--blowup", blowup, "Uniform blowup of the 3-graph in FILE");
    construct->add_option("--m", m, "Blowup factor");

    auto* check = app.add_subcommand("check", "Run detectors on a 3-graph");
    std::string file;
    bool f5 = false, k4m = false, k4s = false, part = false, canc = false, alpha = false, theorem = false, facts = false;
    check->add_option("--file", file, "Input .3g or JSON file ('-' for stdin)")->required();
    check->add_flag("--f5", f5, "F5-freeness");
    check->add_flag("--k4minus", k4m, "K4^{3-}-freeness");
    check->add_flag("--k4shadow", k4s, "K4-freeness of the shadow");
    check->add_flag("--3partite", part, "3-partiteness");
    check->add_flag("--cancellative", canc, "Cancellativity");
    check->add_flag("--alpha", alpha, "Independence number (reported, not judged)");
    check->add_flag("--theorem", theorem, "Minimum-degree theorem verdict");
    check->add_flag("--facts", facts, "Link-structure audit (reported, not judged)");

    auto* lemma = app.add_subcommand("lemma", "Exact certificate for a lemma");
    std::string name;
    int d = 0;
    std::vector<std::string> params;
    lemma->add_option("--name", name, "gamma-inverse | conjugation | pentagon | opt1 | opt2 | aes-parameters")->required();
    auto* d_opt = lemma->add_option("--d", d, "Degree parameter d");
    lemma->add_option("--params", params, "alpha,beta,delta,gamma as r or r+s*sqrt5")->delimiter(',');

    auto* audit = app.add_subcommand("audit", "Scalar claim catalog, parameter system, link facts, theorem fuzzing");
    bool all = false, claims = false, aparams = false;
    std::string facts_file;
    int fuzz = 0;
    audit->add_flag("--all", all, "Claims and parameter system");
    audit->add_flag("--claims", claims, "Scalar claim catalog");
    audit->add_flag("--parameters", aparams, "Parameter system at the tight constants");
    audit->add_option("--facts", facts_file, "Link-structure audit of FILE");
    audit->add_option("--fuzz", fuzz, "Theorem check on N random 3-graphs with 5..7 vertices");

    auto* search = app.add_subcommand("search", "Exhaustive small-n search");
    int sn = 0;
    std::string forbid = "k4minus,f5", mode = "max-edges";
    bool non3 = false, no_reduction = false, count_classes = false;
    search->add_option("--n", sn, "Vertex count")->required();
    search->add_option("--forbid", forbid, "Comma list of f5, k4minus, k4shadow");
    search->add_option("--mode", mode, "max-edges | max-min-degree");
    search->add_flag("--non-3partite", non3, "Only non-3-partite 3-graphs");
    search->add_flag("--no-reduction", no_reduction, "Disable isomorphism reduction");
    search->add_flag("--count-classes", count_classes, "Count family-free 3-graphs instead of optimizing");

    auto* validate = app.add_subcommand("validate", "Re-check a witness against a 3-graph");
    std::string vfile, wfile;
    validate->add_option("--file", vfile, "Host 3-graph")->required();
    validate->add_option("--witness", wfile, "Witness JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*construct)
            return cmd_construct(g, out, wheel, n, n_opt->count() > 0, turan, gamma, tightness, ysz, zsz, blowup, m);
        if (g.emit == "3g") throw UsageError("--emit 3g only applies to construct");
        if (*check) return cmd_check(g, out, file, f5, k4m, k4s, part, canc, alpha, theorem, facts);
        if (*lemma) return cmd_lemma(g, out, name, d, d_opt->count() > 0, params);
        if (*audit) return cmd_audit(g, out, all, claims, aparams, facts_file, fuzz);
        if (*search) return cmd_search(g, out, sn, forbid, mode, non3, no_reduction, count_classes);
        if (*validate) return cmd_validate(g, out, vfile, wfile);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace f5lab::cli
