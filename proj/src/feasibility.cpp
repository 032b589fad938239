#include "f5lab/feasibility.hpp"

#include "f5lab/construct.hpp"
#include "f5lab/error.hpp"
#include "f5lab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

namespace f5lab {

double Constraint::slack(const std::vector<double>& y) const {
    double s = constant.to_double();
    for (const auto& t : terms) {
        double v = t.coef.to_double() * y[static_cast<std::size_t>(t.i)];
        if (t.j >= 0) v *= y[static_cast<std::size_t>(t.j)];
        s += v;
    }
    return s;
}

ExactScalar Constraint::slack(const std::vector<Rational>& y) const {
    Rational s(0);
    for (const auto& t : terms) {
        Rational v = t.coef * y[static_cast<std::size_t>(t.i)];
        if (t.j >= 0) v *= y[static_cast<std::size_t>(t.j)];
        s += v;
    }
    return ExactScalar(s) + constant;
}

double ConstraintSystem::min_slack(const std::vector<double>& y) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : constraints) best = std::min(best, c.slack(y));
    return best;
}

ExactScalar ConstraintSystem::min_slack(const std::vector<Rational>& y) const {
    if (constraints.empty()) throw Error(ErrorKind::PreconditionViolated, "empty constraint system");
    ExactScalar best = constraints.front().slack(y);
    for (std::size_t k = 1; k < constraints.size(); ++k) {
        ExactScalar s = constraints[k].slack(y);
        if (s < best) best = s;
    }
    return best;
}

bool ConstraintSystem::in_domain(const std::vector<Rational>& y) const {
    if (static_cast<int>(y.size()) != variables) return false;
    Rational total(0);
    for (const auto& v : y) {
        if (v.sign() < 0) return false;
        total += v;
    }
    return domain != Domain::Simplex || total == Rational(1);
}

ConstraintSystem opt1_system(const Rational& threshold) {
    // Variable 0 is x, variables 1..5 are y_1..y_5.
    ConstraintSystem sys;
    sys.variables = 6;
    sys.domain = Domain::Simplex;
    Constraint cycle{"sum y_i y_{i+1} > t", {}, ExactScalar(-threshold)};
    for (int i = 0; i < 5; ++i) cycle.terms.push_back({1 + i, 1 + (i + 1) % 5, Rational(1)});
    sys.constraints.push_back(cycle);
    for (int i = 0; i < 5; ++i) {
        Constraint hub{"x (y_{i-1} + y_{i+1}) > t, i=" + std::to_string(i + 1), {}, ExactScalar(-threshold)};
        hub.terms.push_back({0, 1 + (i + 4) % 5, Rational(1)});
        hub.terms.push_back({0, 1 + (i + 1) % 5, Rational(1)});
        sys.constraints.push_back(hub);
    }
    return sys;
}

ExactScalar opt2_sum_bound() {
    // 16/(3 sqrt5) = 16 sqrt5 / 15
    return ExactScalar(Rational(3), Rational(-16, 15));
}

ConstraintSystem opt2_system(int d, const Rational& threshold) {
    Graph g = gamma_graph(d);
    const int m = g.order();
    ConstraintSystem sys;
    sys.variables = m;
    sys.domain = Domain::PositiveOrthant;
    Constraint quad{"sum over Gamma_d edges y_i y_j > t", {}, ExactScalar(-threshold)};
    for (const auto& [u, v] : g.edges()) quad.terms.push_back({u, v, Rational(1)});
    sys.constraints.push_back(quad);
    for (int i = 0; i < m; ++i) {
        Constraint nb{"sum_{N(i)} y_j > (6/17) sum y, i=" + std::to_string(i), {}, ExactScalar()};
        std::vector<Rational> coef(static_cast<std::size_t>(m), Rational(-6, 17));
        g.neighbors(i).for_each([&](int j) { coef[static_cast<std::size_t>(j)] += Rational(1); });
        for (int j = 0; j < m; ++j) nb.terms.push_back({j, -1, coef[static_cast<std::size_t>(j)]});
        sys.constraints.push_back(nb);
    }
    Constraint total{"sum y < 3 - 16/(3 sqrt5)", {}, opt2_sum_bound()};
    for (int j = 0; j < m; ++j) total.terms.push_back({j, -1, Rational(-1)});
    sys.constraints.push_back(total);
    return sys;
}

namespace {

Rational from_double(double v) { return Rational(mpq_class(v)); }

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    k = std::min(k, n - k);
    long double r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
        if (r > static_cast<long double>(cap)) return cap + 1;
    }
    return static_cast<std::uint64_t>(std::llround(static_cast<double>(r)));
}

/// Calls fn on every composition of `total` into k.size() - pos nonnegative parts, lexicographically.
template <typename Fn>
void for_each_composition(std::vector<int>& k, std::size_t pos, int total, Fn& fn) {
    if (pos + 1 == k.size()) {
        k[pos] = total;
        fn(k);
        return;
    }
    for (int v = 0; v <= total; ++v) {
        k[pos] = v;
        for_each_composition(k, pos + 1, total - v, fn);
    }
}

template <typename P>
struct Ranked {
    double value = -std::numeric_limits<double>::infinity();
    std::uint64_t order = 0;
    P point;
};

template <typename P>
bool ranks_before(const Ranked<P>& a, const Ranked<P>& b) {
    return a.value > b.value || (a.value == b.value && a.order < b.order);
}

template <typename P>
void keep_top(std::vector<Ranked<P>>& top, Ranked<P> c, std::size_t limit) {
    if (top.size() == limit && !ranks_before(c, top.back())) return;
    auto at = std::upper_bound(top.begin(), top.end(), c, ranks_before<P>);
    top.insert(at, std::move(c));
    if (top.size() > limit) top.pop_back();
}

template <typename P>
std::vector<Ranked<P>> merge_top(const std::vector<std::vector<Ranked<P>>>& shards, std::size_t limit) {
    std::vector<Ranked<P>> all;
    for (const auto& s : shards) all.insert(all.end(), s.begin(), s.end());
    std::sort(all.begin(), all.end(), ranks_before<P>);
    if (all.size() > limit) all.resize(limit);
    return all;
}

std::mt19937_64 seeded(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace

SlackScan scan_opt1(const Rational& threshold, const ScanOptions& opt) {
    if (opt.resolution < 1) throw Error(ErrorKind::PreconditionViolated, "resolution must be positive");
    const ConstraintSystem sys = opt1_system(threshold);
    const int R = opt.resolution;
    const int nv = sys.variables;

    // Integer form: D * (sum c_ij k_i k_j) + D * c * R^2, all on the common scale D R^2.
    mpz_class D = 1;
    for (const auto& c : sys.constraints) {
        if (!c.constant.is_rational()) throw Error(ErrorKind::PreconditionViolated, "lattice scan needs rational constants");
        mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), c.constant.a.raw().get_den_mpz_t());
        for (const auto& t : c.terms) {
            if (t.j < 0) throw Error(ErrorKind::PreconditionViolated, "lattice scan needs homogeneous quadratics");
            mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), t.coef.raw().get_den_mpz_t());
        }
    }
    struct IntConstraint {
        std::vector<std::array<long long, 3>> terms;  // i, j, coefficient
        long long constant;
    };
    std::vector<IntConstraint> ic;
    mpq_class scale(D);
    for (const auto& c : sys.constraints) {
        IntConstraint x;
        for (const auto& t : c.terms) {
            mpq_class v = t.coef.raw() * scale;
            x.terms.push_back({t.i, t.j, v.get_num().get_si()});
        }
        mpq_class k = c.constant.a.raw() * scale * R * R;
        x.constant = k.get_num().get_si();
        ic.push_back(std::move(x));
    }
    const double denom = D.get_d() * R * R;

    const int shards = R + 1;
    std::vector<std::vector<Ranked<std::vector<int>>>> tops(static_cast<std::size_t>(shards));
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(shards), 0);
    parallel_for(shards, opt.threads, [&](int shard) {
        auto& top = tops[static_cast<std::size_t>(shard)];
        std::uint64_t counter = 0;
        std::vector<int> k(static_cast<std::size_t>(nv), 0);
        k[0] = shard;
        auto visit = [&](const std::vector<int>& pt) {
            long long worst = std::numeric_limits<long long>::max();
            for (const auto& c : ic) {
                long long s = c.constant;
                for (const auto& t : c.terms) s += t[2] * pt[static_cast<std::size_t>(t[0])] * pt[static_cast<std::size_t>(t[1])];
                worst = std::min(worst, s);
            }
            std::uint64_t order = (static_cast<std::uint64_t>(shard) << 40) | counter++;
            double value = static_cast<double>(worst) / denom;
            if (top.size() < static_cast<std::size_t>(opt.refine_starts) || value >= top.back().value)
                keep_top(top, Ranked<std::vector<int>>{value, order, pt}, static_cast<std::size_t>(opt.refine_starts));
        };
        for_each_composition(k, 1, R - shard, visit);
        counts[static_cast<std::size_t>(shard)] = counter;
    });

    SlackScan scan;
    scan.resolution = R;
    scan.points_evaluated = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    std::ostringstream how;
    how << "barycentric lattice R=" << R << " (" << scan.points_evaluated << " points), exact dyadic refinement from top "
        << opt.refine_starts;
    scan.sampling = how.str();
    auto starts = merge_top(tops, static_cast<std::size_t>(opt.refine_starts));

    bool have_best = false;
    for (const auto& start : starts) {
        std::vector<Rational> y;
        for (int v : start.point) y.emplace_back(v, R);
        ExactScalar cur = sys.min_slack(y);
        Rational h(1, R);
        std::vector<double> trace;
        for (int step = 0; step < opt.refine_steps; ++step) {
            std::vector<Rational> best_y;
            ExactScalar best_v = cur;
            for (int i = 0; i < nv; ++i) {
                if (y[static_cast<std::size_t>(i)] < h) continue;
                for (int j = 0; j < nv; ++j) {
                    if (i == j) continue;
                    auto cand = y;
                    cand[static_cast<std::size_t>(i)] -= h;
                    cand[static_cast<std::size_t>(j)] += h;
                    ExactScalar v = sys.min_slack(cand);
                    if (v > best_v) {
                        best_v = v;
                        best_y = std::move(cand);
                    }
                }
            }
            if (best_y.empty()) {
                h *= Rational(1, 2);
            } else {
                y = std::move(best_y);
                cur = best_v;
            }
            trace.push_back(cur.to_double());
        }
        if (!have_best || cur > scan.best_min_slack_exact) {
            have_best = true;
            scan.best_min_slack_exact = cur;
            scan.best_point = y;
            scan.trace = std::move(trace);
        }
    }
    scan.best_min_slack = scan.best_min_slack_exact.to_double();
    return scan;
}

namespace {

/// Per-constraint coefficients along a ray y = s * direction: slack(s) = a s^2 + b s + c.
struct RayForm {
    std::vector<std::array<double, 3>> abc;

    double at(double s) const {
        double worst = std::numeric_limits<double>::infinity();
        for (const auto& [a, b, c] : abc) worst = std::min(worst, (a * s + b) * s + c);
        return worst;
    }
};

struct CompiledSystem {
    struct C {
        std::vector<std::array<double, 3>> quad;  // i, j, coef
        std::vector<std::pair<int, double>> lin;
        double constant = 0;
    };
    std::vector<C> cs;

    explicit CompiledSystem(const ConstraintSystem& sys) {
        for (const auto& c : sys.constraints) {
            C x;
            x.constant = c.constant.to_double();
            for (const auto& t : c.terms) {
                if (t.j >= 0)
                    x.quad.push_back({static_cast<double>(t.i), static_cast<double>(t.j), t.coef.to_double()});
                else
                    x.lin.emplace_back(t.i, t.coef.to_double());
            }
            cs.push_back(std::move(x));
        }
    }

    RayForm ray(const std::vector<double>& dir) const {
        RayForm r;
        for (const auto& c : cs) {
            double a = 0, b = 0;
            for (const auto& [i, j, w] : c.quad) a += w * dir[static_cast<std::size_t>(i)] * dir[static_cast<std::size_t>(j)];
            for (const auto& [i, w] : c.lin) b += w * dir[static_cast<std::size_t>(i)];
            r.abc.push_back({a, b, c.constant});
        }
        return r;
    }
};

struct RayBest {
    double value;
    double scale;
};

/// Golden-section search for max_s min_c slack_c(s) on [0, smax]; the min is unimodal for the systems here.
RayBest best_on_ray(const RayForm& f, double smax) {
    const double g = (std::sqrt(5.0) - 1) / 2;
    double lo = 0, hi = smax;
    double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    double f1 = f.at(x1), f2 = f.at(x2);
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = f.at(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = f.at(x1);
        }
    }
    RayBest best{f1, x1};
    if (f2 > best.value) best = {f2, x2};
    double fe = f.at(smax);
    if (fe > best.value) best = {fe, smax};
    return best;
}

struct Direction {
    std::vector<double> dir;
    double scale = 0;
};

}  // namespace

SlackScan scan_opt2(int d, const Rational& threshold, const ScanOptions& opt) {
    const ConstraintSystem sys = opt2_system(d, threshold);
    const CompiledSystem comp(sys);
    const int m = sys.variables;
    const double smax = opt2_sum_bound().to_double();
    const auto limit = static_cast<std::size_t>(opt.refine_starts);

    // Largest lattice resolution whose point count stays under the limit.
    int R = 0;
    int cap = opt.resolution > 0 ? opt.resolution : 1000;
    while (R < cap && binomial_capped(static_cast<std::uint64_t>(R + 1 + m - 1), static_cast<std::uint64_t>(m - 1),
                                      opt.lattice_limit) <= opt.lattice_limit)
        ++R;

    auto evaluate = [&](const std::vector<double>& dir) {
        RayBest b = best_on_ray(comp.ray(dir), smax);
        return b;
    };

    std::vector<std::vector<Ranked<Direction>>> tops;
    std::uint64_t evaluated = 0;

    if (R > 0) {
        const int shards = R + 1;
        std::vector<std::vector<Ranked<Direction>>> part(static_cast<std::size_t>(shards));
        std::vector<std::uint64_t> counts(static_cast<std::size_t>(shards), 0);
        parallel_for(shards, opt.threads, [&](int shard) {
            auto& top = part[static_cast<std::size_t>(shard)];
            std::uint64_t counter = 0;
            std::vector<int> k(static_cast<std::size_t>(m), 0);
            std::vector<double> dir(static_cast<std::size_t>(m));
            k[0] = shard;
            auto visit = [&](const std::vector<int>& pt) {
                for (std::size_t i = 0; i < pt.size(); ++i) dir[i] = static_cast<double>(pt[i]) / R;
                RayBest b = evaluate(dir);
                std::uint64_t order = (static_cast<std::uint64_t>(shard) << 40) | counter++;
                if (top.size() < limit || b.value >= top.back().value)
                    keep_top(top, Ranked<Direction>{b.value, order, {dir, b.scale}}, limit);
            };
            if (m == 1)
                visit(std::vector<int>{R});
            else
                for_each_composition(k, 1, R - shard, visit);
            counts[static_cast<std::size_t>(shard)] = counter;
        });
        for (auto c : counts) evaluated += c;
        for (auto& p : part) tops.push_back(std::move(p));
    }

    // Seeded Dirichlet(1) samples plus the uniform direction; one stream per shard.
    const int sample_shards = 16;
    std::vector<std::vector<Ranked<Direction>>> sampled(static_cast<std::size_t>(sample_shards));
    parallel_for(sample_shards, opt.threads, [&](int shard) {
        auto rng = seeded(opt.seed, static_cast<std::uint64_t>(d) * 1000 + static_cast<std::uint64_t>(shard));
        auto& top = sampled[static_cast<std::size_t>(shard)];
        int per = opt.samples / sample_shards + (shard < opt.samples % sample_shards ? 1 : 0);
        std::vector<double> dir(static_cast<std::size_t>(m));
        std::uint64_t base = (std::uint64_t{1} << 62) | (static_cast<std::uint64_t>(shard) << 40);
        if (shard == 0) {
            std::fill(dir.begin(), dir.end(), 1.0 / m);
            RayBest b = evaluate(dir);
            keep_top(top, Ranked<Direction>{b.value, base, {dir, b.scale}}, limit);
        }
        for (int s = 0; s < per; ++s) {
            double total = 0;
            for (auto& v : dir) {
                v = -std::log(1.0 - uniform01(rng));
                total += v;
            }
            for (auto& v : dir) v /= total;
            RayBest b = evaluate(dir);
            if (top.size() < limit || b.value >= top.back().value)
                keep_top(top, Ranked<Direction>{b.value, base + 1 + static_cast<std::uint64_t>(s), {dir, b.scale}}, limit);
        }
    });
    evaluated += static_cast<std::uint64_t>(opt.samples) + 1;
    for (auto& s : sampled) tops.push_back(std::move(s));
    auto starts = merge_top(tops, limit);

    // Coordinate descent: shift mass h between two coordinates, halve h when nothing improves.
    struct Refined {
        double value;
        Direction at;
        std::vector<double> trace;
    };
    std::vector<Refined> refined(starts.size());
    parallel_for(static_cast<int>(starts.size()), opt.threads, [&](int idx) {
        auto rng = seeded(opt.seed ^ 0x9e3779b97f4a7c15ULL, static_cast<std::uint64_t>(d) * 1000 + static_cast<std::uint64_t>(idx));
        Direction cur = starts[static_cast<std::size_t>(idx)].point;
        double value = starts[static_cast<std::size_t>(idx)].value;
        double h = 0.5 / m;
        std::vector<double> trace;
        for (int step = 0; step < opt.refine_steps; ++step) {
            std::vector<std::pair<int, int>> moves;
            if (m <= 8) {
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j)
                        if (i != j) moves.emplace_back(i, j);
            } else {
                for (int t = 0; t < 4 * m; ++t) {
                    int i = static_cast<int>(rng() % static_cast<std::uint64_t>(m));
                    int j = static_cast<int>(rng() % static_cast<std::uint64_t>(m - 1));
                    if (j >= i) ++j;
                    moves.emplace_back(i, j);
                }
            }
            Direction best = cur;
            double best_v = value;
            for (auto [i, j] : moves) {
                if (cur.dir[static_cast<std::size_t>(i)] < h) continue;
                auto dir = cur.dir;
                dir[static_cast<std::size_t>(i)] -= h;
                dir[static_cast<std::size_t>(j)] += h;
                RayBest b = evaluate(dir);
                if (b.value > best_v) {
                    best_v = b.value;
                    best = {std::move(dir), b.scale};
                }
            }
            if (best_v > value) {
                cur = std::move(best);
                value = best_v;
            } else {
                h /= 2;
            }
            trace.push_back(value);
        }
        refined[static_cast<std::size_t>(idx)] = {value, std::move(cur), std::move(trace)};
    });

    SlackScan scan;
    scan.resolution = R;
    scan.points_evaluated = evaluated;
    std::ostringstream how;
    how << "direction lattice R=" << R << " + " << opt.samples << " Dirichlet samples (seed " << opt.seed
        << ") + uniform; golden-section scale search on (0, s0]; coordinate descent from top " << opt.refine_starts;
    scan.sampling = how.str();
    std::size_t pick = 0;
    for (std::size_t i = 1; i < refined.size(); ++i)
        if (refined[i].value > refined[pick].value) pick = i;
    if (refined.empty()) throw Error(ErrorKind::PreconditionViolated, "scan produced no candidates");
    const auto& best = refined[pick];
    scan.best_min_slack = best.value;
    scan.trace = best.trace;
    Rational s = from_double(best.at.scale);
    for (double v : best.at.dir) scan.best_point.push_back(s * from_double(v));
    scan.best_min_slack_exact = sys.min_slack(scan.best_point);
    return scan;
}

Polynomial opt1_cubic() { return Polynomial({Rational(-16), Rational(96), Rational(-225), Rational(135)}); }

namespace {

nlohmann::json point_json(const std::vector<Rational>& y) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& v : y) j.push_back(v.to_double());
    return j;
}

}  // namespace

nlohmann::json to_json(const SlackScan& s) {
    return {{"resolution", s.resolution},
            {"points_evaluated", s.points_evaluated},
            {"sampling", s.sampling},
            {"best_point", point_json(s.best_point)},
            {"best_min_slack", s.best_min_slack},
            {"best_min_slack_exact", exact_json(s.best_min_slack_exact)},
            {"refinement_steps", s.trace.size()},
            {"refinement_final", s.trace.empty() ? nlohmann::json(nullptr) : nlohmann::json(s.trace.back())}};
}

CertificateReport opt1_certificate(int resolution, const ScanOptions& base) {
    if (resolution < 10) throw Error(ErrorKind::PreconditionViolated, "opt1 resolution must be at least 10");
    CertificateReport r{"opt1", {{"resolution", resolution}}, false, nlohmann::json::object()};
    ScanOptions opt = base;
    opt.resolution = resolution;

    // (A) numeric evidence.
    SlackScan scan = scan_opt1(Rational(4, 45), opt);
    bool numeric_ok = exact_sign(scan.best_min_slack_exact) <= 0;
    r.details["numeric"] = to_json(scan);
    r.details["numeric"]["pass"] = numeric_ok;

    SlackScan weak = scan_opt1(Rational(3, 45), opt);
    bool weak_ok = exact_sign(weak.best_min_slack_exact) > 0;
    r.details["weakened_threshold"] = to_json(weak);
    r.details["weakened_threshold"]["threshold"] = "3/45";
    r.details["weakened_threshold"]["finds_feasible_point"] = weak_ok;

    // (B) exact endgame.
    Polynomial p = opt1_cubic();
    auto neg = certify_negative(p, Rational(0), Rational(1), 20);
    nlohmann::json cubic{{"polynomial", "135x^3 - 225x^2 + 96x - 16"},
                         {"at_0", p(Rational(0)).to_string()},
                         {"at_1", p(Rational(1)).to_string()},
                         {"negative_on_unit_interval", neg.holds},
                         {"dyadic_intervals", neg.cover.size()}};
    if (!neg.holds) cubic["stuck_interval"] = {neg.stuck.first.to_string(), neg.stuck.second.to_string()};

    // 405x^2 [(1-x)^2 - 4/45] - 16(-9x^2 + 9x - 1) == -(1 - 3x) p(x)
    Polynomial x({Rational(0), Rational(1)});
    Polynomial one({Rational(1)});
    Polynomial lhs = Polynomial({Rational(0), Rational(0), Rational(405)}) *
                         ((one - x) * (one - x) - Polynomial({Rational(4, 45)})) -
                     Polynomial({Rational(-16), Rational(144), Rational(-144)});
    Polynomial rhs = Polynomial({Rational(-1), Rational(3)}) * p;
    bool identity_ok = lhs == rhs;
    cubic["reduction_identity"] = identity_ok;

    // x(1-x) > 2/9  <=>  x^2 - x + 2/9 < 0; discriminant 1/9, roots 1/3 and 2/3.
    Polynomial quad({Rational(2, 9), Rational(-1), Rational(1)});
    Rational disc = Rational(1) - Rational(4) * Rational(2, 9);
    bool roots_ok = disc == Rational(1, 9) && quad(Rational(1, 3)).is_zero() && quad(Rational(2, 3)).is_zero() &&
                    quad(Rational(1, 2)).sign() < 0;
    nlohmann::json hub{{"discriminant", disc.to_string()}, {"roots", {"1/3", "2/3"}}, {"pass", roots_ok}};

    r.details["exact"] = {{"cubic", cubic}, {"hub_interval", hub}};
    bool exact_ok = neg.holds && identity_ok && roots_ok;
    r.details["exact"]["pass"] = exact_ok;
    r.pass = numeric_ok && weak_ok && exact_ok;
    return r;
}

CertificateReport opt2_certificate(int d, int resolution, const ScanOptions& base) {
    if (d < 2 || d > 12) throw Error(ErrorKind::OutOfRange, "opt2 needs d in [2, 12], got " + std::to_string(d));
    CertificateReport r{"opt2", {{"d", d}}, false, nlohmann::json::object()};
    ScanOptions opt = base;
    opt.resolution = resolution;

    SlackScan scan = scan_opt2(d, Rational(4, 45), opt);
    bool numeric_ok = exact_sign(scan.best_min_slack_exact) <= 0;
    r.details["numeric"] = to_json(scan);
    r.details["numeric"]["pass"] = numeric_ok;

    SlackScan weak = scan_opt2(d, Rational(3, 45), opt);
    bool weak_feasible = exact_sign(weak.best_min_slack_exact) > 0;
    // Summing the neighbourhood constraints over all i gives d sum y > (6/17)(3d-1) sum y, impossible for d >= 6.
    bool degree_blocks = Rational(17 * d) <= Rational(6 * (3 * d - 1));
    r.details["weakened_threshold"] = to_json(weak);
    r.details["weakened_threshold"]["threshold"] = "3/45";
    r.details["weakened_threshold"]["finds_feasible_point"] = weak_feasible;
    r.details["weakened_threshold"]["neighbourhood_constraints_alone_infeasible"] = degree_blocks;

    ExactScalar s0 = opt2_sum_bound();
    ExactScalar s0sq = s0 * s0;
    Rational coef(static_cast<long long>(d) * d - 13LL * d + 144, 578);
    ExactScalar bound = ExactScalar(coef) * s0sq;
    bool bound_ok = exact_sign(ExactScalar(Rational(4, 45)) - bound) >= 0;
    bool s0sq_ok = s0sq == ExactScalar(Rational(661, 45), Rational(-32, 5));

    // C(d,2) - 6(3d-4)(8d+3)/289 == (d^2 - 13d + 144)/578 as polynomials in d.
    Polynomial choose2 = Polynomial({Rational(0), Rational(-1, 2), Rational(1, 2)});
    Polynomial reg = Polynomial({Rational(6, 289)}) * Polynomial({Rational(-4), Rational(3)}) *
                     Polynomial({Rational(3), Rational(8)});
    Polynomial target({Rational(144, 578), Rational(-13, 578), Rational(1, 578)});
    bool gap_identity = choose2 - reg == target;
    // 6(m-3)(17d-3m)/289 at m = 3d-1.
    Polynomial m = Polynomial({Rational(-1), Rational(3)});
    Polynomial general = Polynomial({Rational(6, 289)}) * (m - Polynomial({Rational(3)})) *
                         (Polynomial({Rational(0), Rational(17)}) - Polynomial({Rational(3)}) * m);
    bool reg_identity = general == reg;

    r.details["exact"] = {{"s0", exact_json(s0)},
                          {"s0_squared", exact_json(s0sq)},
                          {"s0_squared_matches", s0sq_ok},
                          {"coefficient", exact_json(coef)},
                          {"bound", exact_json(bound)},
                          {"threshold", exact_json(Rational(4, 45))},
                          {"bound_at_most_threshold", bound_ok},
                          {"gap_identity", gap_identity},
                          {"regularity_constant_identity", reg_identity}};
    bool exact_ok = bound_ok && s0sq_ok && gap_identity && reg_identity;
    r.details["exact"]["pass"] = exact_ok;
    r.pass = numeric_ok && exact_ok;
    return r;
}

CertificateReport aes_parameter_check(const ExactScalar& alpha, const ExactScalar& beta, const ExactScalar& delta,
                                      const ExactScalar& gamma) {
    CertificateReport r{"aes-parameters",
                        {{"alpha", alpha.to_string()}, {"beta", beta.to_string()}, {"delta", delta.to_string()},
                         {"gamma", gamma.to_string()}},
                        false,
                        nlohmann::json::object()};
    const ExactScalar one(1), two(2), half(Rational(1, 2));
    const ExactScalar ga = gamma * alpha;
    ExactScalar t1 = beta * (one - beta) / ExactScalar(3) + ga;
    ExactScalar t2 = (one - gamma) * (one - gamma) / ExactScalar(12) + ga;
    ExactScalar t3(Rational(1, 12));
    ExactScalar m1 = (two - two * beta) * (two - two * beta) / ExactScalar(4) + (two * beta - one) * gamma;
    ExactScalar m2 = beta * beta / ExactScalar(4) + (one - beta) * gamma;
    ExactScalar t4 = half * max(m1, m2);

    nlohmann::json items = nlohmann::json::array();
    bool all = true;
    auto add = [&](const std::string& name, const ExactScalar& lhs, const ExactScalar& rhs) {
        bool ok = exact_sign(lhs - rhs) > 0;
        all = all && ok;
        items.push_back({{"inequality", name}, {"lhs", exact_json(lhs)}, {"rhs", exact_json(rhs)},
                         {"slack", exact_json(lhs - rhs)}, {"strict", ok}});
    };
    add("beta > 1/2", beta, half);
    add("delta > beta(1-beta)/3 + gamma alpha", delta, t1);
    add("delta > (1-gamma)^2/12 + gamma alpha", delta, t2);
    add("delta > 1/12", delta, t3);
    add("delta > max{(2-2beta)^2/4 + (2beta-1)gamma, beta^2/4 + (1-beta)gamma}/2", delta, t4);
    r.details["inequalities"] = items;
    r.details["beta_squared_over_4"] = exact_json(beta * beta / ExactScalar(4));
    r.details["second_max_term"] = exact_json(m2);
    r.details["max_attained_by"] = m2 > m1 ? "beta^2/4 + (1-beta)gamma" : "(2-2beta)^2/4 + (2beta-1)gamma";
    r.details["all_positive"] = exact_sign(alpha) > 0 && exact_sign(beta) > 0 && exact_sign(delta) > 0 && exact_sign(gamma) > 0;
    r.pass = all;
    return r;
}

CertificateReport numeric_claim_audit() {
    CertificateReport r{"scalar-claims", nullptr, false, nlohmann::json::object()};
    nlohmann::json claims = nlohmann::json::array();
    bool all = true;
    auto record = [&](const std::string& id, const std::string& statement, bool ok, nlohmann::json values,
                      const std::string& reduction) {
        all = all && ok;
        claims.push_back({{"id", id}, {"statement", statement}, {"pass", ok}, {"values", std::move(values)},
                          {"reduction", reduction}});
    };

    // Quadratic q(n) = a n^2 + b n with a > 0 is increasing past -b/(2a); a boundary check settles n >= n0.
    auto quadratic_from = [](const Rational& a, const Rational& b, long long n0) {
        Rational vertex = -b / (Rational(2) * a);
        Rational at = a * Rational(n0) * Rational(n0) + b * Rational(n0);
        return std::make_tuple(a.sign() > 0 && vertex <= Rational(n0) && at.sign() > 0, vertex, at);
    };

    {
        // 7n^2/12 - 196n - n(n-1)/2 = n^2/12 - 391n/2
        Rational a = Rational(7, 12) - Rational(1, 2), b = Rational(-196) + Rational(1, 2);
        auto [ok, vertex, at] = quadratic_from(a, b, 4629);
        Rational at2000 = a * Rational(2000 * 2000) + b * Rational(2000);
        bool fails_2000 = at2000.sign() <= 0;
        record("a", "7n^2/12 - 196n > C(n,2) for all n >= 4629", ok && fails_2000,
               {{"difference", "n^2/12 - 391n/2"}, {"at_4629", exact_json(at)}, {"vertex", exact_json(vertex)},
                {"at_2000", exact_json(at2000)}, {"fails_at_2000", fails_2000}},
               "leading coefficient 1/12 > 0 and vertex below 4629, so positivity at 4629 extends to all larger n");
    }
    {
        bool ok = true;
        nlohmann::json vals = nlohmann::json::object();
        for (long long k : {5LL, 6LL}) {
            Rational a(k * k - 6 * k + 6, 12 * k);
            Rational b(-k * (k + 1) * k / 2);
            auto [good, vertex, at] = quadratic_from(a, b, 4629);
            ok = ok && good;
            vals["k=" + std::to_string(k)] = {{"a", exact_json(a)}, {"b", exact_json(b)}, {"vertex", exact_json(vertex)},
                                              {"at_4629", exact_json(at)}};
        }
        record("b", "(k^2-6k+6)/(12k) n^2 - k C(k+1,2) n > 0 for k in {5,6}, n >= 4629", ok, vals,
               "each is a n^2 + b n with a > 0 and vertex below 4629");
    }
    {
        Rational eps(1, 180);
        Rational g = Rational(1, 3) + Rational(2) * eps;
        Rational lhs = g * (Rational(4) * g - Rational(1)) * (Rational(3) * g - Rational(1)) / Rational(6);
        Rational rhs = eps / Rational(9);
        bool ok = lhs > rhs && lhs == Rational(527, 729000) && rhs == Rational(1, 1620);
        record("c", "gamma(4gamma-1)(3gamma-1)/6 > eps/9 at gamma = 1/3 + 2eps, eps = 1/180", ok,
               {{"gamma", exact_json(g)}, {"lhs", exact_json(lhs)}, {"rhs", exact_json(rhs)}}, "single exact evaluation");
    }
    {
        ExactScalar x0 = ExactScalar(Rational(-2), Rational(16, 15));  // 16/(3 sqrt5) - 2
        ExactScalar value = ExactScalar(Rational(3, 8)) * x0 * (ExactScalar(1) - x0);
        ExactScalar constant(Rational(-263, 60), Rational(2));
        bool equal = value == constant;
        bool below_half = x0 < ExactScalar(Rational(1, 2));
        bool below = constant < ExactScalar(Rational(4, 45));
        bool ok = equal && below_half && below && exact_sign(x0) > 0;
        record("d", "(3/8) x(1-x) <= 2 sqrt5 - 263/60 < 4/45 for 0 <= x <= 16/(3 sqrt5) - 2", ok,
               {{"x0", exact_json(x0)}, {"value_at_x0", exact_json(value)}, {"constant", exact_json(constant)},
                {"equals_constant", equal}, {"x0_below_half", below_half},
                {"margin", exact_json(ExactScalar(Rational(4, 45)) - constant)},
                {"note", "x(1-x) increases on [0, 1/2]; the endpoint x0 is taken as given, not derived"}},
               "x(1-x) is increasing below 1/2, so its maximum on the range sits at x0 < 1/2");
    }
    {
        ExactScalar target = ExactScalar(Rational(33 * 12, 76), Rational(-33 * 5, 76));
        ExactScalar six17(Rational(6, 17));
        int sgn = exact_sign(target - six17);
        ExactScalar x0 = ExactScalar(Rational(-2), Rational(16, 15));
        ExactScalar y0 = ExactScalar(Rational(0), Rational(4, 15));  // 4/(3 sqrt5)
        ExactScalar chain = ExactScalar(1) - (ExactScalar(1) - x0 - ExactScalar(Rational(4, 45)) / x0) / y0;
        bool chain_ok = chain == target;
        // 1 - x - 4/(45x) has derivative -1 + 4/(45x^2), negative once x^2 > 4/45.
        bool decreasing = x0 * x0 > ExactScalar(Rational(4, 45));
        record("e", "33(12 - 5 sqrt5)/76 > 6/17", sgn > 0 && chain_ok && decreasing,
               {{"value", exact_json(target)}, {"difference", exact_json(target - six17)}, {"sign", sgn},
                {"chain_value", exact_json(chain)}, {"chain_matches", chain_ok}, {"decreasing_from_x0", decreasing}},
               "1 - x - 4/(45x) is decreasing for x^2 > 4/45, so the bound at x0 holds on the whole range");
    }
    {
        ExactScalar b = ExactScalar(Rational(0), Rational(4, 15));  // 4/(3 sqrt5)
        ExactScalar half_sq = b * b / ExactScalar(4);
        bool ok = exact_sign(b) > 0 && half_sq == ExactScalar(Rational(4, 45)) && b > ExactScalar(Rational(4, 7));
        record("f", "2 sqrt(4/45) = 4/(3 sqrt5), and 4/(3 sqrt5) > 4/7", ok,
               {{"value", exact_json(b)}, {"half_squared", exact_json(half_sq)}},
               "squaring a positive quantity; single exact evaluation");
    }
    r.details["claims"] = claims;
    r.pass = all;
    return r;
}

}  // namespace f5lab
