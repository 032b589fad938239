#include "f5lab/lemmas.hpp"

#include "f5lab/construct.hpp"
#include "f5lab/error.hpp"

#include <string>

namespace f5lab {

namespace {

void require_d(int d) {
    if (d < 2)
        throw Error(ErrorKind::PreconditionViolated,
                    "d must be at least 2 (W_{3d-1} is undefined for d = 1), got " + std::to_string(d));
}

nlohmann::json deviation_details(const ExactMatrix& lhs, const ExactMatrix& rhs) {
    ExactScalar dev = (lhs - rhs).max_abs();
    return {{"dimension", lhs.dim()}, {"max_deviation", exact_json(dev)}};
}

}  // namespace

CertificateReport verify_gamma_inverse(int d) {
    require_d(d);
    int m = 3 * d - 1;
    ExactMatrix a = adjacency(gamma_graph(d));
    ExactMatrix claimed = circulant_W(m) - all_ones_J(m) * ExactScalar(Rational(1, d));
    ExactMatrix product = a * claimed;
    ExactMatrix id = ExactMatrix::identity(m);
    CertificateReport r{"gamma-inverse", d, product == id, deviation_details(product, id)};
    r.details["symmetric"] = a.is_symmetric() && claimed.is_symmetric();
    r.pass = r.pass && r.details["symmetric"].get<bool>();
    return r;
}

CertificateReport verify_conjugation(int d) {
    require_d(d);
    int m = 3 * d - 1;
    ExactMatrix a = adjacency(gamma_graph(d));
    ExactMatrix inv = circulant_W(m) - all_ones_J(m) * ExactScalar(Rational(1, d));
    ExactScalar half(Rational(1, 2));
    ExactMatrix middle = a * half - all_ones_J(m) * ExactScalar(Rational(static_cast<long long>(d) * (d - 1), 2));
    ExactMatrix lhs = inv.transpose() * middle * inv;
    ExactMatrix rhs = (circulant_W(m) - all_ones_J(m)) * half;
    CertificateReport r{"conjugation", d, lhs == rhs, deviation_details(lhs, rhs)};
    // Cross-check the closed form against Gauss-Jordan.
    r.details["inverse_matches_gauss_jordan"] = a.inverse() == inv;
    r.pass = r.pass && r.details["inverse_matches_gauss_jordan"].get<bool>();
    return r;
}

ExactMatrix pentagon_B() {
    Rational h(1, 2), o(1);
    return ExactMatrix::from_rows({{o, h, o, o, h}, {h, o, h, o, o}, {o, h, o, h, o}, {o, o, h, o, h}, {h, o, o, h, o}});
}

Graph pentagram_Q() { return Graph(5, {{0, 2}, {1, 3}, {2, 4}, {0, 3}, {1, 4}}); }

CertificateReport verify_pentagon_identity() {
    ExactMatrix a = adjacency(gamma_graph(2));
    ExactMatrix inv = a.inverse();
    ExactMatrix lhs = inv.transpose() * pentagon_B() * inv;
    ExactMatrix rhs = adjacency(pentagram_Q()) * ExactScalar(Rational(1, 2));
    CertificateReport r{"pentagon-identity", nullptr, lhs == rhs, deviation_details(lhs, rhs)};
    r.details["lhs_symmetric"] = lhs.is_symmetric();
    r.details["B_symmetric"] = pentagon_B().is_symmetric();
    r.pass = r.pass && lhs.is_symmetric();
    return r;
}

Rational quadratic_form_gap(const Graph& f, const std::vector<Rational>& z, const Rational& z0) {
    const int m = f.order();
    if (!f.is_regular()) throw Error(ErrorKind::NotRegular, "graph is not regular");
    if (static_cast<int>(z.size()) != m)
        throw Error(ErrorKind::PreconditionViolated, "vector length " + std::to_string(z.size()) + " != " + std::to_string(m));
    if (z0.sign() < 0) throw Error(ErrorKind::PreconditionViolated, "z0 must be nonnegative");
    for (const auto& zi : z)
        if (zi < z0) throw Error(ErrorKind::PreconditionViolated, "every z_i must be at least z0");
    const Rational d(m == 0 ? 0 : f.degree(0));
    Rational quad(0), total(0);
    for (const auto& [u, v] : f.edges()) quad += z[static_cast<std::size_t>(u)] * z[static_cast<std::size_t>(v)];
    for (const auto& zi : z) total += zi;
    // z^T A z / 2 equals the sum over edges of z_u z_v.
    return quad - (d * total * z0 - Rational(1, 2) * d * Rational(m) * z0 * z0);
}

}  // namespace f5lab
