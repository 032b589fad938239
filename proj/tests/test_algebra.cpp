#include "oracles.hpp"

#include "f5lab/construct.hpp"
#include "f5lab/error.hpp"
#include "f5lab/exact.hpp"
#include "f5lab/lemmas.hpp"
#include "f5lab/matrix.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace f5lab;

TEST_SUITE("algebra") {

TEST_CASE("rationals stay canonical") {
    Rational r(6, -4);
    CHECK(r.numerator() == "-3");
    CHECK(r.denominator() == "2");
    CHECK(Rational::parse("0.125") == Rational(1, 8));
    CHECK(Rational::parse("-7/21") == Rational(-1, 3));
    CHECK(Rational::dyadic(3, 4) == Rational(3, 16));
    CHECK_THROWS_AS(Rational(1, 0), Error);
    CHECK_THROWS_AS(Rational::parse("1/x"), Error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(abs(Rational(-5, 7)) == Rational(5, 7));
    // Products that overflow 64 bits.
    Rational big = pow(Rational(10), 30) / pow(Rational(3), 20);
    CHECK(big * pow(Rational(3), 20) == pow(Rational(10), 30));
}

TEST_CASE("quadratic field arithmetic") {
    ExactScalar s = sqrt5();
    CHECK(s * s == ExactScalar(5));
    ExactScalar x(Rational(3), Rational(-1));
    CHECK(x * (ExactScalar(1) / x) == ExactScalar(1));
    CHECK_THROWS_AS(x / ExactScalar(0), Error);
    ExactScalar beta(Rational(0), Rational(4, 15));
    CHECK(beta * ExactScalar(3) * s == ExactScalar(4));  // 4/(3 sqrt5)
    CHECK(std::abs(beta.to_double() - oracle::constants::beta) < 1e-15);
    CHECK(max(x, beta) == x);
    CHECK(abs(-x) == x);
}

TEST_CASE("exact sign examples") {
    CHECK(exact_sign(ExactScalar(0)) == 0);
    ExactScalar s0sq(Rational(661, 45), Rational(-32, 5));
    CHECK(exact_sign(s0sq) == 1);
    CHECK(std::abs(s0sq.to_double() - oracle::constants::s0_squared) < 1e-12);
    CHECK(exact_sign(ExactScalar(Rational(3), Rational(-1))) == 1);
    CHECK(exact_sign(ExactScalar(Rational(-3), Rational(1))) == -1);
    CHECK(exact_sign(ExactScalar(Rational(2), Rational(-1))) == -1);
    CHECK(exact_sign(ExactScalar(Rational(0), Rational(-1, 7))) == -1);
}

TEST_CASE("exact sign agrees with floating point on random inputs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> num(-2000, 2000), den(1, 300);
    int compared = 0;
    for (int i = 0; i < 10000; ++i) {
        ExactScalar x(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        double v = x.a.to_double() + x.b.to_double() * std::sqrt(5.0);
        if (std::abs(v) <= 1e-6) continue;
        ++compared;
        CHECK(exact_sign(x) == (v > 0 ? 1 : -1));
    }
    CHECK(compared > 9900);
    // Near-cancellation: consecutive convergents of sqrt5.
    CHECK(exact_sign(ExactScalar(Rational(9349), Rational(-4181))) == -1);
    CHECK(exact_sign(ExactScalar(Rational(-15127), Rational(6765))) == -1);
    CHECK(exact_sign(ExactScalar(Rational(15127), Rational(-6765))) == 1);
}

TEST_CASE("polynomials and the negativity certificate") {
    Polynomial p({Rational(-16), Rational(96), Rational(-225), Rational(135)});
    CHECK(p(Rational(0)) == Rational(-16));
    CHECK(p(Rational(1)) == Rational(-10));
    CHECK(p.derivative() == Polynomial({Rational(96), Rational(-450), Rational(405)}));
    auto cert = certify_negative(p, Rational(0), Rational(1));
    CHECK(cert.holds);
    CHECK_FALSE(cert.cover.empty());
    for (const auto& [lo, hi] : cert.cover) CHECK(p.upper_bound_nonneg(lo, hi).sign() < 0);

    // x - 1/2 has a root inside; the certificate must give up.
    auto bad = certify_negative(Polynomial({Rational(-1, 2), Rational(1)}), Rational(0), Rational(1), 8);
    CHECK_FALSE(bad.holds);
}

TEST_CASE("circulant, all-ones and adjacency matrices") {
    CHECK(circulant_W(3) == all_ones_J(3));
    ExactMatrix w5 = circulant_W(5);
    std::vector<int> row0{1, 1, 0, 0, 1};
    for (int j = 0; j < 5; ++j) CHECK(w5(0, j) == ExactScalar(row0[static_cast<std::size_t>(j)]));
    CHECK_THROWS_AS(circulant_W(2), Error);
    ExactMatrix a = adjacency(cycle_graph(5));
    for (int i = 0; i < 5; ++i) {
        ExactScalar sum;
        for (int j = 0; j < 5; ++j) sum += a(i, j);
        CHECK(sum == ExactScalar(2));
    }
    CHECK(a.is_symmetric());
    CHECK(a * a.inverse() == ExactMatrix::identity(5));
}

TEST_CASE("inverse of the gamma adjacency matrix") {
    for (int d : {2, 5, 12}) {
        auto r = verify_gamma_inverse(d);
        CHECK(r.pass);
        CHECK(r.lemma == "gamma-inverse");
        CHECK(r.parameter == d);
        CHECK(r.details["max_deviation"]["exact"] == "0");
    }
    CHECK_THROWS_AS(verify_gamma_inverse(1), Error);
}

TEST_CASE("conjugation identity") {
    for (int d : {2, 7, 12}) CHECK(verify_conjugation(d).pass);
}

TEST_CASE("pentagon identity") {
    auto r = verify_pentagon_identity();
    CHECK(r.pass);
    CHECK(r.details["lhs_symmetric"] == true);
    ExactMatrix inv = adjacency(cycle_graph(5)).inverse();
    ExactMatrix lhs = inv.transpose() * pentagon_B() * inv;
    CHECK(lhs(0, 1) == ExactScalar(0));
    CHECK(lhs(0, 2) == ExactScalar(Rational(1, 2)));
    // y^T B y = (sum y)^2 - sum y_i y_{i+1}
    std::vector<Rational> y{Rational(1), Rational(2), Rational(3), Rational(5), Rational(7)};
    ExactMatrix b = pentagon_B();
    Rational quad, sum, rim;
    for (int i = 0; i < 5; ++i) {
        sum += y[static_cast<std::size_t>(i)];
        rim += y[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>((i + 1) % 5)];
        for (int j = 0; j < 5; ++j) quad += b(i, j).a * y[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
    }
    CHECK(quad == sum * sum - rim);
}

TEST_CASE("quadratic form gap") {
    Graph c5 = cycle_graph(5);
    std::vector<Rational> flat(5, Rational(3, 7));
    CHECK(quadratic_form_gap(c5, flat, Rational(3, 7)) == Rational(0));
    std::vector<Rational> z{Rational(1), Rational(1), Rational(1), Rational(1), Rational(2)};
    // zAz/2 = 1+1+1+2+2 = 7; d*sum*z0 - d*m*z0^2/2 = 2*6 - 5 = 7
    CHECK(quadratic_form_gap(c5, z, Rational(1)) == Rational(0));
    CHECK(quadratic_form_gap(c5, z, Rational(0)) == Rational(7));
    CHECK(quadratic_form_gap(c5, z, Rational(1, 2)).sign() >= 0);
    CHECK_THROWS_AS(quadratic_form_gap(Graph(3, {{0, 1}}), std::vector<Rational>(3, Rational(1)), Rational(0)), Error);
    CHECK_THROWS_AS(quadratic_form_gap(c5, z, Rational(2)), Error);
}

TEST_CASE("quadratic form gap is nonnegative on random regular instances") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> pick(0, 2), dim(5, 12), gd(2, 5), val(0, 40);
    for (int trial = 0; trial < 500; ++trial) {
        Graph f;
        switch (pick(rng)) {
        case 0: f = cycle_graph(dim(rng)); break;
        case 1: f = gamma_graph(gd(rng)); break;
        default: f = cycle_graph(dim(rng)).complement(); break;
        }
        std::vector<Rational> z;
        for (int i = 0; i < f.order(); ++i) z.emplace_back(val(rng), 8);
        Rational z0 = *std::min_element(z.begin(), z.end());
        z0 = z0 * Rational(val(rng), 40);
        CHECK(quadratic_form_gap(f, z, z0).sign() >= 0);
    }
}

}  // TEST_SUITE
