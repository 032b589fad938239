#include "f5lab/exact.hpp"

#include "f5lab/error.hpp"

#include <cmath>
#include <algorithm>

namespace f5lab {

Rational::Rational(long long num, long long den) {
    if (den == 0) throw Error(ErrorKind::PreconditionViolated, "zero denominator");
    q_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return Error(ErrorKind::Parse, "not a rational number: '" + s + "'"); };
    if (s.empty()) throw bad();
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw bad();
        if (q.get_den() == 0) throw bad();
        q.canonicalize();
        return Rational(q);
    }
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (negative || (!whole.empty() && whole[0] == '+')) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos ||
        whole.find_first_not_of("0123456789") != std::string::npos)
        throw bad();
    mpz_class num(whole + frac, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    mpq_class q(negative ? mpz_class(-num) : num, den);
    q.canonicalize();
    return Rational(q);
}

Rational Rational::dyadic(long long num, unsigned k) {
    mpq_class q(static_cast<long>(num));
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), k);
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::PreconditionViolated, "division by zero");
    q_ /= o.q_;
    return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, unsigned k) {
    Rational out(1);
    for (unsigned i = 0; i < k; ++i) out *= r;
    return out;
}

double ExactScalar::to_double() const { return a.to_double() + b.to_double() * std::sqrt(5.0); }

std::string ExactScalar::to_string() const {
    if (b.is_zero()) return a.to_string();
    std::string surd = b.to_string() + "*sqrt5";
    if (a.is_zero()) return surd;
    if (b.sign() < 0) return a.to_string() + " - " + (-b).to_string() + "*sqrt5";
    return a.to_string() + " + " + surd;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
    a += o.a;
    if (!o.b.is_zero()) b += o.b;
    return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
    a -= o.a;
    if (!o.b.is_zero()) b -= o.b;
    return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
    if (b.is_zero() && o.b.is_zero()) {
        a *= o.a;
        return *this;
    }
    // (a + b r)(c + e r) = (ac + 5be) + (ae + bc) r
    Rational na = a * o.a + Rational(5) * b * o.b;
    Rational nb = a * o.b + b * o.a;
    a = std::move(na);
    b = std::move(nb);
    return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
    if (o.is_zero()) throw Error(ErrorKind::PreconditionViolated, "division by zero");
    if (o.b.is_zero()) {
        a /= o.a;
        b /= o.a;
        return *this;
    }
    Rational norm = o.a * o.a - Rational(5) * o.b * o.b;
    *this *= ExactScalar(o.a, -o.b);
    a /= norm;
    b /= norm;
    return *this;
}

ExactScalar sqrt5() { return {Rational(0), Rational(1)}; }

int exact_sign(const ExactScalar& x) {
    int sa = x.a.sign(), sb = x.b.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: the larger of a^2 and 5 b^2 wins.
    int c = (x.a * x.a <=> Rational(5) * x.b * x.b) < 0 ? -1 : 1;
    return c > 0 ? sa : sb;
}

ExactScalar max(const ExactScalar& x, const ExactScalar& y) { return x < y ? y : x; }
ExactScalar abs(const ExactScalar& x) { return exact_sign(x) < 0 ? -x : x; }

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Polynomial::operator()(double x) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
}

Polynomial Polynomial::derivative() const {
    std::vector<Rational> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rational(static_cast<long long>(k)));
    return Polynomial(std::move(d));
}

Rational Polynomial::upper_bound_nonneg(const Rational& lo, const Rational& hi) const {
    if (lo.sign() < 0 || hi < lo) throw Error(ErrorKind::PreconditionViolated, "interval must satisfy 0 <= lo <= hi");
    Rational bound(0), plo(1), phi(1);
    for (const auto& c : c_) {
        bound += c * (c.sign() > 0 ? phi : plo);
        plo *= lo;
        phi *= hi;
    }
    return bound;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.c_.empty() || q.c_.empty()) return {};
    std::vector<Rational> out(p.c_.size() + q.c_.size() - 1);
    for (std::size_t i = 0; i < p.c_.size(); ++i)
        for (std::size_t j = 0; j < q.c_.size(); ++j) out[i + j] += p.c_[i] * q.c_[j];
    return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<Rational> out(std::max(p.c_.size(), q.c_.size()));
    for (std::size_t i = 0; i < p.c_.size(); ++i) out[i] += p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) out[i] += q.c_[i];
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    std::vector<Rational> out(std::max(p.c_.size(), q.c_.size()));
    for (std::size_t i = 0; i < p.c_.size(); ++i) out[i] += p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) out[i] -= q.c_[i];
    return Polynomial(std::move(out));
}

NegativityCertificate certify_negative(const Polynomial& p, const Rational& lo, const Rational& hi,
                                       unsigned max_depth) {
    NegativityCertificate cert;
    if (p(lo).sign() >= 0) {
        cert.stuck = {lo, lo};
        return cert;
    }
    if (p(hi).sign() >= 0) {
        cert.stuck = {hi, hi};
        return cert;
    }
    Rational min_width = (hi - lo) * Rational::dyadic(1, max_depth);
    std::vector<std::pair<Rational, Rational>> stack{{lo, hi}};
    while (!stack.empty()) {
        auto [l, r] = stack.back();
        stack.pop_back();
        if (p.upper_bound_nonneg(l, r).sign() < 0) {
            cert.cover.emplace_back(l, r);
            continue;
        }
        if (r - l <= min_width) {
            cert.stuck = {l, r};
            return cert;
        }
        Rational mid = (l + r) * Rational(1, 2);
        stack.emplace_back(mid, r);
        stack.emplace_back(l, mid);
    }
    cert.holds = true;
    return cert;
}

}  // namespace f5lab
