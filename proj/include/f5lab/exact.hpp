#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace f5lab {

/// Arbitrary-precision rational in lowest terms, denominator positive.
class Rational {
public:
    Rational() = default;
    Rational(long long v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    Rational(long long num, long long den);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// "p", "-p/q" or a finite decimal such as "0.125".
    static Rational parse(std::string_view text);
    /// 2^-k.
    static Rational dyadic(long long num, unsigned k);

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    std::string numerator() const { return q_.get_num().get_str(); }
    std::string denominator() const { return q_.get_den().get_str(); }
    std::string to_string() const { return q_.get_str(); }
    double to_double() const { return q_.get_d(); }
    const mpq_class& raw() const noexcept { return q_; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    mpq_class q_{0};
};

Rational abs(const Rational& r);
Rational pow(const Rational& r, unsigned k);

/// a + b*sqrt(5) with rational a, b.
struct ExactScalar {
    Rational a;
    Rational b;

    ExactScalar() = default;
    ExactScalar(Rational a_) : a(std::move(a_)) {}  // NOLINT(google-explicit-constructor)
    ExactScalar(long long v) : a(v) {}              // NOLINT(google-explicit-constructor)
    ExactScalar(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}

    bool is_rational() const { return b.is_zero(); }
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    double to_double() const;
    /// "a", "b*sqrt5" or "a + b*sqrt5" with exact fractions.
    std::string to_string() const;

    ExactScalar operator-() const { return {-a, -b}; }
    ExactScalar& operator+=(const ExactScalar& o);
    ExactScalar& operator-=(const ExactScalar& o);
    ExactScalar& operator*=(const ExactScalar& o);
    /// Division via the conjugate a - b*sqrt5. Throws PreconditionViolated on zero.
    ExactScalar& operator/=(const ExactScalar& o);

    friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) { return x += y; }
    friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) { return x -= y; }
    friend ExactScalar operator*(ExactScalar x, const ExactScalar& y) { return x *= y; }
    friend ExactScalar operator/(ExactScalar x, const ExactScalar& y) { return x /= y; }
    friend bool operator==(const ExactScalar& x, const ExactScalar& y) { return x.a == y.a && x.b == y.b; }
};

ExactScalar sqrt5();

/// Sign of a + b*sqrt5 from rational comparisons only.
int exact_sign(const ExactScalar& x);

inline bool operator<(const ExactScalar& x, const ExactScalar& y) { return exact_sign(x - y) < 0; }
inline bool operator>(const ExactScalar& x, const ExactScalar& y) { return exact_sign(x - y) > 0; }
inline bool operator<=(const ExactScalar& x, const ExactScalar& y) { return exact_sign(x - y) <= 0; }
inline bool operator>=(const ExactScalar& x, const ExactScalar& y) { return exact_sign(x - y) >= 0; }

ExactScalar max(const ExactScalar& x, const ExactScalar& y);
ExactScalar abs(const ExactScalar& x);

/// Dense univariate polynomial over Q, coefficients by increasing degree.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coefficients() const noexcept { return c_; }
    Rational operator()(const Rational& x) const;
    double operator()(double x) const;
    Polynomial derivative() const;

    /// Sound upper bound on the polynomial over [lo, hi] with lo >= 0: positive terms at hi, negative at lo.
    Rational upper_bound_nonneg(const Rational& lo, const Rational& hi) const;

    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
    friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.c_ == q.c_; }

private:
    void trim();
    std::vector<Rational> c_;
};

struct NegativityCertificate {
    bool holds = false;
    /// Dyadic intervals on which the upper bound came out negative.
    std::vector<std::pair<Rational, Rational>> cover;
    /// Interval whose width fell below the limit, when the check fails.
    std::pair<Rational, Rational> stuck;
};

/// Certifies p < 0 on [lo, hi] (lo >= 0) by dyadic bisection, giving up below width 2^-max_depth.
NegativityCertificate certify_negative(const Polynomial& p, const Rational& lo, const Rational& hi,
                                       unsigned max_depth = 20);

}  // namespace f5lab
