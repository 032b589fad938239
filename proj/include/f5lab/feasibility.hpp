#pragma once

#include "f5lab/exact.hpp"
#include "f5lab/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace f5lab {

/// One term coef * y_i * y_j, or coef * y_i when j < 0.
struct Term {
    int i = 0;
    int j = -1;
    Rational coef;
};

/// Strict constraint  sum(terms) + constant > 0. The left side is the slack.
struct Constraint {
    std::string label;
    std::vector<Term> terms;
    ExactScalar constant;

    double slack(const std::vector<double>& y) const;
    ExactScalar slack(const std::vector<Rational>& y) const;
};

enum class Domain { Simplex, PositiveOrthant };

struct ConstraintSystem {
    int variables = 0;
    Domain domain = Domain::Simplex;
    std::vector<Constraint> constraints;

    double min_slack(const std::vector<double>& y) const;
    ExactScalar min_slack(const std::vector<Rational>& y) const;
    bool in_domain(const std::vector<Rational>& y) const;
};

/// Variables (x, y1..y5) on the simplex:  sum y_i y_{i+1} > t  and  x (y_{i-1} + y_{i+1}) > t.
ConstraintSystem opt1_system(const Rational& threshold = Rational(4, 45));

/// 3 - 16/(3 sqrt5).
ExactScalar opt2_sum_bound();

/// Variables y_0..y_{3d-2} > 0:  sum over edges of Gamma_d of y_i y_j > t,
/// sum_{j in N(i)} y_j > (6/17) sum y  for each i,  and  sum y < 3 - 16/(3 sqrt5).
ConstraintSystem opt2_system(int d, const Rational& threshold = Rational(4, 45));

struct SlackScan {
    int resolution = 0;
    std::uint64_t points_evaluated = 0;
    std::vector<Rational> best_point;
    double best_min_slack = 0;
    /// Min slack recomputed exactly at best_point.
    ExactScalar best_min_slack_exact;
    /// Best value after each refinement step.
    std::vector<double> trace;
    std::string sampling;
};

struct ScanOptions {
    int resolution = 60;
    int refine_starts = 10;
    int refine_steps = 100;
    /// Direction samples when the lattice is too large (opt-2 only).
    int samples = 50000;
    std::uint64_t lattice_limit = 1000000;
    std::uint64_t seed = 1;
    int threads = 0;  ///< 0 = hardware concurrency
};

/// Barycentric lattice scan of the simplex with exact integer slacks, then exact dyadic refinement.
SlackScan scan_opt1(const Rational& threshold, const ScanOptions& opt);

/// Direction scan over the simplex, best scale s in (0, s0] per direction, coordinate-descent refinement.
SlackScan scan_opt2(int d, const Rational& threshold, const ScanOptions& opt);

/// 135x^3 - 225x^2 + 96x - 16.
Polynomial opt1_cubic();

CertificateReport opt1_certificate(int resolution = 60, const ScanOptions& opt = {});
/// Throws OutOfRange for d outside [2, 12]. resolution 0 picks the largest lattice under the limit.
CertificateReport opt2_certificate(int d, int resolution = 0, const ScanOptions& opt = {});

CertificateReport aes_parameter_check(const ExactScalar& alpha, const ExactScalar& beta, const ExactScalar& delta,
                                      const ExactScalar& gamma);

/// The six scalar claims (a)-(f), each checked exactly with its range reduction recorded.
CertificateReport numeric_claim_audit();

nlohmann::json to_json(const SlackScan& s);

}  // namespace f5lab
