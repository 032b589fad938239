#pragma once

#include "f5lab/graph.hpp"
#include "f5lab/matrix.hpp"
#include "f5lab/report.hpp"

#include <vector>

namespace f5lab {

/// A_d (W_{3d-1} - J/d) == I exactly. d >= 2.
CertificateReport verify_gamma_inverse(int d);

/// (A_d^{-1})^T (A_d/2 - C(d,2) J) A_d^{-1} == (W - J)/2 exactly. d >= 2.
CertificateReport verify_conjugation(int d);

/// The 5x5 matrix B with y^T B y = (sum y)^2 - sum y_i y_{i+1}.
ExactMatrix pentagon_B();
/// Pentagram {02, 13, 24, 30, 41}.
Graph pentagram_Q();

/// (A_2^{-1})^T B A_2^{-1} == A_Q / 2.
CertificateReport verify_pentagon_identity();

/// z^T A_F z / 2 - (d * sum(z) * z0 - d m z0^2 / 2) for d-regular F and min z_i >= z0 >= 0.
/// Throws NotRegular or PreconditionViolated.
Rational quadratic_form_gap(const Graph& f, const std::vector<Rational>& z, const Rational& z0);

}  // namespace f5lab
