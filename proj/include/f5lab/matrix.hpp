#pragma once

#include "f5lab/exact.hpp"
#include "f5lab/graph.hpp"

#include <vector>

namespace f5lab {

/// Dense square matrix over Q(sqrt5), row-major.
class ExactMatrix {
public:
    ExactMatrix() = default;
    explicit ExactMatrix(int m);

    static ExactMatrix identity(int m);
    static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    int dim() const noexcept { return m_; }
    ExactScalar& operator()(int i, int j) { return e_[static_cast<std::size_t>(i * m_ + j)]; }
    const ExactScalar& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i * m_ + j)]; }

    ExactMatrix transpose() const;
    bool is_symmetric() const;
    /// Gauss-Jordan over the field; throws PreconditionViolated when singular.
    ExactMatrix inverse() const;
    /// Largest |entry| (exact).
    ExactScalar max_abs() const;

    ExactMatrix& operator+=(const ExactMatrix& o);
    ExactMatrix& operator-=(const ExactMatrix& o);
    ExactMatrix& operator*=(const ExactScalar& s);

    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(ExactMatrix a, const ExactScalar& s) { return a *= s; }
    friend ExactMatrix operator*(const ExactScalar& s, ExactMatrix a) { return a *= s; }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

private:
    void require_same(const ExactMatrix& o) const;

    int m_ = 0;
    std::vector<ExactScalar> e_;
};

/// 1 on the diagonal and at offsets +-1 mod m. Throws DimensionTooSmall for m < 3.
ExactMatrix circulant_W(int m);
ExactMatrix all_ones_J(int m);
ExactMatrix adjacency(const Graph& g);

}  // namespace f5lab
