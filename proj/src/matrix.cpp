#include "f5lab/matrix.hpp"

#include "f5lab/error.hpp"

#include <string>
#include <utility>

namespace f5lab {

ExactMatrix::ExactMatrix(int m) : m_(m), e_(static_cast<std::size_t>(m) * static_cast<std::size_t>(m)) {
    if (m < 0) throw Error(ErrorKind::OutOfRange, "negative dimension");
}

ExactMatrix ExactMatrix::identity(int m) {
    ExactMatrix out(m);
    for (int i = 0; i < m; ++i) out(i, i) = 1;
    return out;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    ExactMatrix out(static_cast<int>(rows.size()));
    for (int i = 0; i < out.m_; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        if (static_cast<int>(row.size()) != out.m_) throw Error(ErrorKind::PreconditionViolated, "matrix rows must be square");
        for (int j = 0; j < out.m_; ++j) out(i, j) = row[static_cast<std::size_t>(j)];
    }
    return out;
}

void ExactMatrix::require_same(const ExactMatrix& o) const {
    if (m_ != o.m_)
        throw Error(ErrorKind::PreconditionViolated,
                    "dimension mismatch " + std::to_string(m_) + " vs " + std::to_string(o.m_));
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(m_);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool ExactMatrix::is_symmetric() const {
    for (int i = 0; i < m_; ++i)
        for (int j = i + 1; j < m_; ++j)
            if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
}

ExactMatrix ExactMatrix::inverse() const {
    ExactMatrix a = *this, inv = identity(m_);
    for (int col = 0; col < m_; ++col) {
        int pivot = col;
        while (pivot < m_ && a(pivot, col).is_zero()) ++pivot;
        if (pivot == m_) throw Error(ErrorKind::PreconditionViolated, "matrix is singular");
        if (pivot != col)
            for (int j = 0; j < m_; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        ExactScalar p = a(col, col);
        for (int j = 0; j < m_; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (int r = 0; r < m_; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            ExactScalar f = a(r, col);
            for (int j = 0; j < m_; ++j) {
                if (!a(col, j).is_zero()) a(r, j) -= f * a(col, j);
                if (!inv(col, j).is_zero()) inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

ExactScalar ExactMatrix::max_abs() const {
    ExactScalar best;
    for (const auto& x : e_) best = max(best, abs(x));
    return best;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
    require_same(o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
    require_same(o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator*=(const ExactScalar& s) {
    for (auto& x : e_) x *= s;
    return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    a.require_same(b);
    const int m = a.m_;
    ExactMatrix out(m);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) {
            const auto& x = a(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < m; ++j) {
                const auto& y = b(k, j);
                if (!y.is_zero()) out(i, j) += x * y;
            }
        }
    return out;
}

ExactMatrix circulant_W(int m) {
    if (m < 3) throw Error(ErrorKind::DimensionTooSmall, "W_m needs m >= 3, got " + std::to_string(m));
    ExactMatrix w(m);
    for (int i = 0; i < m; ++i) {
        w(i, i) = 1;
        w(i, (i + 1) % m) = 1;
        w(i, (i + m - 1) % m) = 1;
    }
    return w;
}

ExactMatrix all_ones_J(int m) {
    ExactMatrix j(m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) j(r, c) = 1;
    return j;
}

ExactMatrix adjacency(const Graph& g) {
    ExactMatrix a(g.order());
    for (const auto& [u, v] : g.edges()) {
        a(u, v) = 1;
        a(v, u) = 1;
    }
    return a;
}

}  // namespace f5lab
