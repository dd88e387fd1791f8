#include "nilclass/matrix.hpp"

#include "nilclass/int_echelon.hpp"

namespace nilclass {

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw validation_error("matrix product dimension mismatch");
    Matrix p(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                if (rhs(k, j) != 0) p(i, j) += a * rhs(k, j);
            }
        }
    return p;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw validation_error("matrix-vector dimension mismatch");
    Vector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
    return r;
}

bool Matrix::is_zero() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0) return false;
    return true;
}

RrefResult rref(const Matrix& m) {
    Matrix r = m;
    const std::size_t nr = r.rows(), nc = r.cols();
    // Rescaling rows to primitive integer entries leaves the RREF unchanged
    // and keeps the intermediate rationals small.
    for (std::size_t i = 0; i < nr; ++i) {
        BigInt l = 1, g = 0;
        for (std::size_t j = 0; j < nc; ++j) {
            if (r(i, j) == 0) continue;
            l = lcm(l, denominator(r(i, j)));
        }
        for (std::size_t j = 0; j < nc; ++j) {
            if (r(i, j) == 0) continue;
            g = gcd(g, numerator(r(i, j) * Rational(l)));
            if (g == 1) break;
        }
        if (g > 1 || l > 1) {
            const Rational s = g > 0 ? Rational(l, g) : Rational(l);
            for (std::size_t j = 0; j < nc; ++j) r(i, j) *= s;
        }
    }
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        // Any nonzero pivot gives the same (canonical) RREF; prefer entries
        // with small numerator/denominator to limit intermediate growth.
        const auto size_of = [&](std::size_t i) {
            return abs(numerator(r(i, col))) + denominator(r(i, col));
        };
        std::size_t best = nr;
        for (std::size_t i = row; i < nr; ++i) {
            if (r(i, col) == 0) continue;
            if (best == nr || size_of(i) < size_of(best)) best = i;
        }
        if (best == nr) continue;
        if (best != row)
            for (std::size_t j = 0; j < nc; ++j) std::swap(r(row, j), r(best, j));
        const Rational inv_pivot = 1 / r(row, col);
        for (std::size_t j = col; j < nc; ++j) r(row, j) *= inv_pivot;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == row || r(i, col) == 0) continue;
            const Rational f = r(i, col);
            for (std::size_t j = col; j < nc; ++j) r(i, j) -= f * r(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return RrefResult{std::move(r), pivots.size(), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
    // Row scaling preserves rank: clear denominators and run the integer
    // echelon, which is much faster than the full rational RREF.
    IntEchelon ech(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) l = lcm(l, denominator(m(i, j)));
        std::vector<BigInt> row(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) row[j] = numerator(m(i, j) * Rational(l));
        ech.insert(std::move(row));
    }
    return ech.rank();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
    const RrefResult r = rref(m);
    const std::size_t nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t p : r.pivot_columns) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < nc; ++free) {
        if (is_pivot[free]) continue;
        Vector v(nc);
        v[free] = 1;
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivot_columns[i]] = -r.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw validation_error("solve: dimension mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    const RrefResult r = rref(aug);
    Vector x(m.cols());
    for (std::size_t i = 0; i < r.rank; ++i) {
        const std::size_t p = r.pivot_columns[i];
        if (p == m.cols()) return std::nullopt;  // inconsistent row 0 ... 0 | 1
        x[p] = r.reduced(i, m.cols());
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw validation_error("inverse: matrix not square");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const RrefResult r = rref(aug);
    if (r.rank < n || r.pivot_columns[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
    return inv;
}

}  // namespace nilclass
