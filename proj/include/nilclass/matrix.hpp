#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nilclass/rational.hpp"

namespace nilclass {

using Vector = std::vector<Rational>;

/// Dense matrix over the rationals. Dimensions are fixed at construction;
/// all arithmetic is exact.
class Matrix {
  public:
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    bool operator==(const Matrix& other) const = default;

    Matrix transposed() const;
    Matrix operator*(const Matrix& rhs) const;
    Vector apply(const Vector& v) const;
    bool is_zero() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

struct RrefResult {
    Matrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivot_columns;
};

/// Reduced row-echelon form; exact, canonical (independent of pivot strategy).
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of the right null space, in the standard free-variable form: one
/// vector per non-pivot column, with a 1 in that coordinate and 0 in the
/// other free coordinates. Count = cols - rank.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Solves m x = b; empty when inconsistent. The returned solution is the one
/// with zero free coordinates.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Inverse of a square matrix; empty when singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace nilclass
