#pragma once

#include <vector>

#include "nilclass/multivector.hpp"

namespace nilclass {

/// A subspace of Lambda^2(k^n) given by a linearly independent basis of
/// bivectors; independence is checked at construction.
class BivectorSubspace {
  public:
    BivectorSubspace(int ambient, std::vector<Multivector> basis);

    int ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Multivector>& basis() const { return basis_; }

    /// The bivector sum_i params[i] * basis[i].
    Multivector combination(const Vector& params) const;

    /// dim x C(n,2) matrix of basis coefficients, columns in lex order.
    Matrix coefficient_matrix() const;

    /// Same span, basis transported by x_i -> sum_j p(j,i) x_j.
    BivectorSubspace transformed(const Matrix& p) const;

  private:
    int ambient_;
    std::vector<Multivector> basis_;
};

}  // namespace nilclass
