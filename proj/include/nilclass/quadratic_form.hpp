#pragma once

#include <vector>

#include "nilclass/matrix.hpp"
#include "nilclass/multivector.hpp"

namespace nilclass {

/// Quadratic form q(v) = v^T G v with G symmetric; exact rank via RREF.
class QuadraticForm {
  public:
    explicit QuadraticForm(Matrix gram);

    std::size_t vars() const { return gram_.rows(); }
    const Matrix& gram() const { return gram_; }
    bool is_zero() const { return gram_.is_zero(); }

    Rational evaluate(const Vector& v) const;
    /// Polar bilinear form u^T G v; q(u+v) = q(u) + 2 polar(u,v) + q(v).
    Rational polar(const Vector& u, const Vector& v) const;
    std::size_t rank() const;

  private:
    Matrix gram_;
};

/// The C(n,4) Plucker quadrics on the C(n,2) coordinates a_{ij} of a
/// bivector, indexed by the 4-subsets {i<j<k<l} in lexicographic order:
///     a_ij a_kl - a_ik a_jl + a_il a_jk.
/// A bivector has rank <= 2 iff all of them vanish on it; the signs follow
/// the expansion of phi ^ phi.
std::vector<QuadraticForm> plucker_quadrics(int n);

/// Value of one Plucker quadric at a bivector (coordinates in lex order).
Rational evaluate_on_bivector(const QuadraticForm& q, const Multivector& phi);

}  // namespace nilclass
