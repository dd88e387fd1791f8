#pragma once

#include <vector>

#include "nilclass/multivector.hpp"

namespace nilclass {

class LieStructure;

/// Free CDGA on n degree-1 generators with quadratic differential:
/// dx_k = sum_{i<j} a^k_{ij} x_i x_j, stored exactly as written (the table
/// convention; dual Lie brackets carry the compensating sign).
class CdgaStructure {
  public:
    CdgaStructure(int dim, std::vector<Multivector> differentials);
    static CdgaStructure trivial(int dim);

    int dim() const { return dim_; }
    /// dx_k, 1-based.
    const Multivector& dx(int k) const { return dx_[k - 1]; }
    const std::vector<Multivector>& differentials() const { return dx_; }

    /// d of a degree-1 element given by coefficients.
    Multivector d_of_vector(const Vector& v) const;

    /// Checks d^2 x_k = 0 for every generator (expanded via Leibniz);
    /// equivalent to the Jacobi identity for the dual Lie algebra. Throws
    /// validation_error naming the offending generator.
    void validate() const;

    bool operator==(const CdgaStructure&) const = default;

  private:
    int dim_;
    std::vector<Multivector> dx_;
};

/// Lie algebra by structure constants: [X_i, X_j] = sum_k c^k_{ij} X_k,
/// stored for i<j (antisymmetry implicit). Entry k of the table is the
/// bivector sum_{i<j} c^k_{ij} x_i x_j.
class LieStructure {
  public:
    LieStructure(int dim, std::vector<Multivector> brackets);
    static LieStructure abelian(int dim);

    int dim() const { return dim_; }
    const Multivector& component(int k) const { return c_[k - 1]; }
    const std::vector<Multivector>& components() const { return c_; }
    Rational bracket_coefficient(int i, int j, int k) const;

    /// Jacobi identity, via d^2 = 0 on the dual CDGA.
    void validate() const;

    /// Nilpotency step of the lower central series; 0 for the trivial
    /// algebra convention never arises here (dim >= 1 gives step >= 1).
    int nilpotency_step() const;

    bool operator==(const LieStructure&) const = default;

  private:
    int dim_;
    std::vector<Multivector> c_;
};

/// Eq.-(1) dictionary dx_k(X_i, X_j) = -x_k([X_i, X_j]): a^k_{ij} = -c^k_{ij}.
/// Round trip is the identity.
CdgaStructure dualize(const LieStructure& lie);
LieStructure undualize(const CdgaStructure& cdga);

}  // namespace nilclass
