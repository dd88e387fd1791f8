#pragma once

#include <vector>

#include "nilclass/polynomial.hpp"

namespace nilclass {

/// Homogeneous binary form F(a, b) = sum_j c_j a^(d-j) b^j on P^1. The
/// dehomogenization F(t, 1) drops the root at [1:0], whose multiplicity is
/// tracked separately so patterns and gcds are scheme-correct.
class BinaryForm {
  public:
    BinaryForm(int degree, std::vector<Rational> coeffs);

    int degree() const { return degree_; }
    bool is_zero() const;
    const Rational& coefficient(int j) const { return c_[j]; }
    Rational evaluate(const Rational& a, const Rational& b) const;

    /// f(t) = F(t, 1).
    Polynomial dehomogenized() const;
    /// Multiplicity of the root [1:0], i.e. degree - deg F(t,1).
    int infinity_multiplicity() const;

  private:
    int degree_;
    std::vector<Rational> c_;
};

/// gcd in k[a, b] of the nonzero forms in the list; all-zero input is an
/// error. The result is monic in the sense that its dehomogenization is.
BinaryForm binary_gcd(const std::vector<BinaryForm>& forms);

/// Root multiplicities over the algebraic closure, point at infinity
/// included; total degree of the pattern = degree of the form.
MultiplicityPattern binary_pattern(const BinaryForm& f);

int distinct_root_count(const BinaryForm& f);

/// Whether s divides f exactly.
bool binary_divides(const BinaryForm& s, const BinaryForm& f);

BinaryForm binary_multiply(const BinaryForm& a, const BinaryForm& b);

/// Product of the distinct irreducible factors, each once (root at infinity
/// included).
BinaryForm squarefree_part(const BinaryForm& f);

}  // namespace nilclass
