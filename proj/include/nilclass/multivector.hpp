#pragma once

#include <initializer_list>
#include <map>
#include <vector>

#include "nilclass/matrix.hpp"
#include "nilclass/rational.hpp"

namespace nilclass {

/// Index sets {i_1 < ... < i_k} subset of {1..n}, n <= 8, encoded as
/// bitmasks with bit (i-1) for index i.
using IndexMask = unsigned;

/// Lexicographic order on the sorted index tuples ({1,4} before {2,3}),
/// which is NOT the numeric order of the masks.
struct MaskLexLess {
    bool operator()(IndexMask a, IndexMask b) const {
        if (a == b) return false;
        const IndexMask diff = a ^ b;
        return (a & (diff & (~diff + 1u))) != 0;
    }
};

IndexMask mask_from_indices(std::initializer_list<int> indices, int ambient);
std::vector<int> indices_from_mask(IndexMask m);

/// All k-subsets of {1..n} as masks, in lexicographic order of the tuples.
/// This fixes the coordinate order of every serialized object.
const std::vector<IndexMask>& k_subsets_lex(int n, int k);

/// Position of a mask within k_subsets_lex(n, k).
std::size_t subset_position(int n, int k, IndexMask m);

/// Element of Lambda^k(k^n): exact coefficients on the lex-ordered basis of
/// k-index sets. Absent keys are zero. Immutable in spirit: mutation is
/// limited to construction-time accumulation.
class Multivector {
  public:
    Multivector(int ambient, int degree);

    int ambient() const { return ambient_; }
    int degree() const { return degree_; }
    bool is_zero() const { return coeff_.empty(); }

    const Rational& coefficient(IndexMask m) const;
    void add_term(IndexMask m, const Rational& c);
    void add_term(std::initializer_list<int> indices, const Rational& c);
    const std::map<IndexMask, Rational, MaskLexLess>& terms() const { return coeff_; }

    Multivector operator+(const Multivector& rhs) const;
    Multivector operator-(const Multivector& rhs) const;
    Multivector operator*(const Rational& s) const;
    bool operator==(const Multivector&) const = default;

    /// Coefficient row on the lex-ordered degree-k basis.
    Vector coefficient_vector() const;
    static Multivector from_coefficient_vector(int ambient, int degree, const Vector& v);

  private:
    int ambient_, degree_;
    std::map<IndexMask, Rational, MaskLexLess> coeff_;
};

/// Graded-commutative product; zero when the degrees exceed the ambient dim.
Multivector wedge(const Multivector& a, const Multivector& b);

/// The skew-symmetric n x n matrix of a bivector.
Matrix skew_matrix(const Multivector& phi);

/// Rank of the bivector as a bilinear form; always even, 0 iff phi = 0.
int bivector_rank(const Multivector& phi);

/// Basis of the associated subspace U_phi (column space of the skew matrix);
/// its dimension equals bivector_rank(phi).
std::vector<Vector> support(const Multivector& phi);

/// Coefficient of x_1...x_6 in phi^3/6 for a bivector on k^6; zero iff
/// rank(phi) <= 4.
Rational pfaffian_cubic(const Multivector& phi);

/// For omega in Lambda^4(k^5): the covector u with coefficient-of
/// (x_1..x^j..x_5) mapped to (-1)^(j+1) v_j, so that x_1x_2x_3x_4 -> v_5.
Vector contract_to_covector(const Multivector& omega);

/// Induced action of a basis change on multivectors: x_i -> sum_j P(j,i) x_j,
/// extended multiplicatively.
Multivector apply_linear_map(const Multivector& v, const Matrix& p);

/// Value of a bivector on a pair of covectors: sum a_ij (u_i w_j - u_j w_i).
Rational bivector_on_covectors(const Multivector& phi, const Vector& u, const Vector& w);

}  // namespace nilclass
