#pragma once

#include <map>
#include <vector>

#include "nilclass/matrix.hpp"
#include "nilclass/rational.hpp"

namespace nilclass {

/// Univariate polynomial over the rationals, coefficients stored by degree
/// with trailing zeros trimmed. The zero polynomial has degree -1.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Polynomial constant(const Rational& c) { return Polynomial({c}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& coefficient(std::size_t i) const {
        static const Rational kZero{0};
        return i < c_.size() ? c_[i] : kZero;
    }
    const Rational& leading() const { return c_.back(); }
    const std::vector<Rational>& coefficients() const { return c_; }

    bool operator==(const Polynomial&) const = default;

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const Rational& s) const;
    Rational evaluate(const Rational& t) const;
    Polynomial derivative() const;
    Polynomial monic() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Euclidean division: p = q * d + r with deg r < deg d.
struct DivMod {
    Polynomial quotient, remainder;
};
DivMod divmod(const Polynomial& p, const Polynomial& d);

/// Monic gcd over Q; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Number of distinct roots over the algebraic closure: deg(p / gcd(p, p')).
int distinct_root_count(const Polynomial& p);

/// Multiset of (multiplicity, count of geometric roots with it), summing
/// multiplicity * count to the degree of the analyzed form.
struct MultiplicityPattern {
    std::map<int, int> pairs;  // multiplicity -> number of geometric roots

    int total_degree() const {
        int t = 0;
        for (auto [m, c] : pairs) t += m * c;
        return t;
    }
    int distinct_roots() const {
        int t = 0;
        for (auto [m, c] : pairs) t += c;
        return t;
    }
    void add(int multiplicity, int count) {
        if (count > 0) pairs[multiplicity] += count;
    }
    /// Multiplicities listed once per geometric root, descending: "(2,1)".
    std::string to_string() const;
    bool operator==(const MultiplicityPattern&) const = default;
};

/// Yun decomposition p = c * prod s_i^i with the s_i squarefree and pairwise
/// coprime; valid over the algebraic closure in characteristic 0.
struct SquarefreeDecomposition {
    Rational content;                 // leading coefficient c
    std::vector<Polynomial> factors;  // factors[i] = s_{i+1}, monic

    MultiplicityPattern pattern() const;
    Polynomial reassemble() const;
};
SquarefreeDecomposition squarefree_decomposition(const Polynomial& p);

/// Exact characteristic polynomial det(tI - m), monic of degree = size.
Polynomial char_poly(const Matrix& m);

/// Minimal polynomial, via the first linear dependency among powers of m.
Polynomial minimal_polynomial(const Matrix& m);

}  // namespace nilclass
