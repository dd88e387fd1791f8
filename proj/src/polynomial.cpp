#include "nilclass/polynomial.hpp"

#include <sstream>

namespace nilclass {

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    std::vector<Rational> out(std::max(c_.size(), rhs.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coefficient(i) + rhs.coefficient(i);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    std::vector<Rational> out(std::max(c_.size(), rhs.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coefficient(i) - rhs.coefficient(i);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return Polynomial();
    std::vector<Rational> out(c_.size() + rhs.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Rational& s) const {
    std::vector<Rational> out(c_);
    for (auto& x : out) x *= s;
    return Polynomial(std::move(out));
}

Rational Polynomial::evaluate(const Rational& t) const {
    Rational acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rational> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(i);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return *this * (1 / leading());
}

DivMod divmod(const Polynomial& p, const Polynomial& d) {
    if (d.is_zero()) throw validation_error("polynomial division by zero");
    std::vector<Rational> rem(p.coefficients());
    const int dd = d.degree();
    if (p.degree() < dd) return {Polynomial(), p};
    std::vector<Rational> quo(p.degree() - dd + 1);
    for (int i = p.degree(); i >= dd; --i) {
        const Rational f = rem[i] / d.leading();
        if (f == 0) continue;
        quo[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.coefficient(j);
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

int distinct_root_count(const Polynomial& p) {
    if (p.is_zero()) throw validation_error("distinct_root_count of zero polynomial");
    if (p.degree() == 0) return 0;
    return p.degree() - gcd(p, p.derivative()).degree();
}

std::string MultiplicityPattern::to_string() const {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
        for (int k = 0; k < it->second; ++k) {
            if (!first) os << ",";
            os << it->first;
            first = false;
        }
    }
    os << ")";
    return os.str();
}

MultiplicityPattern SquarefreeDecomposition::pattern() const {
    MultiplicityPattern p;
    for (std::size_t i = 0; i < factors.size(); ++i)
        p.add(static_cast<int>(i) + 1, factors[i].degree());
    return p;
}

Polynomial SquarefreeDecomposition::reassemble() const {
    Polynomial prod = Polynomial::constant(content);
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t k = 0; k <= i; ++k) prod = prod * factors[i];
    return prod;
}

SquarefreeDecomposition squarefree_decomposition(const Polynomial& p) {
    if (p.is_zero()) throw validation_error("undefined decomposition");
    SquarefreeDecomposition out;
    out.content = p.leading();
    const Polynomial f = p.monic();
    if (f.degree() == 0) return out;
    // Yun's algorithm, characteristic 0.
    const Polynomial a0 = gcd(f, f.derivative());
    Polynomial b = divmod(f, a0).quotient;
    Polynomial d = divmod(f.derivative(), a0).quotient - b.derivative();
    while (b.degree() > 0) {
        const Polynomial s = gcd(b, d);
        out.factors.push_back(s);
        b = divmod(b, s).quotient;
        d = divmod(d, s).quotient - b.derivative();
    }
    return out;
}

Polynomial char_poly(const Matrix& m) {
    if (m.rows() != m.cols()) throw validation_error("char_poly: matrix not square");
    const std::size_t n = m.rows();
    // Faddeev-LeVerrier: p(t) = t^n + c_1 t^(n-1) + ... + c_n.
    std::vector<Rational> coeffs(n + 1);
    coeffs[n] = 1;
    Matrix mk = m;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            Matrix shifted = mk;
            for (std::size_t i = 0; i < n; ++i) shifted(i, i) += coeffs[n - k + 1];
            mk = m * shifted;
        }
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += mk(i, i);
        coeffs[n - k] = -tr / Rational(k);
    }
    return Polynomial(std::move(coeffs));
}

Polynomial minimal_polynomial(const Matrix& m) {
    if (m.rows() != m.cols()) throw validation_error("minimal_polynomial: matrix not square");
    const std::size_t n = m.rows();
    std::vector<Matrix> powers{Matrix::identity(n)};
    for (std::size_t d = 1;; ++d) {
        powers.push_back(powers.back() * m);
        // Look for c_0 I + c_1 m + ... + m^d = 0.
        Matrix sys(n * n, d);
        Vector b(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < d; ++k) sys(i * n + j, k) = powers[k](i, j);
                b[i * n + j] = -powers[d](i, j);
            }
        if (auto x = solve(sys, b)) {
            std::vector<Rational> coeffs(*x);
            coeffs.push_back(1);
            return Polynomial(std::move(coeffs));
        }
    }
}

}  // namespace nilclass
