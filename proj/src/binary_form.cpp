#include "nilclass/binary_form.hpp"

#include <algorithm>

namespace nilclass {

BinaryForm::BinaryForm(int degree, std::vector<Rational> coeffs)
    : degree_(degree), c_(std::move(coeffs)) {
    if (degree_ < 0 || c_.size() != static_cast<std::size_t>(degree_) + 1)
        throw validation_error("binary form needs degree+1 coefficients");
}

bool BinaryForm::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

Rational BinaryForm::evaluate(const Rational& a, const Rational& b) const {
    Rational acc = 0, pa = 1;
    std::vector<Rational> pb(degree_ + 1);
    pb[0] = 1;
    for (int j = 1; j <= degree_; ++j) pb[j] = pb[j - 1] * b;
    for (int j = degree_; j >= 0; --j) {
        acc += c_[j] * pa * pb[j];
        pa *= a;
    }
    return acc;
}

Polynomial BinaryForm::dehomogenized() const {
    // c_j a^(d-j) b^j at b=1: coefficient of t^(d-j) is c_j.
    std::vector<Rational> p(degree_ + 1);
    for (int j = 0; j <= degree_; ++j) p[degree_ - j] = c_[j];
    return Polynomial(std::move(p));
}

int BinaryForm::infinity_multiplicity() const {
    const Polynomial f = dehomogenized();
    if (f.is_zero()) throw validation_error("infinity multiplicity of the zero form");
    return degree_ - f.degree();
}

namespace {

BinaryForm homogenize(const Polynomial& f, int degree) {
    std::vector<Rational> c(degree + 1);
    for (int i = 0; i <= f.degree(); ++i) c[degree - i] = f.coefficient(i);
    return BinaryForm(degree, std::move(c));
}

}  // namespace

BinaryForm binary_gcd(const std::vector<BinaryForm>& forms) {
    std::vector<const BinaryForm*> nonzero;
    for (const auto& f : forms)
        if (!f.is_zero()) nonzero.push_back(&f);
    if (nonzero.empty()) throw validation_error("binary_gcd of all-zero forms");
    // gcd = b^(min infinity multiplicity) * gcd of the dehomogenizations.
    int inf = nonzero.front()->infinity_multiplicity();
    Polynomial g = nonzero.front()->dehomogenized();
    for (std::size_t i = 1; i < nonzero.size(); ++i) {
        inf = std::min(inf, nonzero[i]->infinity_multiplicity());
        g = gcd(g, nonzero[i]->dehomogenized());
    }
    return homogenize(g.monic(), g.degree() + inf);
}

MultiplicityPattern binary_pattern(const BinaryForm& f) {
    if (f.is_zero()) throw validation_error("pattern of the zero form");
    MultiplicityPattern p = squarefree_decomposition(f.dehomogenized()).pattern();
    const int inf = f.infinity_multiplicity();
    if (inf > 0) p.add(inf, 1);
    return p;
}

int distinct_root_count(const BinaryForm& f) { return binary_pattern(f).distinct_roots(); }

bool binary_divides(const BinaryForm& s, const BinaryForm& f) {
    if (s.is_zero()) throw validation_error("division by the zero form");
    if (f.is_zero()) return true;
    if (s.infinity_multiplicity() > f.infinity_multiplicity()) return false;
    return divmod(f.dehomogenized(), s.dehomogenized()).remainder.is_zero();
}

BinaryForm binary_multiply(const BinaryForm& a, const BinaryForm& b) {
    if (a.is_zero() || b.is_zero())
        return BinaryForm(a.degree() + b.degree(),
                          std::vector<Rational>(a.degree() + b.degree() + 1));
    return homogenize(a.dehomogenized() * b.dehomogenized(), a.degree() + b.degree());
}

BinaryForm squarefree_part(const BinaryForm& f) {
    if (f.is_zero()) throw validation_error("squarefree part of the zero form");
    const Polynomial p = f.dehomogenized();
    const Polynomial sf = divmod(p, gcd(p, p.derivative())).quotient.monic();
    const int inf = f.infinity_multiplicity() > 0 ? 1 : 0;
    return homogenize(sf, sf.degree() + inf);
}

}  // namespace nilclass
