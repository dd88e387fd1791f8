#include "nilclass/quadratic_form.hpp"

namespace nilclass {

QuadraticForm::QuadraticForm(Matrix gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols()) throw validation_error("Gram matrix must be square");
    for (std::size_t i = 0; i < gram_.rows(); ++i)
        for (std::size_t j = i + 1; j < gram_.cols(); ++j)
            if (gram_(i, j) != gram_(j, i)) throw validation_error("Gram matrix must be symmetric");
}

Rational QuadraticForm::evaluate(const Vector& v) const { return polar(v, v); }

Rational QuadraticForm::polar(const Vector& u, const Vector& v) const {
    if (u.size() != vars() || v.size() != vars())
        throw validation_error("quadratic form arity mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < vars(); ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < vars(); ++j)
            if (gram_(i, j) != 0 && v[j] != 0) acc += u[i] * gram_(i, j) * v[j];
    }
    return acc;
}

std::size_t QuadraticForm::rank() const { return nilclass::rank(gram_); }

std::vector<QuadraticForm> plucker_quadrics(int n) {
    if (n < 4 || n > 8) throw validation_error("plucker_quadrics requires 4 <= n <= 8");
    const auto& pairs = k_subsets_lex(n, 2);
    const auto& quads = k_subsets_lex(n, 4);
    std::vector<QuadraticForm> out;
    out.reserve(quads.size());
    for (IndexMask q : quads) {
        const auto idx = indices_from_mask(q);  // i < j < k < l
        Matrix gram(pairs.size(), pairs.size());
        const auto add = [&](int a, int b, int c, int d, int sign) {
            const std::size_t p1 = subset_position(n, 2, mask_from_indices({a, b}, n));
            const std::size_t p2 = subset_position(n, 2, mask_from_indices({c, d}, n));
            gram(p1, p2) += Rational(sign, 2);
            gram(p2, p1) += Rational(sign, 2);
        };
        add(idx[0], idx[1], idx[2], idx[3], +1);
        add(idx[0], idx[2], idx[1], idx[3], -1);
        add(idx[0], idx[3], idx[1], idx[2], +1);
        out.emplace_back(std::move(gram));
    }
    return out;
}

Rational evaluate_on_bivector(const QuadraticForm& q, const Multivector& phi) {
    return q.evaluate(phi.coefficient_vector());
}

}  // namespace nilclass
