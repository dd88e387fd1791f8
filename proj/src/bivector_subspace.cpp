#include "nilclass/bivector_subspace.hpp"

namespace nilclass {

BivectorSubspace::BivectorSubspace(int ambient, std::vector<Multivector> basis)
    : ambient_(ambient), basis_(std::move(basis)) {
    for (const auto& b : basis_) {
        if (b.ambient() != ambient_) throw validation_error("subspace basis: ambient mismatch");
        if (b.degree() != 2) throw validation_error("subspace basis: expected bivectors");
    }
    if (!basis_.empty() && rank(coefficient_matrix()) != basis_.size())
        throw validation_error("subspace basis is linearly dependent");
}

Multivector BivectorSubspace::combination(const Vector& params) const {
    if (params.size() != basis_.size()) throw validation_error("combination arity mismatch");
    Multivector acc(ambient_, 2);
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (params[i] != 0) acc = acc + basis_[i] * params[i];
    return acc;
}

Matrix BivectorSubspace::coefficient_matrix() const {
    const auto& pairs = k_subsets_lex(ambient_, 2);
    Matrix m(basis_.size(), pairs.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Vector row = basis_[i].coefficient_vector();
        for (std::size_t j = 0; j < pairs.size(); ++j) m(i, j) = row[j];
    }
    return m;
}

BivectorSubspace BivectorSubspace::transformed(const Matrix& p) const {
    std::vector<Multivector> out;
    out.reserve(basis_.size());
    for (const auto& b : basis_) out.push_back(apply_linear_map(b, p));
    return BivectorSubspace(ambient_, std::move(out));
}

}  // namespace nilclass
