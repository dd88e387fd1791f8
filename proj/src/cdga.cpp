#include "nilclass/cdga.hpp"

#include <string>

#include "nilclass/cohomology.hpp"

namespace nilclass {

namespace {

std::vector<Multivector> checked_table(int dim, std::vector<Multivector> table,
                                       const char* what) {
    if (dim < 1 || dim > 8) throw validation_error(std::string(what) + ": dim must be in 1..8");
    if (table.size() != static_cast<std::size_t>(dim))
        throw validation_error(std::string(what) + ": need one entry per generator");
    for (const auto& m : table) {
        if (m.ambient() != dim || m.degree() != 2)
            throw validation_error(std::string(what) + ": entries must be bivectors on k^dim");
    }
    return table;
}

}  // namespace

CdgaStructure::CdgaStructure(int dim, std::vector<Multivector> differentials)
    : dim_(dim), dx_(checked_table(dim, std::move(differentials), "CdgaStructure")) {}

CdgaStructure CdgaStructure::trivial(int dim) {
    return CdgaStructure(dim, std::vector<Multivector>(dim, Multivector(dim, 2)));
}

Multivector CdgaStructure::d_of_vector(const Vector& v) const {
    if (v.size() != static_cast<std::size_t>(dim_))
        throw validation_error("d_of_vector: dimension mismatch");
    Multivector acc(dim_, 2);
    for (int k = 1; k <= dim_; ++k)
        if (v[k - 1] != 0) acc = acc + dx_[k - 1] * v[k - 1];
    return acc;
}

void CdgaStructure::validate() const {
    // d^2 x_k = d_2 applied to the coefficient vector of dx_k; the degree-2
    // cochain matrix already encodes the Leibniz expansion of d(x_i x_j).
    const Matrix d2 = cochain_matrix(*this, 2);
    for (int k = 1; k <= dim_; ++k) {
        const Vector image = d2.apply(dx_[k - 1].coefficient_vector());
        for (const Rational& c : image)
            if (c != 0)
                throw validation_error("not a CDGA / Jacobi fails (d^2 x_" + std::to_string(k) +
                                       " != 0)");
    }
}

LieStructure::LieStructure(int dim, std::vector<Multivector> brackets)
    : dim_(dim), c_(checked_table(dim, std::move(brackets), "LieStructure")) {}

LieStructure LieStructure::abelian(int dim) {
    return LieStructure(dim, std::vector<Multivector>(dim, Multivector(dim, 2)));
}

Rational LieStructure::bracket_coefficient(int i, int j, int k) const {
    if (i == j) return Rational(0);
    if (i < j) return c_[k - 1].coefficient(mask_from_indices({i, j}, dim_));
    return -c_[k - 1].coefficient(mask_from_indices({j, i}, dim_));
}

void LieStructure::validate() const { dualize(*this).validate(); }

int LieStructure::nilpotency_step() const {
    // Lower central series on coordinate subspaces: g_1 = g, g_{m+1} = [g, g_m].
    Matrix current = Matrix::identity(dim_);  // rows span g_m
    int step = 0;
    while (true) {
        ++step;
        // Span of [X_i, v] over all i and basis rows v of current.
        std::vector<Vector> rows;
        for (std::size_t r = 0; r < current.rows(); ++r) {
            for (int i = 1; i <= dim_; ++i) {
                Vector w(dim_);
                bool nonzero = false;
                for (int k = 1; k <= dim_; ++k) {
                    Rational acc = 0;
                    for (int j = 1; j <= dim_; ++j) {
                        if (current(r, j - 1) == 0) continue;
                        acc += current(r, j - 1) * bracket_coefficient(i, j, k);
                    }
                    w[k - 1] = acc;
                    nonzero = nonzero || acc != 0;
                }
                if (nonzero) rows.push_back(std::move(w));
            }
        }
        if (rows.empty()) return step;
        Matrix next(rows.size(), dim_);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (int j = 0; j < dim_; ++j) next(r, j) = rows[r][j];
        const RrefResult rr = rref(next);
        Matrix reduced(rr.rank, dim_);
        for (std::size_t r = 0; r < rr.rank; ++r)
            for (int j = 0; j < dim_; ++j) reduced(r, j) = rr.reduced(r, j);
        if (reduced.rows() == current.rows() && reduced == current)
            throw validation_error("lower central series does not terminate: not nilpotent");
        current = std::move(reduced);
        if (step > dim_) throw validation_error("lower central series does not terminate: not nilpotent");
    }
}

CdgaStructure dualize(const LieStructure& lie) {
    std::vector<Multivector> dx;
    dx.reserve(lie.dim());
    for (const auto& comp : lie.components()) dx.push_back(comp * Rational(-1));
    return CdgaStructure(lie.dim(), std::move(dx));
}

LieStructure undualize(const CdgaStructure& cdga) {
    std::vector<Multivector> c;
    c.reserve(cdga.dim());
    for (const auto& d : cdga.differentials()) c.push_back(d * Rational(-1));
    return LieStructure(cdga.dim(), std::move(c));
}

}  // namespace nilclass
