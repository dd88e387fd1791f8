#include "nilclass/filtration.hpp"

namespace nilclass {

namespace {

// Columns = d(x_k) on the lex Lambda^2 basis.
Matrix degree1_differential(const CdgaStructure& c) {
    const int n = c.dim();
    const auto& pairs = k_subsets_lex(n, 2);
    Matrix d(pairs.size(), n);
    for (int k = 1; k <= n; ++k) {
        const Vector col = c.dx(k).coefficient_vector();
        for (std::size_t r = 0; r < pairs.size(); ++r) d(r, k - 1) = col[r];
    }
    return d;
}

// C(n,2) x C(f,2) matrix whose columns span Lambda^2 of the row space of
// basis (an f x n matrix).
Matrix wedge_square_matrix(const Matrix& basis, int n) {
    const std::size_t f = basis.rows();
    const auto& pairs_small = k_subsets_lex(static_cast<int>(f), 2);
    const auto& pairs_big = k_subsets_lex(n, 2);
    Matrix w(pairs_big.size(), pairs_small.size());
    for (std::size_t col = 0; col < pairs_small.size(); ++col) {
        const auto idx = indices_from_mask(pairs_small[col]);
        Multivector a(n, 1), b(n, 1);
        for (int j = 1; j <= n; ++j) {
            a.add_term(1u << (j - 1), basis(idx[0] - 1, j - 1));
            b.add_term(1u << (j - 1), basis(idx[1] - 1, j - 1));
        }
        const Vector coeffs = wedge(a, b).coefficient_vector();
        for (std::size_t r = 0; r < pairs_big.size(); ++r) w(r, col) = coeffs[r];
    }
    return w;
}

Matrix rows_to_matrix(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

}  // namespace

FiltrationReport filtration(const CdgaStructure& cdga) {
    const int n = cdga.dim();
    const Matrix d = degree1_differential(cdga);

    FiltrationReport report;
    report.w0_basis = kernel_basis(d);
    report.f0 = static_cast<int>(report.w0_basis.size());
    report.f1 = n - report.f0;

    const RrefResult dref = rref(d);
    for (std::size_t p : dref.pivot_columns)
        report.f1_generators.push_back(static_cast<int>(p) + 1);

    if (report.f0 == n) {
        report.length = 0;
        report.imd = BivectorSubspace(n, {});
        return report;
    }

    // Iterate W_k = d^{-1}(Lambda^2 W_{k-1}) until it exhausts V.
    Matrix w_basis = rows_to_matrix(report.w0_basis, n);
    int steps = 0;
    while (w_basis.rows() < static_cast<std::size_t>(n)) {
        ++steps;
        if (steps > n) {
            report.length = -1;  // stalled: dual algebra not nilpotent
            return report;
        }
        const Matrix wedge2 = wedge_square_matrix(w_basis, n);
        // v in W_k  iff  d v = wedge2 * y for some y.
        Matrix stacked(d.rows(), d.cols() + wedge2.cols());
        for (std::size_t i = 0; i < d.rows(); ++i) {
            for (std::size_t j = 0; j < d.cols(); ++j) stacked(i, j) = d(i, j);
            for (std::size_t j = 0; j < wedge2.cols(); ++j)
                stacked(i, d.cols() + j) = -wedge2(i, j);
        }
        std::vector<Vector> projected;
        for (const Vector& kv : kernel_basis(stacked))
            projected.emplace_back(kv.begin(), kv.begin() + n);
        const RrefResult next = rref(rows_to_matrix(projected, n));
        if (next.rank == w_basis.rows()) {
            report.length = -1;
            return report;
        }
        Matrix reduced(next.rank, n);
        for (std::size_t i = 0; i < next.rank; ++i)
            for (int j = 0; j < n; ++j) reduced(i, j) = next.reduced(i, j);
        w_basis = std::move(reduced);
    }
    report.length = steps + 1;

    if (report.length <= 2) {
        // Express each pivot differential in Lambda^2 of the W_0 basis.
        const Matrix w0 = rows_to_matrix(report.w0_basis, n);
        const Matrix wedge2 = wedge_square_matrix(w0, n);
        std::vector<Multivector> imd_basis;
        for (int k : report.f1_generators) {
            const auto y = solve(wedge2, cdga.dx(k).coefficient_vector());
            if (!y) throw taxonomy_error("Im(d) not inside Lambda^2 W_0 for a length-2 filtration");
            imd_basis.push_back(Multivector::from_coefficient_vector(report.f0, 2, *y));
        }
        report.imd = BivectorSubspace(report.f0, std::move(imd_basis));
    }
    return report;
}

}  // namespace nilclass
