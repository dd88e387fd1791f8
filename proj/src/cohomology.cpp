#include "nilclass/cohomology.hpp"

namespace nilclass {

Matrix cochain_matrix(const CdgaStructure& cdga, int k) {
    const int n = cdga.dim();
    if (k < 0 || k > n) throw validation_error("cochain_matrix: degree out of range");
    const auto& dom = k_subsets_lex(n, k);
    const auto& cod = k_subsets_lex(n, k + 1);
    Matrix d(cod.size(), dom.size());
    for (std::size_t col = 0; col < dom.size(); ++col) {
        // d(x_{i1}...x_{ik}) = sum_j (-1)^(j-1) dx_{ij} ^ x_{rest}.
        const auto idx = indices_from_mask(dom[col]);
        Multivector image(n, k + 1);
        for (std::size_t j = 0; j < idx.size(); ++j) {
            Multivector rest(n, k - 1);
            rest.add_term(dom[col] ^ (1u << (idx[j] - 1)), (j % 2 == 0) ? 1 : -1);
            image = image + wedge(cdga.dx(idx[j]), rest);
        }
        for (const auto& [m, c] : image.terms()) d(subset_position(n, k + 1, m), col) = c;
    }
    return d;
}

std::vector<long long> betti(const CdgaStructure& cdga, int kmax) {
    const int n = cdga.dim();
    if (n > 8) throw validation_error("betti: dim > 8 unsupported");
    if (kmax < 0) throw validation_error("betti: negative degree bound");
    std::vector<long long> b(kmax + 1);
    std::size_t rank_prev = 0;  // rank of d_{-1} = 0
    for (int k = 0; k <= kmax; ++k) {
        const std::size_t dim_k = k_subsets_lex(n, k).size();
        const std::size_t rank_k = k < n ? rank(cochain_matrix(cdga, k)) : 0;
        b[k] = static_cast<long long>(dim_k - rank_k - rank_prev);
        rank_prev = rank_k;
    }
    return b;
}

int center_dim(const LieStructure& lie) {
    const int n = lie.dim();
    // v central iff sum_i v_i c^k_{ij} = 0 for all j, k.
    Matrix m(n * n, n);
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
            for (int i = 1; i <= n; ++i)
                m((j - 1) * n + (k - 1), i - 1) = lie.bracket_coefficient(i, j, k);
    return n - static_cast<int>(rank(m));
}

}  // namespace nilclass
