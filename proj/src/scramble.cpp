#include "nilclass/scramble.hpp"

namespace nilclass {

Matrix random_invertible_matrix(SplitMix64& rng, int n, long bound) {
    if (bound < 1) throw validation_error("scramble bound must be positive");
    while (true) {
        Matrix p(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const long num = static_cast<long>(rng.below(2 * bound + 1)) - bound;
                const long den = 1 + static_cast<long>(rng.below(bound));
                p(i, j) = Rational(num, den);
            }
        if (rank(p) == static_cast<std::size_t>(n)) return p;
    }
}

LieStructure scramble(const LieStructure& lie, std::uint64_t seed, long bound) {
    SplitMix64 rng(seed);
    const int n = lie.dim();
    const Matrix p = random_invertible_matrix(rng, n, bound);
    const Matrix pinv = *inverse(p);

    // New basis X'_q = sum_i p(i,q) X_i:
    // c'^m_{pq} = sum_k pinv(m,k) sum_{i<j} c^k_{ij} (p(i,p) p(j,q) - p(j,p) p(i,q)).
    std::vector<Multivector> out(n, Multivector(n, 2));
    for (int cp = 1; cp <= n; ++cp)
        for (int cq = cp + 1; cq <= n; ++cq) {
            Vector in_old(n);  // coefficients of [X'_p, X'_q] on the old basis
            for (int k = 1; k <= n; ++k) {
                Rational acc = 0;
                for (const auto& [mask, c] : lie.component(k).terms()) {
                    const auto idx = indices_from_mask(mask);
                    acc += c * (p(idx[0] - 1, cp - 1) * p(idx[1] - 1, cq - 1) -
                                p(idx[1] - 1, cp - 1) * p(idx[0] - 1, cq - 1));
                }
                in_old[k - 1] = acc;
            }
            const Vector in_new = pinv.apply(in_old);
            for (int m = 1; m <= n; ++m)
                if (in_new[m - 1] != 0) out[m - 1].add_term({cp, cq}, in_new[m - 1]);
        }
    return LieStructure(n, std::move(out));
}

CdgaStructure scramble(const CdgaStructure& cdga, std::uint64_t seed, long bound) {
    return dualize(scramble(undualize(cdga), seed, bound));
}

}  // namespace nilclass
